#pragma once

#include <Eigen/Core>

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "kweyl/cartan.hpp"
#include "kweyl/exact_linalg.hpp"
#include "kweyl/scalars.hpp"

namespace kweyl {

class RootDatum;
using DatumPtr = std::shared_ptr<const RootDatum>;

enum class LatticeChoice { simply_connected, adjoint, explicit_basis };

/// One Weyl group element as returned by enumerate_weyl. Everything is a
/// copy; the authoritative tables live in the RootDatum.
struct WeylElement {
    int id = 0;
    std::vector<int> word; // canonical reduced word, 0-based simple indices
    int length = 0;
    int sign = 1;
    IMatrix matrix; // action on fundamental-weight coordinates
};

/// Root datum of a compact connected group: Cartan matrix, chosen character
/// lattice between root and weight lattice, roots, rho, and the full Weyl
/// group with canonical reduced words and right-shift tables.
///
/// All weight vectors use fundamental-weight coordinates on the semisimple
/// part followed by the free torus coordinates. Immutable after
/// construction; safe to share across threads.
class RootDatum {
public:
    static DatumPtr build(const std::string& type_string, LatticeChoice choice, int torus_factor = 0,
                          const IMatrix* explicit_lattice = nullptr);

    int rank() const { return rank_; }
    int semisimple_rank() const { return ss_rank_; }
    int torus_factor() const { return torus_; }
    const std::string& type_string() const { return type_string_; }
    LatticeChoice lattice_choice() const { return lattice_choice_; }

    const IMatrix& cartan() const { return cartan_; }
    /// Columns form a basis of the chosen lattice X(T).
    const IMatrix& lattice_basis() const { return lattice_; }
    Int lattice_determinant() const;

    const std::vector<IVector>& simple_roots() const { return simple_roots_; }
    const std::vector<IVector>& positive_roots() const { return positive_roots_; }
    /// Coordinates of the positive roots in the simple-root basis.
    const std::vector<IVector>& positive_roots_alpha() const { return positive_alpha_; }
    const IVector& rho() const { return rho_; }
    const std::vector<IVector>& fundamental_weights() const { return fundamental_weights_; }

    /// Index of +-v in the positive root list: (index, sign), or nullopt.
    std::optional<std::pair<int, int>> root_index(const IVector& v) const;
    /// Pairing <lambda, alpha^vee> for the positive root of the given index.
    int coroot_pairing(int root_index, const IVector& lambda) const;
    /// Weyl id of the reflection in the positive root of the given index.
    int reflection_id(int root_index) const { return reflection_ids_[root_index]; }

    bool in_lattice(const IVector& v) const;
    bool is_dominant(const IVector& v) const;

    // --- Weyl group tables ---
    int weyl_order() const { return static_cast<int>(mats_.size()); }
    const IMatrix& weyl_matrix(int w) const { return mats_[w]; }
    const std::vector<int>& weyl_word(int w) const { return words_[w]; }
    int weyl_length(int w) const { return static_cast<int>(words_[w].size()); }
    int weyl_sign(int w) const { return weyl_length(w) % 2 == 0 ? 1 : -1; }
    int longest_element() const { return longest_; }
    int simple_reflection(int i) const { return shift(0, i); }
    /// Right shift w -> w * s_i via the precomputed table.
    int shift(int w, int i) const { return shifts_[static_cast<std::size_t>(w) * ss_rank_ + i]; }
    int product(int a, int b) const;
    int inverse(int w) const { return inverses_[w]; }
    int element_from_word(std::span<const int> word) const;
    IVector act(int w, const IVector& v) const { return mats_[w] * v; }

    RootDatum(const RootDatum&) = delete;
    RootDatum& operator=(const RootDatum&) = delete;

private:
    RootDatum() = default;
    void build_weyl_group();
    void build_positive_roots();
    void validate_lattice() const;

    std::string type_string_;
    LatticeChoice lattice_choice_ = LatticeChoice::simply_connected;
    int rank_ = 0, ss_rank_ = 0, torus_ = 0;
    IMatrix cartan_;   // ss_rank x ss_rank
    IMatrix lattice_;  // rank x rank, columns = lattice basis
    RingMatrix<Int> lattice_adj_;
    Int lattice_det_;
    std::vector<long long> symmetrizers_;
    std::vector<IVector> simple_roots_, positive_roots_, positive_alpha_, fundamental_weights_;
    std::vector<IVector> coroot_rows_; // row vector of <., alpha^vee> per positive root
    std::vector<int> reflection_ids_;
    IVector rho_;

    std::vector<IMatrix> mats_;
    std::vector<std::vector<int>> words_;
    std::vector<int> shifts_;
    std::vector<int> inverses_;
    int longest_ = 0;
};

/// Builds and validates a root datum from a Cartan type expression.
DatumPtr build_root_datum(const std::string& type_string, LatticeChoice choice, int torus_factor = 0,
                          const IMatrix* explicit_lattice = nullptr);

/// The full Weyl group, identity first, in canonical id order.
std::vector<WeylElement> enumerate_weyl(const DatumPtr& datum);

/// All reduced words of the element with the given id (exhaustive).
std::vector<std::vector<int>> all_reduced_words(const RootDatum& datum, int w);

/// Embedding of character lattices induced by a covering homomorphism:
/// same Cartan data, sub-lattice contained in the super-lattice.
struct LatticeExtension {
    DatumPtr sub;
    DatumPtr super;
    Int index; // [super : sub]
};

LatticeExtension lattice_extension(const DatumPtr& datum, const DatumPtr& super_datum);

} // namespace kweyl
