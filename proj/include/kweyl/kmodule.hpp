#pragma once

#include <cstdint>
#include <vector>

#include "kweyl/steinberg.hpp"

namespace kweyl {

/// Element of the coefficient module B: free components (W-invariant ring
/// elements standing for R(G)^m) plus residues of the rank-one torsion
/// summand R(G)/(2, x + x^{-1}) of the SU(2) example. In the flag model the
/// single component is an arbitrary ring element (B = R(T)).
template <class S>
struct BElem {
    std::vector<LaurentPoly<S>> comps;
    std::vector<std::uint8_t> torsion; // residues in {0,1}

    bool is_zero() const {
        for (const auto& c : comps)
            if (!c.is_zero()) return false;
        for (auto t : torsion)
            if (t) return false;
        return true;
    }

    friend bool operator==(const BElem& a, const BElem& b) {
        return a.comps == b.comps && a.torsion == b.torsion;
    }
    friend bool operator!=(const BElem& a, const BElem& b) { return !(a == b); }
};

/// Element of the induced module A = R(T) (x)_{R(G)} B in Steinberg
/// coordinates: a = sum_w u_w (x) coords[w].
template <class S>
struct InducedElement {
    std::vector<BElem<S>> coords;

    bool is_zero() const {
        for (const auto& b : coords)
            if (!b.is_zero()) return false;
        return true;
    }

    friend bool operator==(const InducedElement& a, const InducedElement& b) { return a.coords == b.coords; }
    friend bool operator!=(const InducedElement& a, const InducedElement& b) { return !(a == b); }
};

/// The module K_T(X) of an abstractly presented K_G(X) = B, carrying the
/// Hecke ring action on the R(T) factor. B is free of rank m, optionally
/// plus torsion summands (SU(2) only), or the flag model B = R(T).
template <class S>
class InducedModule {
public:
    /// `degrees` is the inert Z/2 grading label of the free summands (0 =
    /// even, 1 = odd); it is carried and reported but triggers no sign rules
    /// (the worked examples are concentrated in even degree).
    InducedModule(SteinbergBasis<S> basis, int free_rank, int torsion_rank, std::vector<int> degrees = {})
        : basis_(std::move(basis)), free_rank_(free_rank), torsion_rank_(torsion_rank),
          degrees_(std::move(degrees)) {
        if (free_rank_ < 0 || torsion_rank_ < 0) throw DatumError("module ranks must be nonnegative");
        if (degrees_.empty()) degrees_.assign(free_rank_, 0);
        if (static_cast<int>(degrees_.size()) != free_rank_)
            throw DatumError("one grading label per free summand");
        for (int g : degrees_)
            if (g != 0 && g != 1) throw DatumError("grading labels are 0 (even) or 1 (odd)");
        if (torsion_rank_ > 0) {
            if constexpr (!std::is_same_v<S, Int>)
                throw DatumError("torsion coefficients require the integer scalar ring");
            if (basis_.datum()->semisimple_rank() != 1 || basis_.datum()->rank() != 1 ||
                basis_.datum()->positive_roots().size() != 1)
                throw DatumError("the torsion coefficient module is specific to SU(2)");
        }
        init_cached_matrices();
        if (is_algebra()) init_product_table();
    }

    /// Flag model: B = R(T) as an R(G)-module via the Steinberg coordinates,
    /// with the Hecke action on the first tensor factor.
    static InducedModule flag_model(const DatumPtr& datum) {
        InducedModule m(steinberg_basis<S>(datum), 1, 0);
        m.flag_ = true;
        return m;
    }

    const SteinbergBasis<S>& basis() const { return basis_; }
    const DatumPtr& datum() const { return basis_.datum(); }
    int free_rank() const { return free_rank_; }
    int torsion_rank() const { return torsion_rank_; }
    bool is_flag() const { return flag_; }
    bool is_algebra() const { return free_rank_ == 1 && torsion_rank_ == 0; }
    const std::vector<int>& summand_degrees() const { return degrees_; }

    // --- element construction ---

    BElem<S> zero_b() const {
        BElem<S> b;
        b.comps.assign(free_rank_, LaurentPoly<S>::zero(datum()));
        b.torsion.assign(torsion_rank_, 0);
        return b;
    }

    BElem<S> make_b(std::vector<LaurentPoly<S>> comps, std::vector<std::uint8_t> torsion = {}) const {
        BElem<S> b;
        b.comps = std::move(comps);
        b.torsion = std::move(torsion);
        b.torsion.resize(torsion_rank_, 0);
        if (static_cast<int>(b.comps.size()) != free_rank_) throw DatumError("wrong number of free components");
        for (auto& t : b.torsion) t &= 1;
        if (!flag_)
            for (const auto& c : b.comps)
                if (!is_invariant(c)) throw DatumError("free components must be W-invariant");
        return b;
    }

    InducedElement<S> zero() const {
        InducedElement<S> a;
        a.coords.assign(basis_.size(), zero_b());
        return a;
    }

    InducedElement<S> make(std::vector<BElem<S>> coords) const {
        if (static_cast<int>(coords.size()) != basis_.size())
            throw DatumError("wrong number of Steinberg coordinates");
        InducedElement<S> a;
        a.coords.reserve(coords.size());
        for (auto& b : coords) a.coords.push_back(make_b(std::move(b.comps), std::move(b.torsion)));
        return a;
    }

    /// u (x) b for a ring element u, expanded into Steinberg coordinates.
    InducedElement<S> embed(const LaurentPoly<S>& u, const BElem<S>& b) const {
        auto c = expand_in_basis(u, basis_);
        InducedElement<S> a = zero();
        for (int w = 0; w < basis_.size(); ++w) a.coords[w] = scalar_apply(c[w], b);
        return a;
    }

    // --- structure maps ---

    InducedElement<S> j_pullback(const BElem<S>& b) const {
        InducedElement<S> a = zero();
        a.coords[0] = b;
        return a;
    }

    BElem<S> j_pushforward(const InducedElement<S>& a) const {
        check(a);
        BElem<S> out = zero_b();
        for (int w = 0; w < basis_.size(); ++w)
            add_to(out, scalar_apply(basis_.gram()[w][0], a.coords[w])); // gram[w][0] = partial_{w0}(u_w)
        return out;
    }

    /// Action of a Hecke ring element through its matrix on the basis.
    InducedElement<S> act(const TwistedOperator<S>& op, const InducedElement<S>& a) const {
        check(a);
        return act_matrix(operator_matrix(op, basis_), a);
    }

    /// Scalar action of R(T) on the first factor (the module structure map).
    InducedElement<S> ring_scalar_mul(const LaurentPoly<S>& u, const InducedElement<S>& a) const {
        return act(op_scalar(u), a);
    }

    InducedElement<S> add(const InducedElement<S>& a, const InducedElement<S>& b) const {
        check(a);
        check(b);
        InducedElement<S> out = a;
        for (int w = 0; w < basis_.size(); ++w) add_to(out.coords[w], b.coords[w]);
        return out;
    }

    /// B-scalar action: multiply every coordinate by an invariant scalar.
    InducedElement<S> b_scalar_mul(const LaurentPoly<S>& v, const InducedElement<S>& a) const {
        check(a);
        if (!is_invariant(v)) throw DatumError("B-scalars must be W-invariant");
        InducedElement<S> out = a;
        for (auto& b : out.coords) b = scalar_apply(v, b);
        return out;
    }

    // --- invariance ---

    bool is_weyl_invariant(const InducedElement<S>& a) const {
        check(a);
        for (const auto& m : simple_matrices_)
            if (act_matrix(m, a) != a) return false;
        return true;
    }

    bool is_hecke_invariant(const InducedElement<S>& a) const {
        check(a);
        for (const auto& m : prime_matrices_)
            if (!act_matrix(m, a).is_zero()) return false;
        if (!is_weyl_invariant(a)) throw Error("internal: Hecke invariance must imply Weyl invariance");
        return true;
    }

    /// Weyl-formula projection: b = j_*(a), with the verification that
    /// j^*(b) equals partial_{w0}(a) and that the projection is Hecke
    /// invariant.
    std::pair<BElem<S>, bool> project_weyl_formula(const InducedElement<S>& a) const {
        BElem<S> b = j_pushforward(a);
        InducedElement<S> top = act_matrix(top_matrix_, a);
        bool ok = (j_pullback(b) == top) && is_hecke_invariant(top);
        return {std::move(b), ok};
    }

    /// P_X(a1, a2) = j_*(a1 a2); requires B to be an algebra (free of rank 1
    /// or the flag model).
    BElem<S> module_pairing(const InducedElement<S>& a1, const InducedElement<S>& a2) const {
        check(a1);
        check(a2);
        if (!is_algebra()) throw DatumError("module pairing requires an algebra coefficient module");
        const int n = basis_.size();
        InducedElement<S> prod = zero();
        for (int w = 0; w < n; ++w)
            for (int v = 0; v < n; ++v) {
                if (a1.coords[w].comps[0].is_zero() || a2.coords[v].comps[0].is_zero()) continue;
                LaurentPoly<S> bb = a1.coords[w].comps[0] * a2.coords[v].comps[0];
                for (int z = 0; z < n; ++z) {
                    if (product_table_[w][v][z].is_zero()) continue;
                    prod.coords[z].comps[0] += product_table_[w][v][z] * bb;
                }
            }
        return j_pushforward(prod);
    }

    /// Flag model: projection of a onto the second factor, i.e. the content
    /// of partial_{w0}(a) = 1 (x) (result).
    LaurentPoly<S> flag_project(const InducedElement<S>& a) const {
        if (!flag_) throw DatumError("flag projection requires the flag model");
        InducedElement<S> top = act_matrix(top_matrix_, a);
        for (int w = 1; w < basis_.size(); ++w)
            if (!top.coords[w].is_zero()) throw Error("internal: top projection escaped the identity coordinate");
        return top.coords[0].comps[0];
    }

private:
    void check(const InducedElement<S>& a) const {
        if (static_cast<int>(a.coords.size()) != basis_.size())
            throw DatumError("element does not belong to this module");
    }

    /// Image of the torsion quotient map R(G) -> R(G)/(2, x + x^{-1}) = F_2:
    /// the constant coefficient mod 2.
    static std::uint8_t torsion_residue(const LaurentPoly<S>& invariant) {
        if constexpr (std::is_same_v<S, Int>) {
            Int c = invariant.coefficient(IVector::Zero(invariant.datum()->rank()));
            return static_cast<std::uint8_t>(c % 2 != 0);
        } else {
            throw DatumError("torsion coefficients require the integer scalar ring");
        }
    }

    BElem<S> scalar_apply(const LaurentPoly<S>& c, const BElem<S>& b) const {
        BElem<S> out;
        out.comps.reserve(b.comps.size());
        for (const auto& comp : b.comps) out.comps.push_back(c * comp);
        out.torsion.reserve(b.torsion.size());
        for (auto t : b.torsion) out.torsion.push_back(t & torsion_residue(c));
        return out;
    }

    void add_to(BElem<S>& target, const BElem<S>& inc) const {
        for (std::size_t i = 0; i < target.comps.size(); ++i) target.comps[i] += inc.comps[i];
        for (std::size_t i = 0; i < target.torsion.size(); ++i) target.torsion[i] ^= inc.torsion[i];
    }

    InducedElement<S> act_matrix(const std::vector<std::vector<LaurentPoly<S>>>& m,
                                 const InducedElement<S>& a) const {
        InducedElement<S> out = zero();
        for (int v = 0; v < basis_.size(); ++v)
            for (int w = 0; w < basis_.size(); ++w) {
                if (m[v][w].is_zero() || a.coords[w].is_zero()) continue;
                add_to(out.coords[v], scalar_apply(m[v][w], a.coords[w]));
            }
        return out;
    }

    void init_cached_matrices() {
        const DatumPtr& d = datum();
        auto primes = op_partial_all<S>(d, OperatorKind::delta_prime);
        for (int w = 1; w < d->weyl_order(); ++w)
            prime_matrices_.push_back(operator_matrix(primes[w], basis_));
        for (int i = 0; i < d->semisimple_rank(); ++i)
            simple_matrices_.push_back(operator_matrix(op_weyl<S>(d, d->simple_reflection(i)), basis_));
        top_matrix_ = operator_matrix(op_partial<S>(d, OperatorKind::delta, d->longest_element()), basis_);
    }

    void init_product_table() {
        const int n = basis_.size();
        product_table_.assign(n, std::vector<std::vector<LaurentPoly<S>>>(n));
        for (int w = 0; w < n; ++w)
            for (int v = 0; v < n; ++v)
                product_table_[w][v] = expand_in_basis(basis_.elements()[w] * basis_.elements()[v], basis_);
    }

    SteinbergBasis<S> basis_;
    int free_rank_ = 0;
    int torsion_rank_ = 0;
    std::vector<int> degrees_;
    bool flag_ = false;
    std::vector<std::vector<std::vector<LaurentPoly<S>>>> prime_matrices_; // w != 1, by id order
    std::vector<std::vector<std::vector<LaurentPoly<S>>>> simple_matrices_;
    std::vector<std::vector<LaurentPoly<S>>> top_matrix_;
    std::vector<std::vector<std::vector<LaurentPoly<S>>>> product_table_;
};

/// Report of the SU(2) counterexample run: a Weyl-invariant class that is
/// not Hecke invariant, the exhaustive identification of the Hecke
/// invariants with the pullback image, and the torsion-free comparison.
struct McleodReport {
    bool witness_weyl_invariant = false;
    bool witness_hecke_invariant = true; // expected false
    bool hecke_invariants_match_pullback_image = false;
    bool torsion_free_weyl_equals_hecke = false;
    int grid_points = 0;
    int samples = 0;

    bool pass() const {
        return witness_weyl_invariant && !witness_hecke_invariant && hecke_invariants_match_pullback_image &&
               torsion_free_weyl_equals_hecke;
    }
};

McleodReport mcleod_report(std::uint64_t seed = 1);

} // namespace kweyl
