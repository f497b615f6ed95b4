#include "kweyl/root_datum.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "kweyl/errors.hpp"

namespace kweyl {

namespace {

constexpr long long kMaxWeylOrder = 200000;

std::vector<int> matrix_key(const IMatrix& m) {
    std::vector<int> key(static_cast<std::size_t>(m.size()));
    std::copy(m.data(), m.data() + m.size(), key.begin());
    return key;
}

struct VecIntHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace

DatumPtr RootDatum::build(const std::string& type_string, LatticeChoice choice, int torus_factor,
                          const IMatrix* explicit_lattice) {
    CartanType type = parse_type_string(type_string);
    if (torus_factor < 0) throw DatumError("torus factor must be nonnegative");
    type.torus += torus_factor;
    {
        std::ostringstream name; // re-normalize with the extra torus directions
        for (std::size_t i = 0; i < type.factors.size(); ++i) {
            if (i) name << 'x';
            name << type.factors[i].family << type.factors[i].rank;
        }
        if (type.torus > 0) {
            if (!type.factors.empty()) name << 'x';
            name << 'T' << type.torus;
        }
        type.normalized = name.str();
    }
    if (weyl_group_order(type) > kMaxWeylOrder)
        throw DatumError("Weyl group order exceeds the supported desk-scale limit");

    auto datum = std::shared_ptr<RootDatum>(new RootDatum());
    datum->type_string_ = type.normalized;
    datum->lattice_choice_ = choice;
    datum->torus_ = type.torus;
    datum->cartan_ = cartan_matrix(type);
    validate_cartan(datum->cartan_);
    datum->ss_rank_ = static_cast<int>(datum->cartan_.rows());
    datum->rank_ = datum->ss_rank_ + datum->torus_;
    datum->symmetrizers_ = cartan_symmetrizers(datum->cartan_);

    const int n = datum->rank_, ss = datum->ss_rank_;
    datum->simple_roots_.reserve(ss);
    for (int i = 0; i < ss; ++i) {
        IVector a = IVector::Zero(n);
        a.head(ss) = datum->cartan_.col(i);
        datum->simple_roots_.push_back(a);
    }
    datum->fundamental_weights_.reserve(ss);
    for (int i = 0; i < ss; ++i) {
        IVector w = IVector::Zero(n);
        w[i] = 1;
        datum->fundamental_weights_.push_back(w);
    }

    switch (choice) {
    case LatticeChoice::simply_connected:
        datum->lattice_ = IMatrix::Identity(n, n);
        break;
    case LatticeChoice::adjoint: {
        datum->lattice_ = IMatrix::Identity(n, n);
        datum->lattice_.block(0, 0, ss, ss) = datum->cartan_;
        break;
    }
    case LatticeChoice::explicit_basis:
        if (explicit_lattice == nullptr) throw DatumError("explicit lattice choice requires a basis matrix");
        if (explicit_lattice->rows() != n || explicit_lattice->cols() != n)
            throw DatumError("explicit lattice basis must be rank x rank (" + std::to_string(n) + ")");
        datum->lattice_ = *explicit_lattice;
        break;
    }
    try {
        auto adj = adjugate_det<Int, IntOps>(to_ring_matrix(datum->lattice_), IntOps{});
        datum->lattice_adj_ = std::move(adj.adjugate);
        datum->lattice_det_ = adj.det;
    } catch (const CheckError&) {
        throw DatumError("lattice basis is singular");
    }

    datum->build_weyl_group();
    datum->build_positive_roots();
    datum->validate_lattice();
    return datum;
}

void RootDatum::build_weyl_group() {
    const int n = rank_, ss = ss_rank_;
    std::vector<IMatrix> gens;
    gens.reserve(ss);
    for (int i = 0; i < ss; ++i) {
        IMatrix s = IMatrix::Identity(n, n);
        // s_i(c) = c - c_i * alpha_i
        s.col(i) -= simple_roots_[i];
        gens.push_back(s);
    }

    std::unordered_map<std::vector<int>, int, VecIntHash> index;
    mats_.clear();
    words_.clear();
    shifts_.clear();
    mats_.push_back(IMatrix::Identity(n, n));
    words_.push_back({});
    index.emplace(matrix_key(mats_[0]), 0);
    for (std::size_t w = 0; w < mats_.size(); ++w) {
        shifts_.resize((w + 1) * ss, -1);
        for (int i = 0; i < ss; ++i) {
            IMatrix m = mats_[w] * gens[i];
            auto key = matrix_key(m);
            auto it = index.find(key);
            int id;
            if (it == index.end()) {
                id = static_cast<int>(mats_.size());
                index.emplace(std::move(key), id);
                mats_.push_back(std::move(m));
                auto word = words_[w];
                word.push_back(i);
                words_.push_back(std::move(word));
            } else {
                id = it->second;
            }
            shifts_[w * ss + i] = id;
        }
        if (mats_.size() > static_cast<std::size_t>(kMaxWeylOrder))
            throw DatumError("Weyl group enumeration exceeded the supported limit");
    }

    inverses_.resize(mats_.size());
    for (std::size_t w = 0; w < mats_.size(); ++w) {
        int id = 0;
        const auto& word = words_[w];
        for (auto it = word.rbegin(); it != word.rend(); ++it) id = shift(id, *it);
        inverses_[w] = id;
    }
    longest_ = 0;
    for (std::size_t w = 1; w < mats_.size(); ++w)
        if (words_[w].size() > words_[longest_].size()) longest_ = static_cast<int>(w);
}

void RootDatum::build_positive_roots() {
    const int ss = ss_rank_;
    // Orbit of the simple roots, tracked in both coordinate systems; a root is
    // positive iff its simple-root coordinates are all nonnegative.
    std::set<std::vector<int>> seen;
    std::vector<std::pair<IVector, IVector>> frontier; // (omega-coords, alpha-coords)
    std::vector<std::pair<IVector, IVector>> all;
    for (int i = 0; i < ss; ++i) {
        IVector a = IVector::Zero(ss);
        a[i] = 1;
        frontier.emplace_back(simple_roots_[i], a);
    }
    for (auto& p : frontier) seen.insert(std::vector<int>(p.first.data(), p.first.data() + rank_));
    all = frontier;
    while (!frontier.empty()) {
        std::vector<std::pair<IVector, IVector>> next;
        for (const auto& [v, a] : frontier) {
            for (int i = 0; i < ss; ++i) {
                IVector v2 = v - v[i] * simple_roots_[i];
                IVector a2 = a;
                a2[i] -= cartan_.row(i).dot(a.head(ss));
                std::vector<int> key(v2.data(), v2.data() + rank_);
                if (seen.insert(std::move(key)).second) {
                    next.emplace_back(v2, a2);
                    all.emplace_back(v2, a2);
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<std::pair<IVector, IVector>> positives;
    for (const auto& [v, a] : all) {
        bool nonneg = true;
        for (int i = 0; i < ss; ++i)
            if (a[i] < 0) nonneg = false;
        if (nonneg) positives.emplace_back(v, a);
    }
    // Deterministic order: by height, then lexicographically.
    std::sort(positives.begin(), positives.end(), [](const auto& x, const auto& y) {
        int hx = x.second.sum(), hy = y.second.sum();
        if (hx != hy) return hx < hy;
        return LexLess{}(x.first, y.first);
    });
    positive_roots_.clear();
    positive_alpha_.clear();
    for (auto& [v, a] : positives) {
        positive_roots_.push_back(v);
        positive_alpha_.push_back(a);
    }

    IVector two_rho = IVector::Zero(rank_);
    for (const auto& v : positive_roots_) two_rho += v;
    rho_ = IVector::Zero(rank_);
    for (int i = 0; i < rank_; ++i) {
        if (two_rho[i] % 2 != 0) throw DatumError("internal: rho is not integral in fundamental-weight coordinates");
        rho_[i] = two_rho[i] / 2;
    }

    // Coroot pairings and reflection ids.
    std::unordered_map<std::vector<int>, int, VecIntHash> mat_index;
    mat_index.reserve(mats_.size());
    for (std::size_t w = 0; w < mats_.size(); ++w) mat_index.emplace(matrix_key(mats_[w]), static_cast<int>(w));
    coroot_rows_.clear();
    reflection_ids_.clear();
    for (std::size_t k = 0; k < positive_roots_.size(); ++k) {
        const IVector& root = positive_roots_[k];
        const IVector& ac = positive_alpha_[k];
        long long norm2 = 0; // (alpha, alpha) = sum_j c_j d_j f_j
        for (int j = 0; j < ss; ++j) norm2 += static_cast<long long>(ac[j]) * symmetrizers_[j] * root[j];
        IVector row = IVector::Zero(rank_);
        for (int j = 0; j < ss; ++j) {
            long long num = 2ll * ac[j] * symmetrizers_[j]; // 2 (omega_j, alpha)
            if (num % norm2 != 0) throw DatumError("internal: non-integral coroot pairing");
            row[j] = static_cast<int>(num / norm2);
        }
        coroot_rows_.push_back(row);
        IMatrix refl = IMatrix::Identity(rank_, rank_);
        for (int j = 0; j < rank_; ++j) refl.col(j) -= row[j] * root;
        auto it = mat_index.find(matrix_key(refl));
        if (it == mat_index.end()) throw DatumError("internal: reflection not found in Weyl group");
        reflection_ids_.push_back(it->second);
    }
}

void RootDatum::validate_lattice() const {
    for (const auto& a : simple_roots_)
        if (!in_lattice(a)) throw DatumError("lattice does not contain the root lattice");
    for (int w = 0; w < weyl_order(); ++w) {
        IVector diff = rho_ - act(w, rho_);
        if (!in_lattice(diff)) throw DatumError("internal: rho - w(rho) escapes the lattice");
    }
}

Int RootDatum::lattice_determinant() const { return lattice_det_; }

std::optional<std::pair<int, int>> RootDatum::root_index(const IVector& v) const {
    for (std::size_t k = 0; k < positive_roots_.size(); ++k) {
        if (positive_roots_[k] == v) return std::make_pair(static_cast<int>(k), 1);
        if (positive_roots_[k] == -v) return std::make_pair(static_cast<int>(k), -1);
    }
    return std::nullopt;
}

int RootDatum::coroot_pairing(int root_index, const IVector& lambda) const {
    return coroot_rows_[root_index].dot(lambda);
}

bool RootDatum::in_lattice(const IVector& v) const {
    // v in span(L) iff adj(L) v == 0 mod det(L).
    for (int i = 0; i < rank_; ++i) {
        Int acc = 0;
        for (int j = 0; j < rank_; ++j) acc += lattice_adj_[i][j] * v[j];
        if (acc % lattice_det_ != 0) return false;
    }
    return true;
}

bool RootDatum::is_dominant(const IVector& v) const {
    for (int i = 0; i < ss_rank_; ++i)
        if (v[i] < 0) return false;
    return true;
}

int RootDatum::product(int a, int b) const {
    int id = a;
    for (int s : words_[b]) id = shift(id, s);
    return id;
}

int RootDatum::element_from_word(std::span<const int> word) const {
    int id = 0;
    for (int s : word) {
        if (s < 0 || s >= ss_rank_) throw DatumError("simple reflection index out of range");
        id = shift(id, s);
    }
    return id;
}

DatumPtr build_root_datum(const std::string& type_string, LatticeChoice choice, int torus_factor,
                          const IMatrix* explicit_lattice) {
    return RootDatum::build(type_string, choice, torus_factor, explicit_lattice);
}

std::vector<WeylElement> enumerate_weyl(const DatumPtr& datum) {
    std::vector<WeylElement> out;
    out.reserve(datum->weyl_order());
    for (int w = 0; w < datum->weyl_order(); ++w) {
        WeylElement e;
        e.id = w;
        e.word = datum->weyl_word(w);
        e.length = datum->weyl_length(w);
        e.sign = datum->weyl_sign(w);
        e.matrix = datum->weyl_matrix(w);
        out.push_back(std::move(e));
    }
    return out;
}

namespace {

void reduced_words_rec(const RootDatum& d, int w, std::map<int, std::vector<std::vector<int>>>& memo) {
    if (memo.count(w)) return;
    if (d.weyl_length(w) == 0) {
        memo[w] = {{}};
        return;
    }
    std::vector<std::vector<int>> words;
    for (int s = 0; s < d.semisimple_rank(); ++s) {
        int v = d.shift(w, s);
        if (d.weyl_length(v) < d.weyl_length(w)) {
            reduced_words_rec(d, v, memo);
            for (auto word : memo[v]) {
                word.push_back(s);
                words.push_back(std::move(word));
            }
        }
    }
    memo[w] = std::move(words);
}

} // namespace

std::vector<std::vector<int>> all_reduced_words(const RootDatum& datum, int w) {
    if (w < 0 || w >= datum.weyl_order()) throw DatumError("Weyl element id out of range");
    std::map<int, std::vector<std::vector<int>>> memo;
    reduced_words_rec(datum, w, memo);
    return memo[w];
}

LatticeExtension lattice_extension(const DatumPtr& datum, const DatumPtr& super_datum) {
    if (datum->semisimple_rank() != super_datum->semisimple_rank() ||
        datum->torus_factor() != super_datum->torus_factor() || datum->cartan() != super_datum->cartan())
        throw DatumError("lattice extension requires identical Cartan data");
    // Identical Cartan data implies identical root and Weyl enumerations.
    if (datum->positive_roots() != super_datum->positive_roots() ||
        datum->weyl_order() != super_datum->weyl_order())
        throw DatumError("internal: incompatible enumerations for equal Cartan data");
    for (int j = 0; j < datum->rank(); ++j) {
        IVector col = datum->lattice_basis().col(j);
        if (!super_datum->in_lattice(col))
            throw DatumError("lattice is not contained in the super-lattice");
    }
    Int index;
    if (!scalar_divides(abs(datum->lattice_determinant()), abs(super_datum->lattice_determinant()), index))
        throw DatumError("internal: lattice index is not integral");
    return LatticeExtension{datum, super_datum, index};
}

} // namespace kweyl
