#pragma once

// Test-only oracles, kept independent of the library's operator machinery.

#include <set>
#include <vector>

#include "kweyl/laurent.hpp"
#include "kweyl/root_datum.hpp"

namespace oracles {

using kweyl::IMatrix;
using kweyl::Int;
using kweyl::IVector;

/// Naive closure of the simple reflection matrices under multiplication.
inline std::size_t brute_force_weyl_order(const kweyl::RootDatum& d) {
    auto key = [](const IMatrix& m) { return std::vector<int>(m.data(), m.data() + m.size()); };
    std::vector<IMatrix> gens;
    for (int i = 0; i < d.semisimple_rank(); ++i) gens.push_back(d.weyl_matrix(d.simple_reflection(i)));
    std::set<std::vector<int>> seen;
    std::vector<IMatrix> frontier{IMatrix::Identity(d.rank(), d.rank())};
    seen.insert(key(frontier[0]));
    while (!frontier.empty()) {
        std::vector<IMatrix> next;
        for (const auto& m : frontier)
            for (const auto& g : gens) {
                IMatrix p = m * g;
                if (seen.insert(key(p)).second) next.push_back(p);
            }
        frontier = std::move(next);
    }
    return seen.size();
}

/// Exhaustive search over all words of the target length whose reflection
/// product equals the element.
inline std::set<std::vector<int>> brute_force_reduced_words(const kweyl::RootDatum& d, int w) {
    const int len = d.weyl_length(w);
    const int n = d.semisimple_rank();
    std::set<std::vector<int>> found;
    std::vector<int> word(len, 0);
    while (true) {
        IMatrix prod = IMatrix::Identity(d.rank(), d.rank());
        for (int s : word) prod *= d.weyl_matrix(d.simple_reflection(s));
        if (prod == d.weyl_matrix(w)) found.insert(word);
        int i = len - 1;
        while (i >= 0 && word[i] == n - 1) word[i--] = 0;
        if (i < 0) break;
        ++word[i];
    }
    if (len == 0) found.insert({});
    return found;
}

/// Weyl dimension formula prod_{a>0} <lambda+rho, a^vee> / <rho, a^vee>,
/// evaluated as an exact big-integer quotient.
inline Int weyl_dimension(const kweyl::RootDatum& d, const IVector& lambda) {
    Int num = 1, den = 1;
    for (std::size_t k = 0; k < d.positive_roots().size(); ++k) {
        num *= d.coroot_pairing(static_cast<int>(k), lambda + d.rho());
        den *= d.coroot_pairing(static_cast<int>(k), d.rho());
    }
    Int q = num / den;
    if (q * den != num) throw std::logic_error("weyl_dimension: quotient not integral");
    return q;
}

/// The three-case SU(2) projection table: delta_alpha(x^k) as an element of
/// the rank-one ring over the given datum.
template <class S>
kweyl::LaurentPoly<S> su2_delta_monomial(const kweyl::DatumPtr& datum, int k) {
    kweyl::LaurentPoly<S> out(datum);
    IVector e(1);
    if (k >= 0) {
        for (int j = k; j >= -k; j -= 2) {
            e[0] = j;
            out.add_term(e, S(1));
        }
    } else if (k <= -2) {
        for (int j = k + 2; j <= -k - 2; j += 2) {
            e[0] = j;
            out.add_term(e, S(-1));
        }
    }
    return out;
}

} // namespace oracles
