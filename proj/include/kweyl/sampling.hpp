#pragma once

#include <random>
#include <set>
#include <vector>

#include "kweyl/laurent.hpp"

namespace kweyl {

/// Deterministic generator for randomized property runs; a fixed seed yields
/// a fixed sequence across platforms (mt19937_64 is specified exactly).
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }

    /// Random lattice weight with basis coordinates in [-range, range].
    IVector weight(const DatumPtr& d, int range) {
        IVector coords(d->rank());
        for (int i = 0; i < d->rank(); ++i) coords[i] = uniform(-range, range);
        return d->lattice_basis() * coords;
    }

    /// Random dominant lattice weight: the dominant representative of a
    /// random weight's W-orbit (reflect at a negative coordinate until none
    /// remains; the lattice is W-stable, so membership is preserved).
    IVector dominant_weight(const DatumPtr& d, int range) {
        IVector v = weight(d, range);
        for (;;) {
            int neg = -1;
            for (int i = 0; i < d->semisimple_rank(); ++i)
                if (v[i] < 0) {
                    neg = i;
                    break;
                }
            if (neg < 0) return v;
            v = d->act(d->simple_reflection(neg), v);
        }
    }

    /// Random ring element: up to max_terms monomials, exponent basis
    /// coordinates in [-exp_range, exp_range], coefficients in
    /// [-coeff_range, coeff_range] \ {0}.
    template <class S>
    LaurentPoly<S> laurent(const DatumPtr& d, int max_terms = 6, int exp_range = 4, int coeff_range = 9) {
        LaurentPoly<S> out(d);
        int terms = uniform(1, max_terms);
        for (int t = 0; t < terms; ++t) {
            int c = uniform(-coeff_range, coeff_range);
            if (c == 0) c = 1;
            out += LaurentPoly<S>::monomial(d, weight(d, exp_range), S(c));
        }
        return out;
    }

    /// Random W-invariant element: an integer combination of orbit sums of
    /// small dominant weights.
    template <class S>
    LaurentPoly<S> invariant(const DatumPtr& d, int max_terms = 3, int exp_range = 2, int coeff_range = 5) {
        LaurentPoly<S> out(d);
        int terms = uniform(1, max_terms);
        for (int t = 0; t < terms; ++t) {
            int c = uniform(-coeff_range, coeff_range);
            if (c == 0) c = 1;
            IVector lambda = dominant_weight(d, exp_range);
            LaurentPoly<S> orbit(d);
            std::set<std::vector<int>> seen;
            for (int w = 0; w < d->weyl_order(); ++w) {
                IVector img = d->act(w, lambda);
                if (seen.insert(std::vector<int>(img.data(), img.data() + img.size())).second)
                    orbit += LaurentPoly<S>::monomial(d, img);
            }
            out += orbit * S(c);
        }
        return out;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace kweyl
