#pragma once

#include <optional>
#include <vector>

#include "kweyl/demazure.hpp"
#include "kweyl/hecke.hpp"
#include "kweyl/laurent.hpp"

namespace kweyl {

/// The symmetric pairing P(u1, u2) = partial_{w0}(u1 u2), representing the
/// pushforward of the product under R(G) = R(T)^W. Values are W-invariant.
template <class S>
LaurentPoly<S> pairing(const LaurentPoly<S>& u1, const LaurentPoly<S>& u2) {
    return apply_partial(OperatorKind::delta, u1 * u2, u1.datum()->longest_element());
}

/// Twisted induction j_lambda(u) = j_*(e^lambda u) = partial_{w0}(e^lambda u).
template <class S>
LaurentPoly<S> twisted_induction(const DatumPtr& datum, const IVector& lambda, const LaurentPoly<S>& u) {
    return apply_partial(OperatorKind::delta, LaurentPoly<S>::monomial(datum, lambda) * u,
                         datum->longest_element());
}

namespace detail {

template <class S>
struct LaurentOps {
    DatumPtr datum;
    LaurentPoly<S> zero() const { return LaurentPoly<S>::zero(datum); }
    LaurentPoly<S> one() const { return LaurentPoly<S>::one(datum); }
    bool is_zero(const LaurentPoly<S>& a) const { return a.is_zero(); }
    LaurentPoly<S> mul(const LaurentPoly<S>& a, const LaurentPoly<S>& b) const { return a * b; }
    LaurentPoly<S> sub(const LaurentPoly<S>& a, const LaurentPoly<S>& b) const { return a - b; }
    LaurentPoly<S> exact_div(const LaurentPoly<S>& a, const LaurentPoly<S>& b) const {
        return exact_divide(a, b);
    }
    std::size_t size(const LaurentPoly<S>& a) const { return a.term_count(); }
};

} // namespace detail

/// A verified free basis (u_w) of R(T) over R(G) = R(T)^W, all monomials
/// e^{lambda_w}, with its Gram matrix under the pairing, the unit
/// determinant, and the dual basis (u^w). Construction validates the unit
/// certificate and the duality equations; a failing candidate raises
/// CheckError rather than returning an unverified basis.
template <class S>
class SteinbergBasis {
public:
    /// Default candidate weights lambda_w = w^{-1}(sum of omega_a over simple
    /// a with w^{-1}(a) < 0); a caller-supplied map w -> lambda_w overrides
    /// it. Candidates are certified, never trusted.
    static SteinbergBasis build(const DatumPtr& datum,
                                const std::vector<IVector>* override_weights = nullptr) {
        if (abs(datum->lattice_determinant()) != 1)
            throw DatumError("Steinberg basis requires a torsion-free fundamental group "
                             "(simply connected lattice, optionally times a torus)");
        SteinbergBasis basis;
        basis.datum_ = datum;
        const RootDatum& d = *datum;
        const int order = d.weyl_order();
        if (override_weights) {
            if (static_cast<int>(override_weights->size()) != order)
                throw DatumError("override weights must list one weight per Weyl element");
            basis.weights_ = *override_weights;
            if (!basis.weights_[0].isZero()) throw DatumError("the weight at the identity must be zero");
            for (const auto& l : basis.weights_)
                if (!d.in_lattice(l)) throw DatumError("override weight outside the lattice");
        } else {
            basis.weights_.reserve(order);
            for (int w = 0; w < order; ++w) {
                const int winv = d.inverse(w);
                IVector sum = IVector::Zero(d.rank());
                for (int i = 0; i < d.semisimple_rank(); ++i) {
                    IVector img = d.act(winv, d.simple_roots()[i]);
                    auto idx = d.root_index(img);
                    if (idx && idx->second < 0) sum += d.fundamental_weights()[i];
                }
                basis.weights_.push_back(d.act(winv, sum));
            }
        }
        basis.elements_.reserve(order);
        for (int w = 0; w < order; ++w)
            basis.elements_.push_back(LaurentPoly<S>::monomial(datum, basis.weights_[w]));

        basis.gram_.assign(order, std::vector<LaurentPoly<S>>(order, LaurentPoly<S>::zero(datum)));
        for (int w = 0; w < order; ++w)
            for (int v = w; v < order; ++v) {
                basis.gram_[w][v] = pairing(basis.elements_[w], basis.elements_[v]);
                basis.gram_[v][w] = basis.gram_[w][v];
            }

        auto adj = [&] {
            try {
                return adjugate_det<LaurentPoly<S>, detail::LaurentOps<S>>(basis.gram_,
                                                                           detail::LaurentOps<S>{datum});
            } catch (const CheckError&) {
                throw CheckError("Steinberg candidate rejected: Gram matrix is singular");
            }
        }();
        basis.det_ = adj.det;
        // unit of R(T)^W: one term, coefficient +-1, W-fixed exponent
        if (basis.det_.term_count() != 1 || !scalar_is_pm1(basis.det_.leading().second) ||
            !is_invariant(basis.det_))
            throw CheckError("Steinberg candidate rejected: Gram determinant is not a unit of R(T)^W");
        const IVector mu = basis.det_.leading().first;
        const S det_sign = basis.det_.leading().second;
        LaurentPoly<S> det_inverse = LaurentPoly<S>::monomial_any(datum, -mu, det_sign);

        basis.dual_.assign(order, LaurentPoly<S>::zero(datum));
        for (int w = 0; w < order; ++w)
            for (int v = 0; v < order; ++v)
                basis.dual_[w] += adj.adjugate[w][v] * det_inverse * basis.elements_[v];
        for (int w = 0; w < order; ++w)
            for (int v = 0; v < order; ++v) {
                auto p = pairing(basis.elements_[w], basis.dual_[v]);
                auto expect = w == v ? LaurentPoly<S>::one(datum) : LaurentPoly<S>::zero(datum);
                if (p != expect) throw CheckError("Steinberg candidate rejected: duality equations fail");
            }
        return basis;
    }

    const DatumPtr& datum() const { return datum_; }
    const std::vector<IVector>& weights() const { return weights_; }
    const std::vector<LaurentPoly<S>>& elements() const { return elements_; }
    const std::vector<std::vector<LaurentPoly<S>>>& gram() const { return gram_; }
    const LaurentPoly<S>& gram_det() const { return det_; }
    const std::vector<LaurentPoly<S>>& dual() const { return dual_; }
    int size() const { return static_cast<int>(elements_.size()); }

private:
    SteinbergBasis() = default;
    DatumPtr datum_;
    std::vector<IVector> weights_;
    std::vector<LaurentPoly<S>> elements_, dual_;
    std::vector<std::vector<LaurentPoly<S>>> gram_;
    LaurentPoly<S> det_;
};

template <class S>
SteinbergBasis<S> steinberg_basis(const DatumPtr& datum,
                                  const std::vector<IVector>* override_weights = nullptr) {
    return SteinbergBasis<S>::build(datum, override_weights);
}

/// The P-dual basis (u^w): pairing(u_w, dual[w']) = delta_{w,w'}.
template <class S>
const std::vector<LaurentPoly<S>>& dual_basis(const SteinbergBasis<S>& basis) {
    return basis.dual();
}

/// Coordinates of u in the basis: c_w = P(u, u^w), all W-invariant, with the
/// reconstruction sum_w c_w u_w = u verified.
template <class S>
std::vector<LaurentPoly<S>> expand_in_basis(const LaurentPoly<S>& u, const SteinbergBasis<S>& basis) {
    std::vector<LaurentPoly<S>> coords;
    coords.reserve(basis.size());
    LaurentPoly<S> recon(basis.datum());
    for (int w = 0; w < basis.size(); ++w) {
        coords.push_back(pairing(u, basis.dual()[w]));
        recon += coords.back() * basis.elements()[w];
    }
    if (recon != u) throw CheckError("internal: basis expansion failed to reconstruct the element");
    return coords;
}

/// Matrix of an operator on the basis: M[v][w] with
/// op(u_w) = sum_v M[v][w] u_v (columns indexed by the source element).
template <class S>
std::vector<std::vector<LaurentPoly<S>>> operator_matrix(const TwistedOperator<S>& op,
                                                         const SteinbergBasis<S>& basis) {
    const int n = basis.size();
    std::vector<std::vector<LaurentPoly<S>>> m(n,
                                               std::vector<LaurentPoly<S>>(n, LaurentPoly<S>::zero(basis.datum())));
    for (int w = 0; w < n; ++w) {
        auto coords = expand_in_basis(op.apply(basis.elements()[w]), basis);
        for (int v = 0; v < n; ++v) m[v][w] = std::move(coords[v]);
    }
    return m;
}

/// Unique b_{w,w'} in R(G) with op(u) = sum_{w,w'} b_{w,w'} u_w
/// partial_{w0}(u_{w'} u) for all u; computed by solving against the basis
/// and verified on the basis elements.
template <class S>
std::vector<std::vector<LaurentPoly<S>>> expand_endomorphism(const TwistedOperator<S>& op,
                                                             const SteinbergBasis<S>& basis) {
    const DatumPtr& datum = basis.datum();
    const int n = basis.size();
    // C[w][v] = coordinate of op(u_v) at u_w; then B = C gram^{-1}.
    std::vector<std::vector<LaurentPoly<S>>> c = operator_matrix(op, basis);
    const IVector mu = basis.gram_det().leading().first;
    const S det_sign = basis.gram_det().leading().second;
    LaurentPoly<S> det_inverse = LaurentPoly<S>::monomial_any(datum, -mu, det_sign);
    auto adj = adjugate_det<LaurentPoly<S>, detail::LaurentOps<S>>(basis.gram(),
                                                                   detail::LaurentOps<S>{datum});
    std::vector<std::vector<LaurentPoly<S>>> b(n, std::vector<LaurentPoly<S>>(n, LaurentPoly<S>::zero(datum)));
    for (int w = 0; w < n; ++w)
        for (int v = 0; v < n; ++v) {
            for (int k = 0; k < n; ++k) b[w][v] += c[w][k] * adj.adjugate[k][v];
            b[w][v] *= det_inverse;
        }
    // verification on the basis elements
    for (int v = 0; v < n; ++v) {
        LaurentPoly<S> recon(datum);
        for (int w = 0; w < n; ++w)
            for (int w2 = 0; w2 < n; ++w2) recon += b[w][w2] * basis.elements()[w] * basis.gram()[w2][v];
        if (recon != op.apply(basis.elements()[v]))
            throw CheckError("internal: endomorphism expansion failed verification");
    }
    return b;
}

} // namespace kweyl
