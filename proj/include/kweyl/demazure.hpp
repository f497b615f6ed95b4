#pragma once

#include <cassert>
#include <span>
#include <vector>

#include "kweyl/laurent.hpp"

namespace kweyl {

/// delta is the isobaric divided difference (u - e^{-a} s_a(u))/(1 - e^{-a});
/// delta_prime its companion (u - s_a(u))/(1 - e^{-a}).
enum class OperatorKind { delta, delta_prime };

namespace detail {

template <class S>
LaurentPoly<S> delta_positive(OperatorKind kind, const RootDatum& d, int root, const LaurentPoly<S>& u) {
    const IVector& alpha = d.positive_roots()[root];
    int s = d.reflection_id(root);
    LaurentPoly<S> su = weyl_act(s, u);
    LaurentPoly<S> numer =
        kind == OperatorKind::delta ? u - LaurentPoly<S>::monomial_any(u.datum(), -alpha) * su : u - su;
    LaurentPoly<S> denom =
        LaurentPoly<S>::one(u.datum()) - LaurentPoly<S>::monomial_any(u.datum(), -alpha);
    auto q = try_exact_divide(numer, denom);
    if (!q) throw DivisionError("internal: divided difference fell outside the ring");
    return std::move(*q);
}

} // namespace detail

/// Applies delta_alpha or delta'_alpha for any root alpha (negative roots via
/// delta_{-a} = 1 + e^a - e^a delta_a and delta'_{-a} = -e^{-a} delta'_a).
template <class S>
LaurentPoly<S> apply_simple(OperatorKind kind, const LaurentPoly<S>& u, const IVector& alpha) {
    const RootDatum& d = *u.datum();
    auto idx = d.root_index(alpha);
    if (!idx) throw DatumError("apply_simple: vector is not a root");
    auto [root, sign] = *idx;
    if (sign > 0) return detail::delta_positive(kind, d, root, u);
    const IVector& beta = d.positive_roots()[root]; // beta = -alpha > 0
    if (kind == OperatorKind::delta) {
        LaurentPoly<S> eb = LaurentPoly<S>::monomial_any(u.datum(), beta);
        return u + eb * u - eb * detail::delta_positive(OperatorKind::delta, d, root, u);
    }
    return LaurentPoly<S>::monomial_any(u.datum(), -beta, S(-1)) *
           detail::delta_positive(OperatorKind::delta_prime, d, root, u);
}

/// Composition along a word of simple reflections, rightmost letter first.
/// For a reduced word of w this computes the operator named partial_w
/// (resp. partial'_w), independently of the chosen word.
template <class S>
LaurentPoly<S> apply_word(OperatorKind kind, const LaurentPoly<S>& u, std::span<const int> word) {
    const RootDatum& d = *u.datum();
    LaurentPoly<S> acc = u;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it < 0 || *it >= d.semisimple_rank()) throw DatumError("word letter out of range");
        acc = apply_simple(kind, acc, d.simple_roots()[*it]);
    }
    return acc;
}

/// partial_w / partial'_w along the canonical reduced word of w.
template <class S>
LaurentPoly<S> apply_partial(OperatorKind kind, const LaurentPoly<S>& u, int w) {
    return apply_word<S>(kind, u, u.datum()->weyl_word(w));
}

/// True iff all reduced words of w act identically on every sample, for both
/// operator kinds.
template <class S>
bool braid_check(const DatumPtr& datum, int w, std::span<const LaurentPoly<S>> samples) {
    auto words = all_reduced_words(*datum, w);
    for (const auto& u : samples) {
        for (OperatorKind kind : {OperatorKind::delta, OperatorKind::delta_prime}) {
            LaurentPoly<S> ref = apply_word(kind, u, std::span<const int>(words.front()));
            for (std::size_t i = 1; i < words.size(); ++i)
                if (apply_word(kind, u, std::span<const int>(words[i])) != ref) return false;
        }
    }
    return true;
}

/// Antisymmetrizer J(u) = sum_w det(w) (w (.) u) over the rho-shifted action.
template <class S>
LaurentPoly<S> antisymmetrize(const LaurentPoly<S>& u) {
    const RootDatum& d = *u.datum();
    LaurentPoly<S> out(u.datum());
    for (int w = 0; w < d.weyl_order(); ++w) {
        LaurentPoly<S> t = shifted_act(w, u);
        out += d.weyl_sign(w) > 0 ? t : -t;
    }
    return out;
}

/// Weyl denominator prod_{a>0} (1 - e^{-a}); equals antisymmetrize(1).
template <class S>
LaurentPoly<S> weyl_denominator(const DatumPtr& datum) {
    LaurentPoly<S> out = LaurentPoly<S>::one(datum);
    for (const auto& alpha : datum->positive_roots())
        out *= LaurentPoly<S>::one(datum) - LaurentPoly<S>::monomial_any(datum, -alpha);
    return out;
}

/// Character of the irreducible module with highest weight lambda, computed
/// as partial_{w0}(e^lambda). Debug builds cross-check the quotient route
/// J(e^lambda)/d and W-invariance of the result.
template <class S>
LaurentPoly<S> weyl_character(const DatumPtr& datum, const IVector& lambda) {
    if (!datum->in_lattice(lambda)) throw DatumError("weight does not lie in the chosen lattice");
    if (!datum->is_dominant(lambda)) throw DatumError("weyl_character requires a dominant weight");
    LaurentPoly<S> mono = LaurentPoly<S>::monomial(datum, lambda);
    LaurentPoly<S> result = apply_partial(OperatorKind::delta, mono, datum->longest_element());
#ifndef NDEBUG
    assert(exact_divide(antisymmetrize(mono), weyl_denominator<S>(datum)) == result);
    assert(is_invariant(result));
#endif
    return result;
}

/// partial_w(e^lambda), the Demazure character of w and lambda.
template <class S>
LaurentPoly<S> demazure_character(const DatumPtr& datum, int w, const IVector& lambda) {
    return apply_partial(OperatorKind::delta, LaurentPoly<S>::monomial(datum, lambda), w);
}

/// pi(u) = partial_{w0}(u0 u) for a normalizing element u0 with
/// partial_{w0}(u0) = 1. Idempotent; projects the ring onto its W-invariants.
template <class S>
LaurentPoly<S> projection_pi(const LaurentPoly<S>& u0, const LaurentPoly<S>& u) {
    const DatumPtr& datum = u0.datum();
    if (apply_partial(OperatorKind::delta, u0, datum->longest_element()) != LaurentPoly<S>::one(datum))
        throw DatumError("projection_pi: normalizer fails partial_{w0}(u0) = 1");
    return apply_partial(OperatorKind::delta, u0 * u, datum->longest_element());
}

} // namespace kweyl
