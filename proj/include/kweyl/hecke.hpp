#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

#include "kweyl/demazure.hpp"
#include "kweyl/laurent.hpp"
#include "kweyl/laurent_io.hpp"

namespace kweyl {

/// Element of the fraction field of R(T) in the restricted shape arising in
/// the Hecke ring: numerator / prod (1 - e^{-beta}) over a multiset of
/// positive roots. Canonical form cancels every root binomial that divides
/// the numerator exactly, which makes equality structural (the binomials of
/// distinct positive roots share no irreducible factors).
template <class S>
class RootFraction {
public:
    RootFraction() = default;
    explicit RootFraction(LaurentPoly<S> num) : num_(std::move(num)) {}

    static RootFraction make(LaurentPoly<S> num, std::vector<int> den) {
        RootFraction f;
        f.num_ = std::move(num);
        f.den_ = std::move(den);
        std::sort(f.den_.begin(), f.den_.end());
        f.normalize();
        return f;
    }

    const LaurentPoly<S>& numerator() const { return num_; }
    const std::vector<int>& denominator() const { return den_; }
    const DatumPtr& datum() const { return num_.datum(); }
    bool is_zero() const { return num_.is_zero(); }

    /// The fraction as a ring element; throws if a denominator remains.
    const LaurentPoly<S>& as_polynomial() const {
        if (!den_.empty())
            throw DivisionError("fraction does not clear its denominator: " + to_string());
        return num_;
    }

    bool is_polynomial() const { return den_.empty(); }

    friend RootFraction operator+(const RootFraction& a, const RootFraction& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        // least common denominator: per-root maximum multiplicity
        std::vector<int> lcm;
        std::size_t i = 0, j = 0;
        while (i < a.den_.size() || j < b.den_.size()) {
            if (j == b.den_.size() || (i < a.den_.size() && a.den_[i] < b.den_[j]))
                lcm.push_back(a.den_[i++]);
            else if (i == a.den_.size() || b.den_[j] < a.den_[i])
                lcm.push_back(b.den_[j++]);
            else {
                lcm.push_back(a.den_[i]);
                ++i;
                ++j;
            }
        }
        LaurentPoly<S> na = a.num_ * complement_product(a.datum(), lcm, a.den_);
        LaurentPoly<S> nb = b.num_ * complement_product(b.datum(), lcm, b.den_);
        return make(na + nb, std::move(lcm));
    }

    friend RootFraction operator-(const RootFraction& a, const RootFraction& b) { return a + (-b); }

    RootFraction operator-() const {
        RootFraction f;
        f.num_ = -num_;
        f.den_ = den_;
        return f;
    }

    friend RootFraction operator*(const RootFraction& a, const RootFraction& b) {
        std::vector<int> den;
        den.reserve(a.den_.size() + b.den_.size());
        std::merge(a.den_.begin(), a.den_.end(), b.den_.begin(), b.den_.end(), std::back_inserter(den));
        return make(a.num_ * b.num_, std::move(den));
    }

    friend RootFraction operator*(const LaurentPoly<S>& p, const RootFraction& b) {
        return make(p * b.num_, b.den_);
    }

    friend bool operator==(const RootFraction& a, const RootFraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RootFraction& a, const RootFraction& b) { return !(a == b); }

    /// Image under w: w acts on numerator and denominator; denominator
    /// factors sent to negative roots are renormalized via
    /// 1 - e^{beta} = -e^{beta} (1 - e^{-beta}).
    friend RootFraction weyl_act(int w, const RootFraction& f) {
        const RootDatum& d = *f.datum();
        LaurentPoly<S> num = weyl_act(w, f.num_);
        std::vector<int> den;
        den.reserve(f.den_.size());
        for (int idx : f.den_) {
            IVector img = d.act(w, d.positive_roots()[idx]);
            auto ri = d.root_index(img);
            if (!ri) throw DatumError("internal: Weyl image of a root is not a root");
            den.push_back(ri->first);
            if (ri->second < 0)
                num *= LaurentPoly<S>::monomial_any(f.datum(), -d.positive_roots()[ri->first], S(-1));
        }
        return make(std::move(num), std::move(den));
    }

    std::string to_string() const {
        std::ostringstream out;
        out << "(" << render_laurent(num_) << ")";
        if (!den_.empty()) {
            const RootDatum& d = *datum();
            out << " / ";
            for (int idx : den_) {
                out << "(1 - e^-[";
                const IVector& beta = d.positive_roots()[idx];
                for (int i = 0; i < beta.size(); ++i) out << (i ? "," : "") << beta[i];
                out << "])";
            }
        }
        return out.str();
    }

private:
    static LaurentPoly<S> root_binomial(const DatumPtr& d, int idx) {
        return LaurentPoly<S>::one(d) - LaurentPoly<S>::monomial_any(d, -d->positive_roots()[idx]);
    }

    static LaurentPoly<S> complement_product(const DatumPtr& d, const std::vector<int>& whole,
                                             const std::vector<int>& part) {
        LaurentPoly<S> out = LaurentPoly<S>::one(d);
        std::size_t j = 0;
        for (int idx : whole) {
            if (j < part.size() && part[j] == idx)
                ++j;
            else
                out *= root_binomial(d, idx);
        }
        return out;
    }

    void normalize() {
        if (num_.is_zero()) {
            den_.clear();
            return;
        }
        std::vector<int> kept;
        kept.reserve(den_.size());
        for (std::size_t i = 0; i < den_.size(); ++i) {
            auto q = try_exact_divide(num_, root_binomial(datum(), den_[i]));
            if (q)
                num_ = std::move(*q);
            else
                kept.push_back(den_[i]);
        }
        den_ = std::move(kept);
    }

    LaurentPoly<S> num_;
    std::vector<int> den_;
};

/// Element of the Hecke ring D inside the twisted group algebra K[W]:
/// a finite sum of fraction coefficients times Weyl group elements, with
/// multiplication (a w)(b v) = a w(b) (w v).
template <class S>
class TwistedOperator {
public:
    TwistedOperator() = default;
    explicit TwistedOperator(DatumPtr datum) : datum_(std::move(datum)) {}

    const DatumPtr& datum() const { return datum_; }
    const std::map<int, RootFraction<S>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    RootFraction<S> coefficient(int w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? RootFraction<S>(LaurentPoly<S>::zero(datum_)) : it->second;
    }

    void add_term(int w, const RootFraction<S>& f) {
        if (f.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(w, f);
        if (!inserted) {
            it->second = it->second + f;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend TwistedOperator operator+(const TwistedOperator& a, const TwistedOperator& b) {
        a.check_datum(b);
        TwistedOperator out = a;
        for (const auto& [w, f] : b.terms_) out.add_term(w, f);
        return out;
    }

    friend TwistedOperator operator-(const TwistedOperator& a, const TwistedOperator& b) { return a + (-b); }

    TwistedOperator operator-() const {
        TwistedOperator out(datum_);
        for (const auto& [w, f] : terms_) out.terms_.emplace(w, -f);
        return out;
    }

    friend TwistedOperator operator*(const TwistedOperator& a, const TwistedOperator& b) {
        a.check_datum(b);
        TwistedOperator out(a.datum_);
        const RootDatum& d = *a.datum_;
        for (const auto& [w, aw] : a.terms_)
            for (const auto& [v, bv] : b.terms_) out.add_term(d.product(w, v), aw * weyl_act(w, bv));
        return out;
    }

    friend bool operator==(const TwistedOperator& a, const TwistedOperator& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const TwistedOperator& a, const TwistedOperator& b) { return !(a == b); }

    /// Applies the operator to a ring element with exact fraction clearing.
    /// Throws DivisionError when the result fails to land in R(T) (the
    /// operator does not stabilize the ring on this input).
    LaurentPoly<S> apply(const LaurentPoly<S>& u) const {
        if (datum_ != u.datum()) throw DatumError("operator and element belong to different root data");
        RootFraction<S> acc(LaurentPoly<S>::zero(u.datum()));
        for (const auto& [w, f] : terms_) acc = acc + f * RootFraction<S>(weyl_act(w, u));
        return acc.as_polynomial();
    }

private:
    void check_datum(const TwistedOperator& other) const {
        if (datum_ != other.datum_) throw DatumError("operators belong to different root data");
    }

    DatumPtr datum_;
    std::map<int, RootFraction<S>> terms_;
};

template <class S>
TwistedOperator<S> op_identity(const DatumPtr& d) {
    TwistedOperator<S> op(d);
    op.add_term(0, RootFraction<S>(LaurentPoly<S>::one(d)));
    return op;
}

/// Multiplication operator by a ring element.
template <class S>
TwistedOperator<S> op_scalar(const LaurentPoly<S>& u) {
    TwistedOperator<S> op(u.datum());
    op.add_term(0, RootFraction<S>(u));
    return op;
}

template <class S>
TwistedOperator<S> op_weyl(const DatumPtr& d, int w) {
    TwistedOperator<S> op(d);
    op.add_term(w, RootFraction<S>(LaurentPoly<S>::one(d)));
    return op;
}

/// delta_a = (1-e^{-a})^{-1} (1 - e^{-a} s_a), delta'_a = (1-e^{-a})^{-1} (1 - s_a)
/// as elements of K[W]; negative roots through the reflection identities.
template <class S>
TwistedOperator<S> op_delta(const DatumPtr& d, OperatorKind kind, const IVector& alpha) {
    auto idx = d->root_index(alpha);
    if (!idx) throw DatumError("op_delta: vector is not a root");
    auto [root, sign] = *idx;
    const IVector& beta = d->positive_roots()[root];
    int s = d->reflection_id(root);
    TwistedOperator<S> pos(d);
    pos.add_term(0, RootFraction<S>::make(LaurentPoly<S>::one(d), {root}));
    if (kind == OperatorKind::delta)
        pos.add_term(s, RootFraction<S>::make(LaurentPoly<S>::monomial_any(d, -beta, S(-1)), {root}));
    else
        pos.add_term(s, RootFraction<S>::make(LaurentPoly<S>::constant(d, S(-1)), {root}));
    if (sign > 0) return pos;
    if (kind == OperatorKind::delta) {
        // delta_{-b} = 1 + e^b - e^b delta_b
        auto eb = op_scalar(LaurentPoly<S>::monomial_any(d, beta));
        return op_identity<S>(d) + eb - eb * pos;
    }
    // delta'_{-b} = -e^{-b} delta'_b
    return op_scalar(LaurentPoly<S>::monomial_any(d, -beta, S(-1))) * pos;
}

/// partial_w (resp. partial'_w) as an operator, along the canonical word.
template <class S>
TwistedOperator<S> op_partial(const DatumPtr& d, OperatorKind kind, int w) {
    TwistedOperator<S> acc = op_identity<S>(d);
    for (int s : d->weyl_word(w)) acc = acc * op_delta<S>(d, kind, d->simple_roots()[s]);
    return acc;
}

/// All partial_w (resp. partial'_w) indexed by Weyl id, built incrementally
/// along the canonical words.
template <class S>
std::vector<TwistedOperator<S>> op_partial_all(const DatumPtr& d, OperatorKind kind) {
    std::vector<TwistedOperator<S>> ops;
    ops.reserve(d->weyl_order());
    ops.push_back(op_identity<S>(d));
    for (int w = 1; w < d->weyl_order(); ++w) {
        const auto& word = d->weyl_word(w);
        int parent = d->shift(w, word.back());
        ops.push_back(ops[parent] * op_delta<S>(d, kind, d->simple_roots()[word.back()]));
    }
    return ops;
}

/// Coefficients of an operator in the left R(T)-basis (partial'_w): the
/// unique c_w in R(T) with op = sum_w c_w partial'_w, found by
/// descending-length triangular elimination. Throws MembershipError with the
/// offending fraction when some c_w fails to lie in R(T) (op not in D).
template <class S>
struct NormalForm {
    std::map<int, LaurentPoly<S>> coeffs; // zero coefficients omitted
};

template <class S>
NormalForm<S> normal_form(const TwistedOperator<S>& op) {
    const DatumPtr& d = op.datum();
    auto primes = op_partial_all<S>(d, OperatorKind::delta_prime);
    std::vector<int> order(d->weyl_order());
    for (int w = 0; w < d->weyl_order(); ++w) order[w] = w;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (d->weyl_length(a) != d->weyl_length(b)) return d->weyl_length(a) > d->weyl_length(b);
        return a < b;
    });

    NormalForm<S> nf;
    TwistedOperator<S> residual = op;
    for (int w : order) {
        RootFraction<S> r = residual.coefficient(w);
        if (r.is_zero()) continue;
        // the leading coefficient of partial'_w is (-1)^{l(w)} / prod over the
        // inversion set of root binomials; dividing by it multiplies by the
        // binomials and restores the sign
        RootFraction<S> top = primes[w].coefficient(w);
        const S sign = d->weyl_sign(w) > 0 ? S(1) : S(-1);
        if (!(top.numerator() == LaurentPoly<S>::constant(d, sign)))
            throw Error("internal: partial'_w has an unexpected leading coefficient");
        RootFraction<S> c = r;
        for (int idx : top.denominator())
            c = (LaurentPoly<S>::one(d) - LaurentPoly<S>::monomial_any(d, -d->positive_roots()[idx])) * c;
        c = LaurentPoly<S>::constant(d, sign) * c;
        if (!c.is_polynomial())
            throw MembershipError("operator lies outside the Hecke ring; coefficient at w=" + std::to_string(w) +
                                  " is " + c.to_string());
        nf.coeffs.emplace(w, c.as_polynomial());
        residual = residual - op_scalar(c.as_polynomial()) * primes[w];
    }
    if (!residual.is_zero()) throw Error("internal: normal form left a nonzero residual");
    return nf;
}

/// Reassembles sum_w c_w partial'_w.
template <class S>
TwistedOperator<S> reconstruct(const DatumPtr& d, const NormalForm<S>& nf) {
    TwistedOperator<S> out(d);
    for (const auto& [w, c] : nf.coeffs) out = out + op_scalar(c) * op_partial<S>(d, OperatorKind::delta_prime, w);
    return out;
}

/// Membership in the augmentation left ideal: annihilates 1, equivalently
/// the identity coefficient of the normal form vanishes. Both routes are
/// computed and compared.
template <class S>
bool in_augmentation_ideal(const TwistedOperator<S>& op) {
    NormalForm<S> nf = normal_form(op); // rejects op outside D
    bool c1_zero = nf.coeffs.find(0) == nf.coeffs.end();
    bool kills_one = op.apply(LaurentPoly<S>::one(op.datum())).is_zero();
    if (kills_one != c1_zero) throw Error("internal: augmentation ideal criteria disagree");
    return kills_one;
}

/// Left annihilation of the top operator: op * partial_{w0} == 0. Must agree
/// with in_augmentation_ideal; the agreement is enforced.
template <class S>
bool annihilates_top(const TwistedOperator<S>& op) {
    const DatumPtr& d = op.datum();
    bool zero = (op * op_partial<S>(d, OperatorKind::delta, d->longest_element())).is_zero();
    if (zero != in_augmentation_ideal(op))
        throw Error("internal: augmentation ideal does not match the annihilator of the top operator");
    return zero;
}

struct HeckeReport {
    int checks = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

/// Verifies the multiplication law of D as operator identities:
/// [partial'_s, u] = partial'_s(u) s for sampled u, and
/// partial'_s partial'_w = partial'_{sw} or partial'_w according to lengths.
template <class S>
HeckeReport hecke_relations_check(const DatumPtr& d, const std::vector<LaurentPoly<S>>& samples) {
    HeckeReport report;
    auto primes = op_partial_all<S>(d, OperatorKind::delta_prime);
    for (int i = 0; i < d->semisimple_rank(); ++i) {
        int s = d->simple_reflection(i);
        const IVector& alpha = d->simple_roots()[i];
        for (const auto& u : samples) {
            ++report.checks;
            auto lhs = primes[s] * op_scalar(u) - op_scalar(u) * primes[s];
            auto rhs = op_scalar(apply_simple(OperatorKind::delta_prime, u, alpha)) * op_weyl<S>(d, s);
            if (lhs != rhs)
                report.failures.push_back("commutator rule fails for s=" + std::to_string(i) + ", u=" +
                                          render_laurent(u));
        }
        for (int w = 0; w < d->weyl_order(); ++w) {
            ++report.checks;
            int sw = d->product(s, w);
            const auto& expect = d->weyl_length(sw) > d->weyl_length(w) ? primes[sw] : primes[w];
            if (primes[s] * primes[w] != expect)
                report.failures.push_back("product rule fails for s=" + std::to_string(i) +
                                          ", w=" + std::to_string(w));
        }
    }
    return report;
}

/// Pushes an operator through a character-lattice embedding (same Cartan
/// data). Coefficient exponents are unchanged; root and Weyl indexing agree
/// because the enumerations are determined by the Cartan matrix.
template <class S>
TwistedOperator<S> extend_operator(const LatticeExtension& ext, const TwistedOperator<S>& op) {
    if (op.datum() != ext.sub) throw DatumError("extend_operator: operator does not live on the sub-lattice");
    TwistedOperator<S> out(ext.super);
    for (const auto& [w, f] : op.terms()) {
        LaurentPoly<S> num(ext.super);
        for (const auto& [e, c] : f.numerator().terms()) num.add_term(e, c);
        out.add_term(w, RootFraction<S>::make(std::move(num), f.denominator()));
    }
    return out;
}

/// The same embedding applied to ring elements.
template <class S>
LaurentPoly<S> extend_element(const LatticeExtension& ext, const LaurentPoly<S>& u) {
    if (u.datum() != ext.sub) throw DatumError("extend_element: element does not live on the sub-lattice");
    LaurentPoly<S> out(ext.super);
    for (const auto& [e, c] : u.terms()) out.add_term(e, c);
    return out;
}

} // namespace kweyl
