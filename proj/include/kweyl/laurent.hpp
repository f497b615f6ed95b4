#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <utility>

#include "kweyl/errors.hpp"
#include "kweyl/exact_linalg.hpp"
#include "kweyl/root_datum.hpp"
#include "kweyl/scalars.hpp"

namespace kweyl {

/// Element of the character ring R(T) = Z[X(T)] (or its scalar extension):
/// a finitely supported map from weights to nonzero coefficients. Exponents
/// are fundamental-weight coordinates; the map carries no zero coefficients,
/// so equality is structural. Immutable-in-practice value type.
template <class Scalar>
class LaurentPoly {
public:
    using TermMap = std::map<IVector, Scalar, LexLess>;

    LaurentPoly() = default;
    explicit LaurentPoly(DatumPtr datum) : datum_(std::move(datum)) {}

    static LaurentPoly zero(DatumPtr datum) { return LaurentPoly(std::move(datum)); }

    static LaurentPoly constant(DatumPtr datum, Scalar c) {
        LaurentPoly p(std::move(datum));
        if (c != 0) p.terms_.emplace(IVector::Zero(p.datum_->rank()), std::move(c));
        return p;
    }

    static LaurentPoly one(DatumPtr datum) { return constant(std::move(datum), Scalar(1)); }

    /// e^lambda, validated against the chosen lattice.
    static LaurentPoly monomial(DatumPtr datum, const IVector& lambda, Scalar c = Scalar(1)) {
        if (!datum->in_lattice(lambda))
            throw DatumError("weight does not lie in the chosen character lattice");
        return monomial_any(std::move(datum), lambda, std::move(c));
    }

    /// e^lambda for any weight-lattice vector (internal shifted elements).
    static LaurentPoly monomial_any(DatumPtr datum, const IVector& lambda, Scalar c = Scalar(1)) {
        if (lambda.size() != datum->rank()) throw DatumError("weight has the wrong rank");
        LaurentPoly p(std::move(datum));
        if (c != 0) p.terms_.emplace(lambda, std::move(c));
        return p;
    }

    const DatumPtr& datum() const { return datum_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Scalar coefficient(const IVector& exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    void add_term(const IVector& exp, const Scalar& c) {
        auto [it, inserted] = terms_.try_emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        } else if (it->second == 0) {
            terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& other) {
        check_datum(other);
        for (const auto& [e, c] : other.terms_) add_term(e, c);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& other) {
        check_datum(other);
        for (const auto& [e, c] : other.terms_) add_term(e, Scalar(-c));
        return *this;
    }

    LaurentPoly& operator*=(const LaurentPoly& other) {
        *this = *this * other;
        return *this;
    }

    LaurentPoly& operator*=(const Scalar& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_datum(b);
        LaurentPoly out(a.datum_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
        return out;
    }

    friend LaurentPoly operator*(LaurentPoly a, const Scalar& s) { return a *= s; }
    friend LaurentPoly operator*(const Scalar& s, LaurentPoly a) { return a *= s; }

    LaurentPoly operator-() const {
        LaurentPoly out(datum_);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, Scalar(-c));
        return out;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Leading term under the fixed lexicographic monomial order.
    const std::pair<const IVector, Scalar>& leading() const {
        if (terms_.empty()) throw Error("leading term of zero");
        return *terms_.rbegin();
    }

private:
    void check_datum(const LaurentPoly& other) const {
        if (datum_ != other.datum_) throw DatumError("operands belong to different root data");
    }

    DatumPtr datum_;
    TermMap terms_;
};

template <class S>
LaurentPoly<S> weyl_act(int w, const LaurentPoly<S>& u) {
    const RootDatum& d = *u.datum();
    LaurentPoly<S> out(u.datum());
    for (const auto& [e, c] : u.terms()) out.add_term(d.act(w, e), c);
    return out;
}

/// rho-shifted action: w (.) e^lambda = e^{w(lambda+rho) - rho}.
template <class S>
LaurentPoly<S> shifted_act(int w, const LaurentPoly<S>& u) {
    const RootDatum& d = *u.datum();
    LaurentPoly<S> out(u.datum());
    for (const auto& [e, c] : u.terms()) out.add_term(d.act(w, e + d.rho()) - d.rho(), c);
    return out;
}

/// Quotient u / v when it exists in the Laurent ring, std::nullopt otherwise.
/// Iterated leading-term elimination under the lexicographic order; candidate
/// quotient exponents are confined to the Newton-polytope box
/// [min(u)-min(v), max(u)-max(v)] per coordinate, which bounds the loop.
template <class S>
std::optional<LaurentPoly<S>> try_exact_divide(const LaurentPoly<S>& u, const LaurentPoly<S>& v) {
    if (u.datum() != v.datum()) throw DatumError("operands belong to different root data");
    if (v.is_zero()) throw DivisionError("division by zero");
    LaurentPoly<S> quotient(u.datum());
    if (u.is_zero()) return quotient;

    const int n = u.datum()->rank();
    IVector lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        int umin = 0, umax = 0, vmin = 0, vmax = 0;
        bool first = true;
        for (const auto& [e, c] : u.terms()) {
            if (first || e[i] < umin) umin = e[i];
            if (first || e[i] > umax) umax = e[i];
            first = false;
        }
        first = true;
        for (const auto& [e, c] : v.terms()) {
            if (first || e[i] < vmin) vmin = e[i];
            if (first || e[i] > vmax) vmax = e[i];
            first = false;
        }
        lo[i] = umin - vmin;
        hi[i] = umax - vmax;
        if (lo[i] > hi[i]) return std::nullopt;
    }

    LaurentPoly<S> residue = u;
    const auto& vlead = v.leading();
    while (!residue.is_zero()) {
        const auto& rlead = residue.leading();
        IVector qexp = rlead.first - vlead.first;
        for (int i = 0; i < n; ++i)
            if (qexp[i] < lo[i] || qexp[i] > hi[i]) return std::nullopt;
        S qc;
        if (!scalar_divides(rlead.second, vlead.second, qc)) return std::nullopt;
        LaurentPoly<S> qterm = LaurentPoly<S>::monomial_any(u.datum(), qexp, qc);
        quotient += qterm;
        residue -= qterm * v;
    }
    return quotient;
}

template <class S>
LaurentPoly<S> exact_divide(const LaurentPoly<S>& u, const LaurentPoly<S>& v) {
    auto q = try_exact_divide(u, v);
    if (!q) throw DivisionError("element is not divisible in the character ring");
    return std::move(*q);
}

template <class S>
bool is_invariant(const LaurentPoly<S>& u) {
    const RootDatum& d = *u.datum();
    for (int i = 0; i < d.semisimple_rank(); ++i)
        if (weyl_act(d.simple_reflection(i), u) != u) return false;
    return true;
}

/// Sum of coefficients: the dimension of a virtual character.
template <class S>
S evaluate_at_identity(const LaurentPoly<S>& u) {
    S total(0);
    for (const auto& [e, c] : u.terms()) total += c;
    return total;
}

template <class To, class From>
LaurentPoly<To> laurent_cast(const LaurentPoly<From>& u) {
    LaurentPoly<To> out(u.datum());
    for (const auto& [e, c] : u.terms()) out.add_term(e, To(c));
    return out;
}

} // namespace kweyl
