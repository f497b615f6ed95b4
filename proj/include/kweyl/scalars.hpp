#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "kweyl/errors.hpp"

namespace kweyl {

/// Exact coefficient scalars. `Int` is the default ring; `Rat` exists for the
/// mode in which |W| is inverted.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class ScalarRing { integers, rationals };

inline std::string scalar_to_string(const Int& v) { return v.str(); }

inline std::string scalar_to_string(const Rat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

template <class S>
S scalar_from_string(const std::string& text) {
    try {
        return S(text);
    } catch (const std::exception&) {
        throw ParseError("invalid coefficient literal: '" + text + "'");
    }
}

/// True if v is +1 or -1 in the coefficient ring.
template <class S>
bool scalar_is_pm1(const S& v) {
    return v == 1 || v == -1;
}

/// Exact coefficient quotient. For Int a remainder throws; for Rat it always
/// succeeds (b != 0).
inline bool scalar_divides(const Int& a, const Int& b, Int& out) {
    if (b == 0) return false;
    Int q = a / b;
    if (q * b != a) return false;
    out = q;
    return true;
}

inline bool scalar_divides(const Rat& a, const Rat& b, Rat& out) {
    if (b == 0) return false;
    out = a / b;
    return true;
}

} // namespace kweyl
