#pragma once

#include <stdexcept>
#include <string>

namespace kweyl {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed textual input (type strings, element literals, operator expressions).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Invalid or mismatched root datum / lattice / weight data.
class DatumError : public Error {
public:
    using Error::Error;
};

/// Exact division requested where no quotient exists in the ring.
class DivisionError : public Error {
public:
    using Error::Error;
};

/// An operator is not a member of the Hecke ring (a normal-form coefficient
/// failed to clear its denominator); the message carries the offending fraction.
class MembershipError : public Error {
public:
    using Error::Error;
};

/// A verified construction failed its certificate (e.g. a basis candidate
/// whose Gram determinant is not a unit).
class CheckError : public Error {
public:
    using Error::Error;
};

} // namespace kweyl
