#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace taut {

using Int = mpz_class;
using Rational = mpq_class;

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad user input: malformed config, unknown identifiers, violated preconditions.
class InputError : public Error {
public:
    using Error::Error;
};

// An internal cross-check failed (e.g. a group average that is not integral).
class ConsistencyError : public Error {
public:
    using Error::Error;
};

inline std::string to_string(const Int& x) { return x.get_str(); }

inline std::string to_string(const Rational& x) { return x.get_str(); }

inline Int from_i64(std::int64_t x) { return Int(static_cast<long>(x)); }

// Throws InputError when x does not fit into a signed 64-bit value.
std::int64_t to_i64(const Int& x);

Int factorial(unsigned k);

} // namespace taut
