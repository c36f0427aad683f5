#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "cfkit/errors.hpp"

namespace cfkit {

using BigInt = boost::multiprecision::mpz_int;

// Arbitrary-precision rational, kept canonical by GMP: lowest terms,
// positive denominator. Exact equality is plain operator==.
using Rational = boost::multiprecision::mpq_rational;

// Accepts "p", "-p", "p/q" and decimal literals like "0.25" (no exponent).
Rational parse_rational(std::string_view text);

// Canonical form: "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

bool rational_is_integer(const Rational& r);

// The value as a long long when it is an integer of that size.
std::optional<long long> rational_as_integer(const Rational& r);

}  // namespace cfkit
