#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "cfkit/rational.hpp"

namespace cfkit {

// Variable-precision binary float (MPFR). Precision is configured globally in
// bits of mantissa; newly constructed values pick it up. Default 128 bits.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                            boost::multiprecision::et_off>;

// Sets the working precision for subsequently created Real values. The MPFR
// precision actually applied is the smallest one able to represent the
// requested number of mantissa bits (never less). Returns the previous
// requested value.
unsigned set_real_precision_bits(unsigned bits);

// The currently requested precision in bits.
unsigned real_precision_bits();

// Decimal digits needed to round-trip a Real at the current precision.
unsigned real_roundtrip_digits();

struct PrecisionGuard {
    explicit PrecisionGuard(unsigned bits) : saved_(set_real_precision_bits(bits)) {}
    ~PrecisionGuard() { set_real_precision_bits(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

// Exact-to-one-rounding conversion.
Real real_from_rational(const Rational& r);

std::string to_string(const Real& x);

}  // namespace cfkit
