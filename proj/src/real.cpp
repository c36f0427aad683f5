#include "cfkit/real.hpp"

#include <cmath>

namespace cfkit {

namespace {

unsigned digits10_for_bits(unsigned bits) {
    // ceil(bits * log10(2)); boost converts back to >= bits of mantissa.
    unsigned d = static_cast<unsigned>(std::ceil(static_cast<double>(bits) * 0.3010299956639812));
    return d < 2 ? 2 : d;
}

struct PrecisionState {
    unsigned bits = 128;
    PrecisionState() { Real::default_precision(digits10_for_bits(bits)); }
};

PrecisionState& state() {
    static PrecisionState s;
    return s;
}

}  // namespace

unsigned set_real_precision_bits(unsigned bits) {
    if (bits < 4) throw ConfigError("precision must be at least 4 bits");
    unsigned previous = state().bits;
    state().bits = bits;
    Real::default_precision(digits10_for_bits(bits));
    return previous;
}

unsigned real_precision_bits() { return state().bits; }

unsigned real_roundtrip_digits() { return digits10_for_bits(state().bits) + 2; }

Real real_from_rational(const Rational& r) {
    (void)state();
    return Real(r);
}

std::string to_string(const Real& x) {
    return x.str(real_roundtrip_digits(), std::ios_base::fmtflags(0));
}

}  // namespace cfkit
