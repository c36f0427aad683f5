#include "cfkit/scalar.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

namespace cfkit {

double approx_norm(const Rational& x) {
    return std::fabs(x.convert_to<double>());
}

double approx_norm(const Real& x) {
    return std::fabs(x.convert_to<double>());
}

double approx_norm(const TruncatedSeries& x) {
    double m = 0.0;
    for (const auto& c : x.coeffs()) {
        double v = std::fabs(c.convert_to<double>());
        if (v > m) m = v;
    }
    return m;
}

std::optional<long long> as_integer(const Rational& x) {
    return rational_as_integer(x);
}

std::optional<long long> as_integer(const Real& x) {
    Real t = boost::multiprecision::trunc(x);
    if (t != x) return std::nullopt;
    if (t < Real(std::numeric_limits<long long>::min()) ||
        t > Real(std::numeric_limits<long long>::max())) {
        return std::nullopt;
    }
    return t.convert_to<long long>();
}

std::optional<long long> as_integer(const TruncatedSeries& x) {
    if (!x.is_constant()) return std::nullopt;
    return rational_as_integer(x.coeff(0));
}

bool close_to(const Rational& a, const Rational& b, double) { return a == b; }

bool close_to(const Real& a, const Real& b, double eps) {
    Real diff = boost::multiprecision::abs(a - b);
    Real scale(1);
    Real aa = boost::multiprecision::abs(a);
    Real bb = boost::multiprecision::abs(b);
    if (aa > scale) scale = aa;
    if (bb > scale) scale = bb;
    return diff <= Real(eps) * scale;
}

bool close_to(const ComplexRational& a, const ComplexRational& b, double) { return a == b; }

bool close_to(const ComplexReal& a, const ComplexReal& b, double eps) {
    Real diff = boost::multiprecision::sqrt((a - b).norm_squared());
    Real scale(1);
    Real aa = boost::multiprecision::sqrt(a.norm_squared());
    Real bb = boost::multiprecision::sqrt(b.norm_squared());
    if (aa > scale) scale = aa;
    if (bb > scale) scale = bb;
    return diff <= Real(eps) * scale;
}

bool close_to(const TruncatedSeries& a, const TruncatedSeries& b, double) { return a == b; }

std::pair<Rational, Rational> parse_complex_parts(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) {
        return {parse_rational(text), Rational(0)};
    }
    std::string re = text.substr(0, comma);
    std::string im = text.substr(comma + 1);
    if (im.find(',') != std::string::npos) {
        throw ConfigError("complex value '" + text + "' has more than one comma");
    }
    return {parse_rational(re), parse_rational(im)};
}

ComplexRational ScalarContext<ComplexRational>::parse(const std::string& text) const {
    auto [re, im] = parse_complex_parts(text);
    return ComplexRational(re, im);
}

std::string ScalarContext<ComplexRational>::render(const ComplexRational& x) const {
    if (is_zero(x.im)) return cfkit::to_string(x.re);
    std::string s = cfkit::to_string(x.re);
    if (x.im < 0) {
        s += "-" + cfkit::to_string(Rational(-x.im)) + "i";
    } else {
        s += "+" + cfkit::to_string(x.im) + "i";
    }
    return s;
}

ComplexReal ScalarContext<ComplexReal>::parse(const std::string& text) const {
    auto [re, im] = parse_complex_parts(text);
    return ComplexReal(real_from_rational(re), real_from_rational(im));
}

std::string ScalarContext<ComplexReal>::render(const ComplexReal& x) const {
    if (is_zero(x.im)) return cfkit::to_string(x.re);
    std::string s = cfkit::to_string(x.re);
    if (x.im < 0) {
        s += "-" + cfkit::to_string(Real(-x.im)) + "i";
    } else {
        s += "+" + cfkit::to_string(x.im) + "i";
    }
    return s;
}

}  // namespace cfkit
