#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "cfkit/complexpair.hpp"
#include "cfkit/errors.hpp"
#include "cfkit/rational.hpp"
#include "cfkit/real.hpp"
#include "cfkit/series.hpp"

namespace cfkit {

using ComplexRational = Complex<Rational>;
using ComplexReal = Complex<Real>;

// is_exact: equality of values is decidable, so checks compare exactly.
// is_formal: truncated ring, where analytic guards (|q| < 1 etc.) do not apply.
template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool is_exact = true;
    static constexpr bool is_formal = false;
    static constexpr const char* name = "rational";
};

template <>
struct scalar_traits<Real> {
    static constexpr bool is_exact = false;
    static constexpr bool is_formal = false;
    static constexpr const char* name = "float";
};

template <>
struct scalar_traits<ComplexRational> {
    static constexpr bool is_exact = true;
    static constexpr bool is_formal = false;
    static constexpr const char* name = "complex-rational";
};

template <>
struct scalar_traits<ComplexReal> {
    static constexpr bool is_exact = false;
    static constexpr bool is_formal = false;
    static constexpr const char* name = "complex";
};

template <>
struct scalar_traits<TruncatedSeries> {
    static constexpr bool is_exact = true;
    static constexpr bool is_formal = true;
    static constexpr const char* name = "series";
};

// ---- predicates ----

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const Real& x) { return x == 0; }
template <class T>
bool is_zero(const Complex<T>& x) {
    return is_zero(x.re) && is_zero(x.im);
}
inline bool is_zero(const TruncatedSeries& x) { return x.is_zero(); }

inline bool is_one(const Rational& x) { return x == 1; }
inline bool is_one(const Real& x) { return x == 1; }
template <class T>
bool is_one(const Complex<T>& x) {
    return is_one(x.re) && is_zero(x.im);
}
inline bool is_one(const TruncatedSeries& x) {
    return x.is_constant() && x.coeff(0) == 1;
}

// ---- construction relative to a model value (series need its config) ----

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Real zero_like(const Real&) { return Real(0); }
template <class T>
Complex<T> zero_like(const Complex<T>& m) {
    return Complex<T>(zero_like(m.re), zero_like(m.im));
}
inline TruncatedSeries zero_like(const TruncatedSeries& m) {
    return TruncatedSeries(m.config());
}

inline Rational one_like(const Rational&) { return Rational(1); }
inline Real one_like(const Real&) { return Real(1); }
template <class T>
Complex<T> one_like(const Complex<T>& m) {
    return Complex<T>(one_like(m.re), zero_like(m.im));
}
inline TruncatedSeries one_like(const TruncatedSeries& m) {
    return TruncatedSeries::constant(Rational(1), m.config());
}

// ---- magnitude estimate for stopping rules and residual reporting ----

double approx_norm(const Rational& x);
double approx_norm(const Real& x);
double approx_norm(const TruncatedSeries& x);
template <class T>
double approx_norm(const Complex<T>& x) {
    return std::hypot(approx_norm(x.re), approx_norm(x.im));
}

// ---- integer extraction (exponents, file indices) ----

std::optional<long long> as_integer(const Rational& x);
std::optional<long long> as_integer(const Real& x);
std::optional<long long> as_integer(const TruncatedSeries& x);
template <class T>
std::optional<long long> as_integer(const Complex<T>& x) {
    if (!is_zero(x.im)) return std::nullopt;
    return as_integer(x.re);
}

// ---- integer powers via repeated squaring; negative exponents invert ----

template <class T>
T pow_int(const T& base, long long e) {
    if (e < 0) {
        if (is_zero(base)) throw DomainError("zero raised to a negative power");
        return pow_int(one_like(base) / base, -e);
    }
    T acc = one_like(base);
    T sq = base;
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n > 0) {
        if (n & 1ULL) acc = acc * sq;
        sq = sq * sq;
        n >>= 1;
    }
    return acc;
}

// ---- tolerance comparison: exact types compare exactly, eps is ignored ----

bool close_to(const Rational& a, const Rational& b, double eps);
bool close_to(const Real& a, const Real& b, double eps);
bool close_to(const ComplexRational& a, const ComplexRational& b, double eps);
bool close_to(const ComplexReal& a, const ComplexReal& b, double eps);
bool close_to(const TruncatedSeries& a, const TruncatedSeries& b, double eps);

// ---- per-realization construction, parsing, and printing ----

template <class T>
struct ScalarContext;

template <>
struct ScalarContext<Rational> {
    Rational from_rational(const Rational& r) const { return r; }
    Rational from_int(long long v) const { return Rational(v); }
    Rational parse(const std::string& text) const { return parse_rational(text); }
    std::string render(const Rational& x) const { return cfkit::to_string(x); }
};

template <>
struct ScalarContext<Real> {
    Real from_rational(const Rational& r) const { return real_from_rational(r); }
    Real from_int(long long v) const { return Real(v); }
    Real parse(const std::string& text) const { return real_from_rational(parse_rational(text)); }
    std::string render(const Real& x) const { return cfkit::to_string(x); }
};

template <>
struct ScalarContext<ComplexRational> {
    ComplexRational from_rational(const Rational& r) const { return ComplexRational(r); }
    ComplexRational from_int(long long v) const { return ComplexRational(Rational(v)); }
    ComplexRational parse(const std::string& text) const;
    std::string render(const ComplexRational& x) const;
};

template <>
struct ScalarContext<ComplexReal> {
    ComplexReal from_rational(const Rational& r) const {
        return ComplexReal(real_from_rational(r));
    }
    ComplexReal from_int(long long v) const { return ComplexReal(Real(v)); }
    ComplexReal parse(const std::string& text) const;
    std::string render(const ComplexReal& x) const;
};

template <>
struct ScalarContext<TruncatedSeries> {
    SeriesConfig series;

    TruncatedSeries from_rational(const Rational& r) const {
        return TruncatedSeries::constant(r, series);
    }
    TruncatedSeries from_int(long long v) const {
        return TruncatedSeries::constant(Rational(v), series);
    }
    // The configured variable name parses to the monomial, anything else to a constant.
    TruncatedSeries parse(const std::string& text) const {
        if (text == series.var) return TruncatedSeries::variable(series);
        return TruncatedSeries::constant(parse_rational(text), series);
    }
    std::string render(const TruncatedSeries& x) const { return x.to_string(); }
};

// Splits "re,im" into two rational parts; a lone value is purely real.
std::pair<Rational, Rational> parse_complex_parts(const std::string& text);

}  // namespace cfkit
