#pragma once

#include <string>
#include <vector>

#include "cfkit/rational.hpp"

namespace cfkit {

// Configuration of the formal power series ring: variable name and the
// truncation order. Two series interoperate only when configs match.
struct SeriesConfig {
    std::string var = "z";
    unsigned degree = 8;

    friend bool operator==(const SeriesConfig& a, const SeriesConfig& b) {
        return a.var == b.var && a.degree == b.degree;
    }
    friend bool operator!=(const SeriesConfig& a, const SeriesConfig& b) { return !(a == b); }
};

// Truncated formal power series with exact rational coefficients,
// carrying terms of order 0..degree inclusive.
class TruncatedSeries {
public:
    TruncatedSeries() : TruncatedSeries(SeriesConfig{}) {}
    explicit TruncatedSeries(SeriesConfig config);
    TruncatedSeries(SeriesConfig config, std::vector<Rational> coeffs);

    static TruncatedSeries constant(const Rational& c, const SeriesConfig& config);
    static TruncatedSeries variable(const SeriesConfig& config);

    const SeriesConfig& config() const { return config_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& coeff(unsigned k) const;

    bool is_zero() const;
    bool is_constant() const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
        return !(a == b);
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }
    TruncatedSeries& operator/=(const TruncatedSeries& o) { return *this = *this / o; }

    std::string to_string() const;

private:
    SeriesConfig config_;
    std::vector<Rational> coeffs_;  // size == degree + 1
};

}  // namespace cfkit
