#include "cfkit/series.hpp"

#include <sstream>

#include "cfkit/errors.hpp"

namespace cfkit {

namespace {

void require_same_config(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.config() != b.config()) {
        throw ConfigError("series config mismatch: (" + a.config().var + ", degree " +
                          std::to_string(a.config().degree) + ") vs (" + b.config().var +
                          ", degree " + std::to_string(b.config().degree) + ")");
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(SeriesConfig config)
    : config_(std::move(config)), coeffs_(config_.degree + 1, Rational(0)) {}

TruncatedSeries::TruncatedSeries(SeriesConfig config, std::vector<Rational> coeffs)
    : config_(std::move(config)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<std::size_t>(config_.degree) + 1) {
        throw ConfigError("series coefficient count " + std::to_string(coeffs_.size()) +
                          " does not match degree " + std::to_string(config_.degree));
    }
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, const SeriesConfig& config) {
    TruncatedSeries s(config);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::variable(const SeriesConfig& config) {
    if (config.degree < 1) {
        throw ConfigError("series degree must be at least 1 to represent the variable");
    }
    TruncatedSeries s(config);
    s.coeffs_[1] = Rational(1);
    return s;
}

const Rational& TruncatedSeries::coeff(unsigned k) const {
    if (k >= coeffs_.size()) {
        throw ConfigError("coefficient index " + std::to_string(k) + " exceeds degree " +
                          std::to_string(config_.degree));
    }
    return coeffs_[k];
}

bool TruncatedSeries::is_zero() const {
    for (const auto& c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

bool TruncatedSeries::is_constant() const {
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        if (coeffs_[k] != 0) return false;
    }
    return true;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_config(a, b);
    TruncatedSeries r(a.config_);
    for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_config(a, b);
    TruncatedSeries r(a.config_);
    for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a) {
    TruncatedSeries r(a.config_);
    for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = -a.coeffs_[k];
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_config(a, b);
    TruncatedSeries r(a.config_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j < r.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

// Long division against a unit: the divisor needs a nonzero constant term,
// otherwise the quotient leaves the truncated ring.
TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_config(a, b);
    if (b.coeffs_[0] == 0) {
        throw DomainError("series division requires a divisor with nonzero constant term");
    }
    TruncatedSeries q(a.config_);
    for (std::size_t k = 0; k < q.coeffs_.size(); ++k) {
        Rational acc = a.coeffs_[k];
        for (std::size_t j = 1; j <= k; ++j) acc -= b.coeffs_[j] * q.coeffs_[k - j];
        q.coeffs_[k] = acc / b.coeffs_[0];
    }
    return q;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.config_ == b.config_ && a.coeffs_ == b.coeffs_;
}

std::string TruncatedSeries::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        Rational mag = coeffs_[k] < 0 ? Rational(-coeffs_[k]) : coeffs_[k];
        if (first) {
            if (coeffs_[k] < 0) out << "-";
        } else {
            out << (coeffs_[k] < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            out << cfkit::to_string(mag);
        } else {
            if (mag != 1) out << cfkit::to_string(mag) << "*";
            out << config_.var;
            if (k > 1) out << "^" << k;
        }
    }
    if (first) out << "0";
    out << " + O(" << config_.var << "^" << (config_.degree + 1) << ")";
    return out.str();
}

}  // namespace cfkit
