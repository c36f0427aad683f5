#include "cfkit/rational.hpp"

#include <cctype>

namespace cfkit {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw ConfigError("invalid rational literal '" + std::string(text) + "'");

    auto slash = s.find('/');
    auto dot = s.find('.');
    Rational value;
    if (slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ConfigError("invalid rational literal '" + std::string(text) + "'");
        BigInt d{std::string(den)};
        if (d == 0) throw DomainError("zero denominator in literal '" + std::string(text) + "'");
        value = Rational(BigInt{std::string(num)}) / Rational(d);
    } else if (dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        if (!all_digits(ip) || !all_digits(fp))
            throw ConfigError("invalid decimal literal '" + std::string(text) + "'");
        BigInt scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        BigInt digits = BigInt{std::string(ip)} * scale + BigInt{std::string(fp)};
        value = Rational(digits) / Rational(scale);
    } else {
        if (!all_digits(s)) throw ConfigError("invalid integer literal '" + std::string(text) + "'");
        value = Rational(BigInt{std::string(s)});
    }
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) { return r.str(); }

bool rational_is_integer(const Rational& r) { return denominator(r) == 1; }

std::optional<long long> rational_as_integer(const Rational& r) {
    if (!rational_is_integer(r)) return std::nullopt;
    BigInt n = numerator(r);
    static const BigInt lo = BigInt(std::numeric_limits<long long>::min());
    static const BigInt hi = BigInt(std::numeric_limits<long long>::max());
    if (n < lo || n > hi) return std::nullopt;
    return n.convert_to<long long>();
}

}  // namespace cfkit
