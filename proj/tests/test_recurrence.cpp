#include <map>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"

#include "cfkit/coeffs.hpp"
#include "cfkit/errors.hpp"
#include "cfkit/recurrence.hpp"
#include "cfkit/scalar.hpp"

namespace {

using namespace cfkit;

Rational rat(long long num, long long den = 1) { return Rational(num) / Rational(den); }

CoeffSeq<Rational> const_coeffs(long long a, long long b) {
    CoeffSeq<Rational> seq;
    seq.a = [a](long long) { return rat(a); };
    seq.b = [b](long long) { return rat(b); };
    return seq;
}

CoeffSeq<Real> const_real(long long a, long long b) {
    CoeffSeq<Real> seq;
    seq.a = [a](long long) { return Real(a); };
    seq.b = [b](long long) { return Real(b); };
    return seq;
}

Rational random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 9);
    return rat(num(rng), den(rng));
}

Real abs_real(const Real& x) { return Real(boost::multiprecision::abs(x)); }

}  // namespace

TEST_CASE("forward iteration reproduces hand-computed prefixes") {
    auto fib = iterate(const_coeffs(1, 1), rat(0), rat(1), 10);
    REQUIRE(fib.values.size() == 11);
    CHECK(fib.values[10] == rat(55));

    auto zeros = iterate(const_coeffs(3, -2), rat(0), rat(0), 6);
    for (const auto& v : zeros.values) CHECK(is_zero(v));

    auto doubling = iterate(const_coeffs(2, 0), rat(1), rat(5), 4);
    CHECK(doubling.values == std::vector<Rational>{rat(1), rat(5), rat(2), rat(10), rat(4)});

    CHECK_THROWS_AS(iterate(const_coeffs(1, 1), rat(0), rat(1), 0), ConfigError);
}

TEST_CASE("iterated prefixes satisfy the three-term relation exactly") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> av, bv;
        for (int i = 0; i < 21; ++i) {
            av.push_back(random_rat(rng));
            bv.push_back(random_rat(rng));
        }
        auto coeffs = coeffs_from_lists<Rational>(av, bv);
        auto prefix = iterate(coeffs, random_rat(rng), random_rat(rng), 20);
        for (long long m = 0; m + 2 <= 20; ++m) {
            Rational lhs = prefix.values[m + 2];
            Rational rhs = bv[m] * prefix.values[m + 1] + av[m] * prefix.values[m];
            CHECK(lhs == Rational(rhs));
        }
    }
}

TEST_CASE("backward tail evaluation converges on the golden-ratio fraction") {
    PrecisionGuard guard(128);
    auto tails = tail_backward(const_real(1, 1), 30);
    REQUIRE(tails.tails.size() == 31);
    Real golden = Real(Real(boost::multiprecision::sqrt(Real(5))) - Real(1)) / Real(2);
    CHECK(abs_real(Real(tails.tails[0] - golden)) < Real("1e-12"));
    CHECK(tails.seed_depth == 30);
    CHECK(is_zero(tails.seed_value));
}

TEST_CASE("a single backward level divides the head coefficients") {
    auto tails = tail_backward(const_coeffs(5, 2), 0);
    REQUIRE(tails.tails.size() == 1);
    CHECK(tails.tails[0] == rat(5, 2));
}

TEST_CASE("backward tails satisfy their defining relation by construction") {
    std::mt19937_64 rng(12);
    std::vector<Rational> av, bv;
    for (int i = 0; i < 16; ++i) {
        av.push_back(random_rat(rng));
        Rational b = random_rat(rng);
        while (is_zero(b)) b = random_rat(rng);
        bv.push_back(b);
    }
    auto coeffs = coeffs_from_lists<Rational>(av, bv);
    auto tails = tail_backward(coeffs, 15);
    for (long long n = 0; n + 1 <= 15; ++n) {
        Rational lhs = tails.tails[n] * Rational(bv[n] + tails.tails[n + 1]);
        CHECK(lhs == av[n]);
    }
}

TEST_CASE("a vanishing backward denominator is a reported domain error") {
    try {
        auto tails = tail_backward(const_coeffs(1, 0), 3);
        (void)tails;
        FAIL("expected a domain error");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("3") != std::string::npos);
    }
}

TEST_CASE("minimal-solution estimate matches the backward tail on unit coefficients") {
    PrecisionGuard guard(128);
    auto coeffs = const_real(1, 1);
    auto tails = tail_backward(coeffs, 40);
    Real x1 = minimal_estimate(coeffs, 40, 1);
    Real k = Real(-x1);
    CHECK(abs_real(Real(k - tails.tails[0])) < Real("1e-12"));
}

TEST_CASE("ratios of the minimal estimate satisfy the tail relation") {
    PrecisionGuard guard(128);
    auto coeffs = const_real(1, 1);
    std::vector<Real> xs;
    for (long long n = 0; n <= 12; ++n) xs.push_back(minimal_estimate(coeffs, 40, n));
    for (long long n = 0; n <= 10; ++n) {
        Real tn = Real(-xs[n + 1] / xs[n]);
        Real tn1 = Real(-xs[n + 2] / xs[n + 1]);
        Real residual = abs_real(Real(tn * Real(Real(1) + tn1) - Real(1)));
        CHECK(residual < Real("1e-12"));
    }
}

TEST_CASE("a zero coefficient blocks the backward division and names its index") {
    std::vector<Rational> av{rat(1), rat(1), rat(1), rat(1), rat(1), rat(0), rat(1), rat(1)},
        bv{rat(1), rat(1), rat(1), rat(1), rat(1), rat(1), rat(1), rat(1)};
    auto coeffs = coeffs_from_lists<Rational>(av, bv);
    try {
        Rational v = minimal_estimate(coeffs, 6, 0);
        (void)v;
        FAIL("expected a domain error");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("5") != std::string::npos);
    }
}

TEST_CASE("normalization rejects a vanishing head value") {
    CHECK_THROWS_AS(minimal_estimate(const_coeffs(1, 0), 0, 0), DomainError);
}

TEST_CASE("tails from forward solutions are consistent with the backward relation") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> av, bv;
        for (int i = 0; i < 21; ++i) {
            av.push_back(random_rat(rng));
            bv.push_back(random_rat(rng));
        }
        auto coeffs = coeffs_from_lists<Rational>(av, bv);
        auto prefix = iterate(coeffs, random_rat(rng), random_rat(rng), 21);
        for (long long n = 0; n + 2 <= 21; ++n) {
            if (is_zero(prefix.values[n]) || is_zero(prefix.values[n + 1])) continue;
            Rational tn = Rational(-prefix.values[n + 1] / prefix.values[n]);
            Rational tn1 = Rational(-prefix.values[n + 2] / prefix.values[n + 1]);
            CHECK(Rational(tn * Rational(bv[n] + tn1)) == av[n]);
        }
    }
}

TEST_CASE("backward estimates are stable in the truncation depth at the preset points") {
    PrecisionGuard guard(128);
    ScalarContext<Real> ctx;
    struct Case {
        Preset preset;
        std::map<std::string, Real> params;
    };
    std::vector<Case> cases;
    cases.push_back({Preset::App1, {{"c", Real(1)}, {"z", ctx.parse("1/2")}}});
    cases.push_back({Preset::App2, {{"q", ctx.parse("1/5")}, {"z", Real(1)}}});
    cases.push_back({Preset::App3Canonical, {{"q", Real(2)}, {"z", Real(1)}}});
    for (const auto& c : cases) {
        auto coeffs = preset_coeffs(c.preset, c.params, ctx);
        Real t40 = tail_backward(coeffs, 40).tails[0];
        Real t50 = tail_backward(coeffs, 50).tails[0];
        CHECK(abs_real(Real(t40 - t50)) < Real("1e-10"));
        Real x1 = minimal_estimate(coeffs, 40, 1);
        CHECK(abs_real(Real(Real(-x1) - t40)) < Real("1e-10"));
    }
}
