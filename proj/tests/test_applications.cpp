#include <map>
#include <string>
#include <vector>

#include "doctest.h"

#include "cfkit/applications.hpp"
#include "cfkit/coeffs.hpp"
#include "cfkit/contfrac.hpp"
#include "cfkit/errors.hpp"
#include "cfkit/scalar.hpp"

namespace {

using namespace cfkit;

Rational rat(long long num, long long den = 1) { return Rational(num) / Rational(den); }

Real abs_real(const Real& x) { return Real(boost::multiprecision::abs(x)); }

}  // namespace

TEST_CASE("the 0F1 sum matches its closed references") {
    PrecisionGuard guard(128);
    auto at_one = hyp0f1(Real(1), Real(1), 1e-20, 200);
    CHECK_FALSE(at_one.cap_hit);
    CHECK(abs_real(Real(at_one.value - Real("2.2795853023360673"))) < Real("1e-9"));

    auto at_half = hyp0f1(Real(1), Real(1) / Real(2), 1e-25, 200);
    CHECK(abs_real(Real(at_half.value - Real("1.566082929756350537"))) < Real("1e-15"));

    auto at_zero = hyp0f1(rat(5), rat(0), 1e-10, 50);
    CHECK(at_zero.value == rat(1));
    CHECK_FALSE(at_zero.cap_hit);
}

TEST_CASE("the 0F1 sum reports a cap cutoff with the exact partial sum") {
    auto capped = hyp0f1(rat(1), rat(1), 1e-30, 4);
    CHECK(capped.cap_hit);
    CHECK(capped.terms_used == 4);
    CHECK(capped.value == rat(41, 18));
}

TEST_CASE("the 0F1 pole at non-positive integer c is rejected") {
    CHECK_THROWS_AS(hyp0f1(rat(0), rat(1), 1e-10, 50), DomainError);
    CHECK_THROWS_AS(hyp0f1(rat(-3), rat(1), 1e-10, 50), DomainError);
    PrecisionGuard guard(128);
    CHECK_THROWS_AS(hyp0f1(Real(-3), Real(1), 1e-10, 50), DomainError);
    CHECK_THROWS_AS(hyp0f1(Real(1), Real(1), 0.0, 50), ConfigError);
    CHECK_THROWS_AS(hyp0f1(Real(1), Real(1), 1e-10, 0), ConfigError);
}

TEST_CASE("q-Pochhammer products evaluate exactly") {
    CHECK(q_pochhammer(rat(1, 2), 0) == rat(1));
    CHECK(q_pochhammer(rat(1, 2), 3) == rat(21, 64));
    CHECK(q_pochhammer(rat(2), 2) == rat(3));
    CHECK_THROWS_AS(q_pochhammer(rat(1, 2), -1), ConfigError);
}

TEST_CASE("the identity sums match their anchors and feed the fraction value") {
    PrecisionGuard guard(128);
    Real q = Real(1) / Real(5);
    auto g_sum = rr_series(RRKind::G, q, Real(1), 1e-25, 500);
    auto h_sum = rr_series(RRKind::H, q, Real(1), 1e-25, 500);
    CHECK_FALSE(g_sum.cap_hit);
    CHECK_FALSE(h_sum.cap_hit);
    CHECK(abs_real(Real(g_sum.value - Real("1.2520840053849600"))) < Real("1e-12"));
    CHECK(abs_real(Real(h_sum.value - Real("1.0500833387096912"))) < Real("1e-12"));
    Real ratio = Real(h_sum.value / g_sum.value);
    CHECK(abs_real(Real(ratio - Real("0.8386684393327406"))) < Real("1e-12"));

    ScalarContext<Real> ctx;
    std::map<std::string, Real> params{{"q", q}, {"z", Real(1)}};
    auto coeffs = preset_coeffs(Preset::App2, params, ctx);
    Real fraction = eval_backward(coeffs, 60);
    CHECK(abs_real(Real(fraction - ratio)) < Real("1e-10"));
}

TEST_CASE("the identity sums reject moduli at or beyond one") {
    PrecisionGuard guard(128);
    Real three_halves = Real(3) / Real(2);
    CHECK_THROWS_AS(rr_series(RRKind::G, three_halves, Real(1), 1e-10, 50), DomainError);
    CHECK_THROWS_AS(rr_series(RRKind::H, Real(1), Real(1), 1e-10, 50), DomainError);
    auto at_zero = rr_series(RRKind::G, rat(1, 2), rat(0), 1e-10, 50);
    CHECK(at_zero.value == rat(1));
}

TEST_CASE("the shift identity between the two sums holds exactly in the series ring") {
    SeriesConfig cfg{"z", 8};
    ScalarContext<TruncatedSeries> ctx{cfg};
    TruncatedSeries q = ctx.from_rational(rat(1, 3));
    TruncatedSeries z = TruncatedSeries::variable(cfg);
    TruncatedSeries shifted_arg = z * q;
    auto lhs = rr_series(RRKind::G, q, shifted_arg, 1e-10, 100);
    auto rhs = rr_series(RRKind::H, q, z, 1e-10, 100);
    CHECK_FALSE(lhs.cap_hit);
    CHECK_FALSE(rhs.cap_hit);
    CHECK(lhs.value == rhs.value);
}

TEST_CASE("the series realization skips the modulus guard") {
    SeriesConfig cfg{"z", 2};
    ScalarContext<TruncatedSeries> ctx{cfg};
    TruncatedSeries q = ctx.from_int(2);
    TruncatedSeries z = TruncatedSeries::variable(cfg);
    auto sum = rr_series(RRKind::G, q, z, 1e-10, 50);
    CHECK(sum.value.coeff(0) == rat(1));
    CHECK(sum.value.coeff(1) == rat(-2));
    CHECK(sum.value.coeff(2) == rat(16, 3));
}

TEST_CASE("the staircase numerator and denominator sums match their anchors") {
    PrecisionGuard guard(128);
    auto num = app3_series(App3Kind::Numerator, Real(2), Real(1), 1e-25, 300);
    auto den = app3_series(App3Kind::Denominator, Real(2), Real(1), 1e-25, 300);
    CHECK_FALSE(num.cap_hit);
    CHECK_FALSE(den.cap_hit);
    CHECK(abs_real(Real(num.value - Real("1.5424138176101021"))) < Real("1e-12"));
    CHECK(abs_real(Real(den.value - Real("2.1726687508496637"))) < Real("1e-12"));
    Real ratio = Real(num.value / den.value);
    CHECK(abs_real(Real(ratio - Real("0.7099166943911315"))) < Real("1e-12"));

    auto at_zero = app3_series(App3Kind::Numerator, rat(2), rat(0), 1e-10, 50);
    CHECK(at_zero.value == rat(1));
}

TEST_CASE("the staircase sums reject moduli at or below one and zero q") {
    PrecisionGuard guard(128);
    CHECK_THROWS_AS(app3_series(App3Kind::Numerator, rat(0), rat(1), 1e-10, 50), DomainError);
    Real half = Real(1) / Real(2);
    CHECK_THROWS_AS(app3_series(App3Kind::Numerator, half, Real(1), 1e-10, 50), DomainError);
    CHECK_THROWS_AS(app3_series(App3Kind::Denominator, Real(1), Real(1), 1e-10, 50), DomainError);
}

TEST_CASE("both staircase fractions converge to the sum ratio") {
    PrecisionGuard guard(128);
    auto num = app3_series(App3Kind::Numerator, Real(2), Real(1), 1e-25, 300);
    auto den = app3_series(App3Kind::Denominator, Real(2), Real(1), 1e-25, 300);
    Real ratio = Real(num.value / den.value);

    ScalarContext<Real> ctx;
    std::map<std::string, Real> paper_params{{"q", Real(2)}, {"z", Real(1)}, {"c", Real(0)}};
    auto paper = preset_coeffs(Preset::App3Paper, paper_params, ctx);
    Real paper_value = eval_backward(paper, 60);
    CHECK(abs_real(Real(paper_value - ratio)) < Real("1e-10"));

    std::map<std::string, Real> canon_params{{"q", Real(2)}, {"z", Real(1)}};
    auto canonical = preset_coeffs(Preset::App3Canonical, canon_params, ctx);
    Real canon_value = eval_backward(canonical, 60);
    CHECK(abs_real(Real(canon_value - ratio)) < Real("1e-10"));
    CHECK(abs_real(Real(paper_value - canon_value)) < Real("1e-12"));
}

TEST_CASE("the denominator sum satisfies its functional equation in the series ring") {
    SeriesConfig cfg{"z", 8};
    ScalarContext<TruncatedSeries> ctx{cfg};
    TruncatedSeries q = ctx.from_int(2);
    TruncatedSeries z = TruncatedSeries::variable(cfg);
    TruncatedSeries qinv = ctx.from_int(1) / q;
    TruncatedSeries z_over_q = z * qinv;
    TruncatedSeries z_over_q2 = z * qinv * qinv;

    auto d_z = app3_series(App3Kind::Denominator, q, z, 1e-10, 100);
    auto d_zq = app3_series(App3Kind::Denominator, q, z_over_q, 1e-10, 100);
    auto d_zq2 = app3_series(App3Kind::Denominator, q, z_over_q2, 1e-10, 100);
    TruncatedSeries rhs = d_zq.value + z_over_q * d_zq2.value;
    CHECK(d_z.value == rhs);
}

TEST_CASE("inverting the modulus exchanges the staircase sums with the identity sums") {
    Rational z = rat(1);
    auto num = app3_series(App3Kind::Numerator, rat(2), z, 1e-12, 100);
    auto h_sum = rr_series(RRKind::H, rat(1, 2), z, 1e-12, 100);
    CHECK(num.value == h_sum.value);
    auto den = app3_series(App3Kind::Denominator, rat(2), z, 1e-12, 100);
    auto g_sum = rr_series(RRKind::G, rat(1, 2), z, 1e-12, 100);
    CHECK(den.value == g_sum.value);
}

TEST_CASE("the hypergeometric ratio equals the first fraction") {
    PrecisionGuard guard(128);
    ScalarContext<Real> ctx;
    std::map<std::string, Real> params{{"c", Real(2)}, {"z", Real(1)}};
    auto coeffs = preset_coeffs(Preset::App1, params, ctx);
    Real fraction = eval_backward(coeffs, 60);
    auto upper = hyp0f1(Real(3), Real(1), 1e-25, 200);
    auto lower = hyp0f1(Real(2), Real(1), 1e-25, 200);
    Real ratio = Real(upper.value / lower.value);
    CHECK(abs_real(Real(fraction - ratio)) < Real("1e-10"));
}
