#include "cfkit/verify.hpp"

#include <random>
#include <sstream>

#include "cfkit/applications.hpp"
#include "cfkit/coeffs.hpp"
#include "cfkit/contfrac.hpp"
#include "cfkit/expansion.hpp"
#include "cfkit/rational.hpp"
#include "cfkit/real.hpp"
#include "cfkit/recurrence.hpp"
#include "cfkit/scalar.hpp"

namespace cfkit {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Bounded draw via modulo: bias is irrelevant here, stability of the stream
// across library versions is what matters.
long long int_in(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Numerators in [-9, 9], denominators in [1, 9].
Rational random_rational(std::mt19937_64& rng) {
    long long num = int_in(rng, -9, 9);
    long long den = int_in(rng, 1, 9);
    return Rational(num) / den;
}

Rational random_nonzero_rational(std::mt19937_64& rng) {
    Rational r = random_rational(rng);
    while (r == 0) r = random_rational(rng);
    return r;
}

std::string render_list(const std::vector<Rational>& xs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out << ",";
        out << to_string(xs[i]);
    }
    return out.str();
}

}  // namespace

VerifyReport verify_closed_form(const VerifyOptions& opts) {
    VerifyReport report;
    report.suite = "closed-form";
    report.trials = opts.trials > 0 ? opts.trials : 200;
    std::uint64_t state = opts.seed;
    for (long long trial = 0; trial < report.trials; ++trial) {
        std::uint64_t trial_seed = splitmix64(state);
        std::mt19937_64 rng(trial_seed);
        const long long n_max = 30;
        std::vector<Rational> a, b;
        for (long long m = 0; m <= n_max; ++m) {
            a.push_back(random_rational(rng));
            b.push_back(random_nonzero_rational(rng));
        }
        Rational x0 = random_rational(rng);
        Rational x1 = random_rational(rng);
        auto coeffs = coeffs_from_lists<Rational>(a, b);
        auto prefix = iterate(coeffs, x0, x1, n_max);
        for (long long n = 2; n <= n_max; ++n) {
            Rational closed = reconstruct(coeffs, x0, x1, n);
            if (closed != prefix.values[static_cast<std::size_t>(n)]) {
                report.failures.push_back(
                    {trial_seed,
                     "n=" + std::to_string(n) + " a=[" + render_list(a) + "] b=[" +
                         render_list(b) + "] x0=" + to_string(x0) + " x1=" + to_string(x1),
                     to_string(prefix.values[static_cast<std::size_t>(n)]), to_string(closed)});
                break;
            }
        }
    }
    return report;
}

VerifyReport verify_phi(const VerifyOptions& opts) {
    VerifyReport report;
    report.suite = "phi";
    report.trials = opts.trials > 0 ? opts.trials : 100;
    std::uint64_t state = opts.seed;
    for (long long trial = 0; trial < report.trials; ++trial) {
        std::uint64_t trial_seed = splitmix64(state);
        std::mt19937_64 rng(trial_seed);
        long long q = int_in(rng, 1, 3);
        long long size = int_in(rng, 0, 16);
        long long n = q + size + 1;  // index set {q..n-2} has |size| elements
        GWeights<Rational> g;
        g.unit = Rational(1);
        for (long long i = 1; i <= n - 2; ++i) g.g.push_back(random_rational(rng));
        Rational fast = phi_dp(g, q, n);
        Rational slow = phi_enumerate(g, q, n);
        if (fast != slow) {
            report.failures.push_back({trial_seed,
                                       "q=" + std::to_string(q) + " n=" + std::to_string(n) +
                                           " g=[" + render_list(g.g) + "]",
                                       to_string(slow), to_string(fast)});
            continue;
        }
        long long dmax = (size + 1) / 2;  // enough layers to close the total
        if (opts.phi_depth > dmax) dmax = opts.phi_depth;
        auto table = phi_by_depth(g, q, n, dmax);
        Rational layered(0);
        for (const auto& s : table.by_depth) layered += s;
        if (layered != fast) {
            report.failures.push_back({trial_seed,
                                       "depth closure q=" + std::to_string(q) +
                                           " n=" + std::to_string(n) + " dmax=" +
                                           std::to_string(dmax) + " g=[" + render_list(g.g) + "]",
                                       to_string(fast), to_string(layered)});
        }
    }
    return report;
}

VerifyReport verify_bridge(const VerifyOptions& opts) {
    VerifyReport report;
    report.suite = "bridge";
    report.trials = opts.trials > 0 ? opts.trials : 100;
    std::uint64_t state = opts.seed;
    for (long long trial = 0; trial < report.trials; ++trial) {
        std::uint64_t trial_seed = splitmix64(state);
        std::mt19937_64 rng(trial_seed);
        const long long m_max = 25;
        std::vector<Rational> a, b;
        for (long long m = 0; m <= m_max; ++m) {
            a.push_back(random_rational(rng));
            b.push_back(random_nonzero_rational(rng));
        }
        auto coeffs = coeffs_from_lists<Rational>(a, b);
        auto convs = convergents(coeffs, m_max);
        for (long long m = 0; m <= m_max; ++m) {
            const auto& c = convs[static_cast<std::size_t>(m)];
            if (!c.value) continue;  // at-infinity convergent
            Rational ratio = series_ratio_approx(coeffs, m + 2);
            if (ratio != *c.value) {
                report.failures.push_back(
                    {trial_seed,
                     "m=" + std::to_string(m) + " a=[" + render_list(a) + "] b=[" +
                         render_list(b) + "]",
                     to_string(*c.value), to_string(ratio)});
                break;
            }
        }
    }
    return report;
}

namespace {

struct AppCheck {
    std::string label;
    Real lhs;
    Real rhs;
};

void record_residual(VerifyReport& report, const AppCheck& check, double eps) {
    double resid = approx_norm(Real(check.lhs - check.rhs));
    if (!(resid < eps)) {
        report.failures.push_back({0, check.label + " residual=" + std::to_string(resid),
                                   to_string(check.rhs), to_string(check.lhs)});
    }
}

}  // namespace

VerifyReport verify_apps(const VerifyOptions& opts) {
    VerifyReport report;
    report.suite = "apps";
    const double series_eps = 1e-30;
    const long long series_cap = 10000;
    ScalarContext<Real> ctx;

    // Ratio of contiguous hypergeometric series vs the m+c fraction.
    const std::pair<const char*, const char*> app1_points[] = {
        {"1", "1/2"}, {"2", "-3/10"}, {"1/2", "1/4"}};
    for (const auto& [c_text, z_text] : app1_points) {
        Real c = ctx.parse(c_text);
        Real z = ctx.parse(z_text);
        std::map<std::string, Real> params{{"c", c}, {"z", z}};
        auto coeffs = preset_coeffs(Preset::App1, params, ctx);
        Real frac = eval_backward(coeffs, 60);
        Real num = hyp0f1(Real(c + 1), z, series_eps, series_cap).value;
        Real den = hyp0f1(c, z, series_eps, series_cap).value;
        record_residual(report,
                        {std::string("app1 c=") + c_text + " z=" + z_text, frac, Real(num / den)},
                        opts.eps);
        ++report.trials;
    }

    // Rogers-Ramanujan pair vs the unit-denominator fraction.
    {
        Real q = ctx.parse("1/5");
        Real z = ctx.parse("1");
        std::map<std::string, Real> params{{"q", q}, {"z", z}};
        auto coeffs = preset_coeffs(Preset::App2, params, ctx);
        Real frac = eval_backward(coeffs, 60);
        Real h = rr_series(RRKind::H, q, z, series_eps, series_cap).value;
        Real g = rr_series(RRKind::G, q, z, series_eps, series_cap).value;
        record_residual(report, {"app2 q=1/5 z=1", frac, Real(h / g)}, opts.eps);
        ++report.trials;
    }

    // Alternating q^{-k(k+-1)/2} series ratio vs both preset fractions.
    {
        Real q = ctx.parse("2");
        Real z = ctx.parse("1");
        std::map<std::string, Real> paper_params{{"q", q}, {"z", z}, {"c", ctx.parse("0")}};
        std::map<std::string, Real> canon_params{{"q", q}, {"z", z}};
        Real paper = eval_backward(preset_coeffs(Preset::App3Paper, paper_params, ctx), 60);
        Real canon = eval_backward(preset_coeffs(Preset::App3Canonical, canon_params, ctx), 60);
        Real num = app3_series(App3Kind::Numerator, q, z, series_eps, series_cap).value;
        Real den = app3_series(App3Kind::Denominator, q, z, series_eps, series_cap).value;
        Real ratio = num / den;
        record_residual(report, {"app3 paper-vs-canonical q=2 z=1", paper, canon}, opts.eps);
        record_residual(report, {"app3 paper-vs-series q=2 z=1", paper, ratio}, opts.eps);
        record_residual(report, {"app3 canonical-vs-series q=2 z=1", canon, ratio}, opts.eps);
        ++report.trials;
    }
    return report;
}

std::vector<VerifyReport> run_verify_suites(const std::string& suite, const VerifyOptions& opts) {
    std::vector<VerifyReport> out;
    bool all = (suite == "all");
    bool known = all;
    if (all || suite == "closed-form") {
        out.push_back(verify_closed_form(opts));
        known = true;
    }
    if (all || suite == "phi") {
        out.push_back(verify_phi(opts));
        known = true;
    }
    if (all || suite == "bridge") {
        out.push_back(verify_bridge(opts));
        known = true;
    }
    if (all || suite == "apps") {
        out.push_back(verify_apps(opts));
        known = true;
    }
    if (!known) {
        throw ConfigError("unknown verify suite '" + suite +
                          "' (known: closed-form, phi, bridge, apps, all)");
    }
    return out;
}

}  // namespace cfkit
