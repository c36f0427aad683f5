#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cfkit/applications.hpp"
#include "cfkit/errors.hpp"
#include "cfkit/expr.hpp"
#include "cfkit/real.hpp"
#include "cfkit/recurrence.hpp"
#include "cfkit/runner.hpp"
#include "cfkit/verify.hpp"

namespace py = pybind11;
using namespace cfkit;

namespace {

CoeffSource make_source(const std::optional<std::string>& preset,
                        const std::optional<std::string>& a, const std::optional<std::string>& b,
                        const std::optional<std::string>& coeff_file,
                        const std::map<std::string, std::string>& params,
                        const std::optional<std::string>& a0,
                        const std::optional<std::string>& b0) {
    CoeffSource src;
    src.preset = preset;
    src.a_rule = a;
    src.b_rule = b;
    src.coeff_file = coeff_file;
    for (const auto& kv : params) src.params.emplace_back(kv.first, kv.second);
    src.a0 = a0;
    src.b0 = b0;
    return src;
}

std::string seed_hex(std::uint64_t seed) {
    char buf[19];
    std::snprintf(buf, sizeof(buf), "0x%016llx", static_cast<unsigned long long>(seed));
    return buf;
}

py::dict record_dict(const EvalRecord& rec) {
    py::dict d;
    d["method"] = rec.method;
    d["value"] = rec.value;
    d["depth"] = rec.depth;
    d["residual"] = rec.residual;
    if (rec.converged) d["converged"] = *rec.converged;
    return d;
}

// Rebuilds a coefficient sequence from explicit per-index lists of value texts.
template <class T, class Ctx>
CoeffSeq<T> lists_to_coeffs(const Ctx& ctx, const std::vector<std::string>& a,
                            const std::vector<std::string>& b) {
    std::vector<T> av, bv;
    av.reserve(a.size());
    bv.reserve(b.size());
    for (const auto& s : a) av.push_back(ctx.parse(s));
    for (const auto& s : b) bv.push_back(ctx.parse(s));
    return coeffs_from_lists<T>(std::move(av), std::move(bv));
}

GWeights<Rational> lists_to_gweights(const std::vector<std::string>& g) {
    ScalarContext<Rational> ctx;
    GWeights<Rational> gw;
    gw.unit = Rational(1);
    gw.g.reserve(g.size());
    for (const auto& s : g) gw.g.push_back(ctx.parse(s));
    return gw;
}

template <class T>
py::dict series_value_dict(const ScalarContext<T>& ctx, const SeriesValue<T>& sv) {
    py::dict d;
    d["value"] = ctx.render(sv.value);
    d["terms_used"] = sv.terms_used;
    d["cap_hit"] = sv.cap_hit;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Continued-fraction toolkit: closed-form three-term recurrences, convergents, "
              "and q-series cross-checks";

    // Derived kinds registered after the base so their translators run first.
    py::register_exception<Error>(m, "ToolkitError", PyExc_RuntimeError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ExprParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);

    m.def(
        "eval_fraction",
        [](const std::string& method, long long depth, const std::string& realization,
           unsigned precision_bits, unsigned series_degree, double eps,
           const std::optional<std::string>& preset, const std::optional<std::string>& a,
           const std::optional<std::string>& b, const std::optional<std::string>& coeff_file,
           const std::map<std::string, std::string>& params,
           const std::optional<std::string>& a0, const std::optional<std::string>& b0) {
            PrecisionGuard guard(precision_bits);
            RunSpec spec;
            spec.method = method;
            spec.depth = depth;
            spec.realization = realization;
            spec.precision_bits = precision_bits;
            spec.series_degree = series_degree;
            spec.eps = eps;
            spec.source = make_source(preset, a, b, coeff_file, params, a0, b0);
            return record_dict(run_eval(spec));
        },
        py::arg("method") = "backward", py::arg("depth") = 30,
        py::arg("realization") = "float", py::arg("precision_bits") = 128,
        py::arg("series_degree") = 8, py::arg("eps") = 1e-10,
        py::arg("preset") = std::optional<std::string>(),
        py::arg("a") = std::optional<std::string>(), py::arg("b") = std::optional<std::string>(),
        py::arg("coeff_file") = std::optional<std::string>(),
        py::arg("params") = std::map<std::string, std::string>{},
        py::arg("a0") = std::optional<std::string>(),
        py::arg("b0") = std::optional<std::string>(),
        "Evaluate the fraction by one method; returns a dict with the value, the depth, and "
        "the residual against an independent method. A lentz record that failed to converge "
        "carries converged=False instead of raising.");

    m.def(
        "convergent_table",
        [](long long depth, const std::string& realization, unsigned precision_bits,
           unsigned series_degree, const std::optional<std::string>& preset,
           const std::optional<std::string>& a, const std::optional<std::string>& b,
           const std::optional<std::string>& coeff_file,
           const std::map<std::string, std::string>& params,
           const std::optional<std::string>& a0, const std::optional<std::string>& b0) {
            PrecisionGuard guard(precision_bits);
            RunSpec spec;
            spec.depth = depth;
            spec.realization = realization;
            spec.precision_bits = precision_bits;
            spec.series_degree = series_degree;
            spec.source = make_source(preset, a, b, coeff_file, params, a0, b0);
            py::list rows;
            for (const auto& r : run_table(spec)) {
                py::dict d;
                d["n"] = r.n;
                d["convergent"] = r.convergent;
                d["series_ratio"] = r.series_ratio;
                d["abs_diff"] = r.abs_diff;
                rows.append(d);
            }
            return rows;
        },
        py::arg("depth") = 30, py::arg("realization") = "float",
        py::arg("precision_bits") = 128, py::arg("series_degree") = 8,
        py::arg("preset") = std::optional<std::string>(),
        py::arg("a") = std::optional<std::string>(), py::arg("b") = std::optional<std::string>(),
        py::arg("coeff_file") = std::optional<std::string>(),
        py::arg("params") = std::map<std::string, std::string>{},
        py::arg("a0") = std::optional<std::string>(),
        py::arg("b0") = std::optional<std::string>(),
        "Row-by-row comparison of convergents P_n/Q_n against the closed-form ratio for "
        "n = 0..depth.");

    m.def(
        "run_verify",
        [](const std::string& suite, std::uint64_t seed, long long trials, double eps,
           long long phi_depth) {
            VerifyOptions opts;
            opts.seed = seed;
            opts.trials = trials;
            opts.eps = eps;
            opts.phi_depth = phi_depth;
            auto reports = run_verify_suites(suite, opts);
            bool all_pass = true;
            py::list suites;
            for (const auto& r : reports) {
                all_pass = all_pass && r.pass();
                py::dict s;
                s["suite"] = r.suite;
                s["trials"] = r.trials;
                py::list failures;
                for (const auto& f : r.failures) {
                    py::dict fd;
                    fd["seed"] = seed_hex(f.seed);
                    fd["inputs"] = f.inputs;
                    fd["expected"] = f.expected;
                    fd["actual"] = f.actual;
                    failures.append(fd);
                }
                s["failures"] = failures;
                s["status"] = r.pass() ? "pass" : "fail";
                suites.append(s);
            }
            py::dict out;
            out["suites"] = suites;
            out["status"] = all_pass ? "pass" : "fail";
            return out;
        },
        py::arg("suite") = "all", py::arg("seed") = 42, py::arg("trials") = -1,
        py::arg("eps") = 1e-10, py::arg("phi_depth") = -1,
        "Run the randomized verification suites (closed-form, phi, bridge, apps, or all).");

    m.def(
        "iterate_recurrence",
        [](const std::vector<std::string>& a, const std::vector<std::string>& b,
           const std::string& x0, const std::string& x1, long long n,
           const std::string& realization, unsigned precision_bits, unsigned series_degree) {
            PrecisionGuard guard(precision_bits);
            RunSpec spec;
            spec.realization = realization;
            spec.series_degree = series_degree;
            return with_realization(spec, [&](auto ctx) -> std::vector<std::string> {
                using T = decltype(ctx.from_int(0));
                auto coeffs = lists_to_coeffs<T>(ctx, a, b);
                auto prefix = iterate(coeffs, ctx.parse(x0), ctx.parse(x1), n);
                std::vector<std::string> out;
                out.reserve(prefix.values.size());
                for (const auto& v : prefix.values) out.push_back(ctx.render(v));
                return out;
            });
        },
        py::arg("a"), py::arg("b"), py::arg("x0"), py::arg("x1"), py::arg("n"),
        py::arg("realization") = "rational", py::arg("precision_bits") = 128,
        py::arg("series_degree") = 8,
        "Forward iteration x_{m+2} = b_m x_{m+1} + a_m x_m; returns [x_0..x_n] as strings.");

    m.def(
        "closed_form_term",
        [](const std::vector<std::string>& a, const std::vector<std::string>& b,
           const std::string& x0, const std::string& x1, long long n,
           const std::string& realization, unsigned precision_bits, unsigned series_degree) {
            PrecisionGuard guard(precision_bits);
            RunSpec spec;
            spec.realization = realization;
            spec.series_degree = series_degree;
            return with_realization(spec, [&](auto ctx) -> std::string {
                using T = decltype(ctx.from_int(0));
                auto coeffs = lists_to_coeffs<T>(ctx, a, b);
                return ctx.render(reconstruct(coeffs, ctx.parse(x0), ctx.parse(x1), n));
            });
        },
        py::arg("a"), py::arg("b"), py::arg("x0"), py::arg("x1"), py::arg("n"),
        py::arg("realization") = "rational", py::arg("precision_bits") = 128,
        py::arg("series_degree") = 8,
        "Closed-form x_n from the weighted gap-subset sums, without iterating.");

    m.def(
        "phi_total",
        [](const std::vector<std::string>& g, long long q, long long n) {
            ScalarContext<Rational> ctx;
            return ctx.render(phi_dp(lists_to_gweights(g), q, n));
        },
        py::arg("g"), py::arg("q"), py::arg("n"),
        "Three-term recurrence evaluation of the gap-subset sum Phi_{q,n} over rational "
        "g-weights given as strings g_1..g_k.");

    m.def(
        "phi_brute",
        [](const std::vector<std::string>& g, long long q, long long n) {
            ScalarContext<Rational> ctx;
            return ctx.render(phi_enumerate(lists_to_gweights(g), q, n));
        },
        py::arg("g"), py::arg("q"), py::arg("n"),
        "Bitmask enumeration oracle for Phi_{q,n}; index window capped at 24 positions.");

    m.def(
        "phi_layers",
        [](const std::vector<std::string>& g, long long q, long long n, long long dmax) {
            ScalarContext<Rational> ctx;
            auto table = phi_by_depth(lists_to_gweights(g), q, n, dmax);
            py::dict d;
            d["total"] = ctx.render(table.total);
            py::list layers;
            for (const auto& v : table.by_depth) layers.append(ctx.render(v));
            d["by_depth"] = layers;
            return d;
        },
        py::arg("g"), py::arg("q"), py::arg("n"), py::arg("dmax"),
        "Phi_{q,n} split by subset size d = 0..dmax; the layers sum to the total.");

    m.def(
        "hyp0f1_sum",
        [](const std::string& c, const std::string& z, unsigned precision_bits, double eps,
           long long cap) {
            PrecisionGuard guard(precision_bits);
            ScalarContext<Real> ctx;
            return series_value_dict(ctx, hyp0f1(ctx.parse(c), ctx.parse(z), eps, cap));
        },
        py::arg("c"), py::arg("z"), py::arg("precision_bits") = 128, py::arg("eps") = 1e-30,
        py::arg("cap") = 10000,
        "Confluent limit series sum_k z^k / ((c)_k k!) with term-ratio updates.");

    m.def(
        "q_pochhammer",
        [](const std::string& q, long long k) {
            ScalarContext<Rational> ctx;
            return ctx.render(q_pochhammer(ctx.parse(q), k));
        },
        py::arg("q"), py::arg("k"),
        "(q)_k = prod_{j=1..k} (1 - q^j), computed exactly.");

    m.def(
        "rr_sum",
        [](const std::string& kind, const std::string& q, const std::string& z,
           unsigned precision_bits, double eps, long long cap) {
            RRKind k;
            if (kind == "G") {
                k = RRKind::G;
            } else if (kind == "H") {
                k = RRKind::H;
            } else {
                throw ConfigError("kind must be 'G' or 'H', got '" + kind + "'");
            }
            PrecisionGuard guard(precision_bits);
            ScalarContext<Real> ctx;
            return series_value_dict(ctx, rr_series(k, ctx.parse(q), ctx.parse(z), eps, cap));
        },
        py::arg("kind"), py::arg("q"), py::arg("z"), py::arg("precision_bits") = 128,
        py::arg("eps") = 1e-30, py::arg("cap") = 10000,
        "G(q,z) = sum q^{k^2} z^k / (q)_k or H(q,z) = sum q^{k(k+1)} z^k / (q)_k for |q| < 1.");

    m.def(
        "app3_sum",
        [](const std::string& kind, const std::string& q, const std::string& z,
           unsigned precision_bits, double eps, long long cap) {
            App3Kind k;
            if (kind == "numerator") {
                k = App3Kind::Numerator;
            } else if (kind == "denominator") {
                k = App3Kind::Denominator;
            } else {
                throw ConfigError("kind must be 'numerator' or 'denominator', got '" + kind +
                                  "'");
            }
            PrecisionGuard guard(precision_bits);
            ScalarContext<Real> ctx;
            return series_value_dict(ctx, app3_series(k, ctx.parse(q), ctx.parse(z), eps, cap));
        },
        py::arg("kind"), py::arg("q"), py::arg("z"), py::arg("precision_bits") = 128,
        py::arg("eps") = 1e-30, py::arg("cap") = 10000,
        "Alternating q-inverse series for the |q| > 1 fraction: the numerator and denominator "
        "of its limit value.");

    m.def(
        "parse_expression",
        [](const std::string& text) { return render_expr(parse_expr(text)); },
        py::arg("text"),
        "Parse a coefficient-rule expression and return its canonical rendering.");

    m.def(
        "expression_vars",
        [](const std::string& text) {
            auto vars = free_vars(parse_expr(text));
            return std::vector<std::string>(vars.begin(), vars.end());
        },
        py::arg("text"), "Sorted free identifiers of a coefficient-rule expression.");

    m.def(
        "evaluate_expression",
        [](const std::string& text, const std::map<std::string, std::string>& bindings,
           const std::string& realization, unsigned precision_bits, unsigned series_degree) {
            PrecisionGuard guard(precision_bits);
            RunSpec spec;
            spec.realization = realization;
            spec.series_degree = series_degree;
            return with_realization(spec, [&](auto ctx) -> std::string {
                using T = decltype(ctx.from_int(0));
                std::map<std::string, T> env;
                for (const auto& kv : bindings) env.emplace(kv.first, ctx.parse(kv.second));
                return ctx.render(eval_expr(parse_expr(text), env, ctx));
            });
        },
        py::arg("text"), py::arg("bindings") = std::map<std::string, std::string>{},
        py::arg("realization") = "rational", py::arg("precision_bits") = 128,
        py::arg("series_degree") = 8,
        "Evaluate a coefficient-rule expression under the given variable bindings.");
}
