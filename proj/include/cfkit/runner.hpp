#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cfkit/contfrac.hpp"
#include "cfkit/driver.hpp"
#include "cfkit/expansion.hpp"
#include "cfkit/scalar.hpp"

namespace cfkit {

// Shared evaluation spec for the CLI and the Python bindings: one fraction,
// one realization, one method.
struct RunSpec {
    std::string realization = "float";
    unsigned precision_bits = 128;
    unsigned series_degree = 8;
    long long depth = 30;
    long long phi_depth = 8;
    double eps = 1e-10;
    CoeffSource source;
    std::string method = "backward";
};

struct EvalRecord {
    std::string method;
    std::string value;
    long long depth = 0;
    std::string residual;
    std::optional<bool> converged;
};

struct TableRow {
    long long n = 0;
    std::string convergent;
    std::string series_ratio;
    std::string abs_diff;
};

inline std::string abs_diff_string(const ScalarContext<Rational>&, const Rational& a,
                                   const Rational& b) {
    return to_string(Rational(boost::multiprecision::abs(Rational(a - b))));
}
inline std::string abs_diff_string(const ScalarContext<Real>&, const Real& a, const Real& b) {
    return to_string(Real(boost::multiprecision::abs(Real(a - b))));
}
inline std::string abs_diff_string(const ScalarContext<ComplexReal>&, const ComplexReal& a,
                                   const ComplexReal& b) {
    return to_string(Real(boost::multiprecision::sqrt((a - b).norm_squared())));
}
// The formal ring has no magnitude; the exact signed difference is printed.
inline std::string abs_diff_string(const ScalarContext<TruncatedSeries>&, const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    return (a - b).to_string();
}

template <class Fn>
decltype(auto) with_realization(const RunSpec& spec, Fn&& fn) {
    if (spec.realization == "rational") return fn(ScalarContext<Rational>{});
    if (spec.realization == "float") return fn(ScalarContext<Real>{});
    if (spec.realization == "complex") return fn(ScalarContext<ComplexReal>{});
    if (spec.realization == "series") {
        return fn(ScalarContext<TruncatedSeries>{SeriesConfig{"z", spec.series_degree}});
    }
    throw ConfigError("unknown realization '" + spec.realization + "'");
}

inline EvalRecord run_eval(const RunSpec& spec) {
    return with_realization(spec, [&](auto ctx) -> EvalRecord {
        using T = decltype(ctx.from_int(0));
        auto coeffs = build_coeffs<T>(spec.source, ctx);
        if (spec.method == "lentz") {
            if constexpr (scalar_traits<T>::is_exact || scalar_traits<T>::is_formal) {
                throw ConfigError("method lentz requires the float or complex realization");
            } else {
                auto res = eval_lentz(coeffs, spec.eps, spec.depth);
                T alt = eval_backward(coeffs, spec.depth);
                return EvalRecord{"lentz", ctx.render(res.value), res.iterations,
                                  abs_diff_string(ctx, res.value, alt), res.converged};
            }
        }
        if (spec.method == "backward") {
            T value = eval_backward(coeffs, spec.depth);
            auto convs = convergents(coeffs, spec.depth);
            const auto& last = convs.back().value;
            std::string residual = last ? abs_diff_string(ctx, value, *last) : "nan";
            return EvalRecord{"backward", ctx.render(value), spec.depth, residual, std::nullopt};
        }
        if (spec.method == "convergent") {
            auto convs = convergents(coeffs, spec.depth);
            const auto& last = convs.back();
            if (!last.value) {
                return EvalRecord{"convergent", "inf", spec.depth, "nan", std::nullopt};
            }
            T alt = eval_backward(coeffs, spec.depth);
            return EvalRecord{"convergent", ctx.render(*last.value), spec.depth,
                              abs_diff_string(ctx, *last.value, alt), std::nullopt};
        }
        if (spec.method == "series-ratio") {
            T value = series_ratio_approx(coeffs, spec.depth + 2);
            auto convs = convergents(coeffs, spec.depth);
            const auto& last = convs.back().value;
            std::string residual = last ? abs_diff_string(ctx, value, *last) : "nan";
            return EvalRecord{"series-ratio", ctx.render(value), spec.depth, residual,
                              std::nullopt};
        }
        throw ConfigError("unknown method '" + spec.method +
                          "' (known: backward, lentz, convergent, series-ratio)");
    });
}

inline std::vector<TableRow> run_table(const RunSpec& spec) {
    return with_realization(spec, [&](auto ctx) -> std::vector<TableRow> {
        using T = decltype(ctx.from_int(0));
        auto coeffs = build_coeffs<T>(spec.source, ctx);
        auto convs = convergents(coeffs, spec.depth);
        std::vector<TableRow> rows;
        for (long long n = 0; n <= spec.depth; ++n) {
            const auto& c = convs[static_cast<std::size_t>(n)];
            TableRow row{n, c.value ? ctx.render(*c.value) : "inf", "", ""};
            std::optional<T> ratio;
            try {
                ratio = series_ratio_approx(coeffs, n + 2);
            } catch (const DomainError&) {
                // Degenerate Phi_1 corresponds to a convergent at infinity.
            }
            row.series_ratio = ratio ? ctx.render(*ratio) : "inf";
            row.abs_diff = (c.value && ratio) ? abs_diff_string(ctx, *c.value, *ratio) : "nan";
            rows.push_back(std::move(row));
        }
        return rows;
    });
}

}  // namespace cfkit
