#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cfkit/errors.hpp"
#include "cfkit/expr.hpp"
#include "cfkit/scalar.hpp"

namespace cfkit {

// Partial numerators a(m) and partial denominators b(m), m >= 0.
// b(m) != 0 is not enforced here; consumers check where it matters.
template <class T>
struct CoeffSeq {
    std::function<T(long long)> a;
    std::function<T(long long)> b;
};

namespace detail {

template <class T>
std::function<T(long long)> rule_accessor(Expr rule, std::map<std::string, T> params,
                                          ScalarContext<T> ctx, std::string which) {
    return [rule = std::move(rule), params = std::move(params), ctx = std::move(ctx),
            which = std::move(which)](long long m) -> T {
        try {
            auto bindings = params;
            bindings.insert_or_assign("m", ctx.from_int(m));
            return eval_expr(rule, bindings, ctx);
        } catch (const Error& e) {
            rethrow_with_context(e, which + "(" + std::to_string(m) + "): ");
        }
    };
}

template <class T>
std::function<T(long long)> with_index0_override(std::function<T(long long)> base,
                                                 std::optional<T> override0) {
    if (!override0) return base;
    return [base = std::move(base), v = std::move(*override0)](long long m) -> T {
        return m == 0 ? v : base(m);
    };
}

}  // namespace detail

// Builds accessors from expression rules over m and the given parameters.
// Unbound identifiers are rejected up front; evaluation failures are
// reported with the index at which they occurred.
template <class T>
CoeffSeq<T> build_coeff_seq(const std::string& a_rule, const std::string& b_rule,
                            const std::map<std::string, T>& params,
                            const std::optional<T>& a0_override,
                            const std::optional<T>& b0_override, const ScalarContext<T>& ctx) {
    if (params.count("m")) throw ConfigError("parameter name 'm' is reserved for the index");
    Expr a_expr;
    Expr b_expr;
    try {
        a_expr = parse_expr(a_rule);
    } catch (const Error& e) {
        rethrow_with_context(e, "rule for a: ");
    }
    try {
        b_expr = parse_expr(b_rule);
    } catch (const Error& e) {
        rethrow_with_context(e, "rule for b: ");
    }
    for (const auto& [expr, label] : {std::pair{a_expr, "a"}, std::pair{b_expr, "b"}}) {
        for (const auto& v : free_vars(expr)) {
            if (v != "m" && !params.count(v)) {
                throw ConfigError("rule for " + std::string(label) +
                                  " references unbound identifier '" + v + "'");
            }
        }
    }
    CoeffSeq<T> seq;
    seq.a = detail::with_index0_override<T>(detail::rule_accessor<T>(a_expr, params, ctx, "a"),
                                            a0_override);
    seq.b = detail::with_index0_override<T>(detail::rule_accessor<T>(b_expr, params, ctx, "b"),
                                            b0_override);
    return seq;
}

// Explicit finite lists; indices beyond the list are a configuration error.
template <class T>
CoeffSeq<T> coeffs_from_lists(std::vector<T> a, std::vector<T> b) {
    auto list_accessor = [](std::vector<T> xs, std::string which) {
        return [xs = std::move(xs), which = std::move(which)](long long m) -> T {
            if (m < 0 || static_cast<std::size_t>(m) >= xs.size()) {
                throw ConfigError("explicit " + which + " list has " +
                                  std::to_string(xs.size()) + " entries but index " +
                                  std::to_string(m) + " was requested");
            }
            return xs[static_cast<std::size_t>(m)];
        };
    };
    CoeffSeq<T> seq;
    seq.a = list_accessor(std::move(a), "a");
    seq.b = list_accessor(std::move(b), "b");
    return seq;
}

enum class Preset { App1, App2, App3Paper, App3Canonical, Constant, List };

inline Preset preset_from_name(const std::string& name) {
    if (name == "app1") return Preset::App1;
    if (name == "app2") return Preset::App2;
    if (name == "app3-paper") return Preset::App3Paper;
    if (name == "app3-canonical") return Preset::App3Canonical;
    if (name == "constant") return Preset::Constant;
    if (name == "list") return Preset::List;
    throw ConfigError("unknown preset '" + name +
                      "' (known: app1, app2, app3-paper, app3-canonical, constant, list)");
}

inline const char* preset_name(Preset p) {
    switch (p) {
        case Preset::App1: return "app1";
        case Preset::App2: return "app2";
        case Preset::App3Paper: return "app3-paper";
        case Preset::App3Canonical: return "app3-canonical";
        case Preset::Constant: return "constant";
        case Preset::List: return "list";
    }
    return "?";
}

// Alternating partial sum s_m = sum_{k=0..m} (-1)^k k, kept in exact integers.
inline long long app3_exponent(long long c, long long m) {
    long long s = 0;
    long long sign = 1;
    for (long long k = 0; k <= m; ++k) {
        s += sign * k;
        sign = -sign;
    }
    long long outer = (m % 2 == 0) ? 1 : -1;
    return outer * (c + s);
}

template <class T>
CoeffSeq<T> preset_coeffs(Preset p, const std::map<std::string, T>& params,
                          const ScalarContext<T>& ctx) {
    auto need = [&](const char* name) -> T {
        auto it = params.find(name);
        if (it == params.end()) {
            throw ConfigError(std::string("preset '") + preset_name(p) +
                              "' requires parameter '" + name + "'");
        }
        return it->second;
    };
    auto reject_unknown = [&](std::initializer_list<const char*> allowed) {
        for (const auto& kv : params) {
            bool ok = false;
            for (const char* name : allowed) {
                if (kv.first == name) ok = true;
            }
            if (!ok) {
                throw ConfigError("preset '" + std::string(preset_name(p)) +
                                  "' does not take parameter '" + kv.first + "'");
            }
        }
    };
    CoeffSeq<T> seq;
    switch (p) {
        case Preset::App1: {
            reject_unknown({"c", "z"});
            T c = need("c");
            T z = need("z");
            seq.a = [c, z](long long m) -> T { return m == 0 ? c : z; };
            seq.b = [c, ctx](long long m) -> T { return c + ctx.from_int(m); };
            return seq;
        }
        case Preset::App2: {
            reject_unknown({"q", "z"});
            T q = need("q");
            T z = need("z");
            T one = one_like(q);
            seq.a = [q, z, one](long long m) -> T {
                return m == 0 ? one : static_cast<T>(z * pow_int(q, m));
            };
            seq.b = [one](long long) -> T { return one; };
            return seq;
        }
        case Preset::App3Paper: {
            reject_unknown({"q", "z", "c"});
            T q = need("q");
            T z = need("z");
            auto c = as_integer(need("c"));
            if (!c) {
                throw ConfigError("preset 'app3-paper' requires an integer value for 'c'");
            }
            T one = one_like(q);
            seq.a = [z, one](long long m) -> T { return m == 0 ? one : z; };
            seq.b = [q, c = *c](long long m) -> T { return pow_int(q, app3_exponent(c, m)); };
            return seq;
        }
        case Preset::App3Canonical: {
            reject_unknown({"q", "z"});
            T q = need("q");
            T z = need("z");
            T one = one_like(q);
            seq.a = [q, z, one](long long m) -> T {
                return m == 0 ? one : static_cast<T>(z * pow_int(q, m - 1));
            };
            seq.b = [q, one](long long m) -> T {
                return m == 0 ? one : pow_int(q, m);
            };
            return seq;
        }
        case Preset::Constant: {
            reject_unknown({"a", "b"});
            T a_val = params.count("a") ? params.at("a") : ctx.from_int(1);
            T b_val = params.count("b") ? params.at("b") : ctx.from_int(1);
            seq.a = [a_val](long long) -> T { return a_val; };
            seq.b = [b_val](long long) -> T { return b_val; };
            return seq;
        }
        case Preset::List:
            throw ConfigError(
                "preset 'list' takes explicit coefficients; supply a coefficient file");
    }
    throw ConfigError("unknown preset");
}

}  // namespace cfkit
