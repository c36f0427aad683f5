#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cfkit/coeffs.hpp"
#include "cfkit/errors.hpp"
#include "cfkit/scalar.hpp"

namespace cfkit {

// Where the coefficients come from: a named preset, a pair of expression
// rules over m, or an explicit per-index list file. Exactly one of the
// three must be given; a0/b0 override index 0 of whichever was chosen.
struct CoeffSource {
    std::optional<std::string> preset;
    std::optional<std::string> a_rule;
    std::optional<std::string> b_rule;
    std::optional<std::string> coeff_file;
    std::vector<std::pair<std::string, std::string>> params;
    std::optional<std::string> a0;
    std::optional<std::string> b0;
};

void validate_source(const CoeffSource& src);

// Reads the explicit-list format: one "a_m b_m" pair per line, line number
// = index m. Values stay as strings so any realization can parse them.
std::vector<std::pair<std::string, std::string>> load_coeff_file(const std::string& path);

template <class T>
std::map<std::string, T> parse_params(const std::vector<std::pair<std::string, std::string>>& kv,
                                      const ScalarContext<T>& ctx) {
    std::map<std::string, T> out;
    for (const auto& [name, value] : kv) {
        if (out.count(name)) throw ConfigError("duplicate parameter '" + name + "'");
        try {
            out.emplace(name, ctx.parse(value));
        } catch (const Error& e) {
            rethrow_with_context(e, "parameter '" + name + "': ");
        }
    }
    return out;
}

template <class T>
CoeffSeq<T> build_coeffs(const CoeffSource& src, const ScalarContext<T>& ctx) {
    validate_source(src);
    std::optional<T> a0;
    std::optional<T> b0;
    try {
        if (src.a0) a0 = ctx.parse(*src.a0);
    } catch (const Error& e) {
        rethrow_with_context(e, "a0 override: ");
    }
    try {
        if (src.b0) b0 = ctx.parse(*src.b0);
    } catch (const Error& e) {
        rethrow_with_context(e, "b0 override: ");
    }
    std::vector<std::pair<std::string, std::string>> params = src.params;
    if constexpr (scalar_traits<T>::is_formal) {
        bool bound = false;
        for (const auto& kv : params) {
            if (kv.first == ctx.series.var) bound = true;
        }
        if (!bound) params.emplace_back(ctx.series.var, ctx.series.var);
    }
    CoeffSeq<T> seq;
    if (src.preset) {
        seq = preset_coeffs(preset_from_name(*src.preset), parse_params(params, ctx), ctx);
    } else if (src.a_rule) {
        return build_coeff_seq(*src.a_rule, *src.b_rule, parse_params(params, ctx), a0, b0, ctx);
    } else {
        std::vector<T> a, b;
        std::size_t line = 0;
        for (const auto& [a_text, b_text] : load_coeff_file(*src.coeff_file)) {
            try {
                a.push_back(ctx.parse(a_text));
                b.push_back(ctx.parse(b_text));
            } catch (const Error& e) {
                rethrow_with_context(e, *src.coeff_file + " line " + std::to_string(line + 1) +
                                            ": ");
            }
            ++line;
        }
        seq = coeffs_from_lists<T>(std::move(a), std::move(b));
    }
    seq.a = detail::with_index0_override<T>(std::move(seq.a), std::move(a0));
    seq.b = detail::with_index0_override<T>(std::move(seq.b), std::move(b0));
    return seq;
}

}  // namespace cfkit
