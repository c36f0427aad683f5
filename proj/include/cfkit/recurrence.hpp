#pragma once

#include <string>
#include <vector>

#include "cfkit/coeffs.hpp"
#include "cfkit/errors.hpp"
#include "cfkit/scalar.hpp"

namespace cfkit {

// x_0..x_n with x_{m+2} = b_m x_{m+1} + a_m x_m.
template <class T>
struct SolutionPrefix {
    std::vector<T> values;
};

template <class T>
SolutionPrefix<T> iterate(const CoeffSeq<T>& coeffs, const T& x0, const T& x1, long long n) {
    if (n < 1) throw ConfigError("iterate requires n >= 1");
    SolutionPrefix<T> out;
    out.values.reserve(static_cast<std::size_t>(n) + 1);
    out.values.push_back(x0);
    out.values.push_back(x1);
    for (long long m = 0; m + 2 <= n; ++m) {
        const T& xm = out.values[static_cast<std::size_t>(m)];
        const T& xm1 = out.values[static_cast<std::size_t>(m) + 1];
        out.values.push_back(coeffs.b(m) * xm1 + coeffs.a(m) * xm);
    }
    return out;
}

// t_0..t_N built downward from the truncation seed t_{N+1}.
template <class T>
struct TailPrefix {
    std::vector<T> tails;
    long long seed_depth = 0;
    T seed_value{};
};

// t_n = a_n/(b_n + t_{n+1}) from t_{N+1} = 0; t_0 is the depth-N estimate
// of the fraction's value.
template <class T>
TailPrefix<T> tail_backward(const CoeffSeq<T>& coeffs, long long N) {
    if (N < 0) throw ConfigError("tail_backward requires N >= 0");
    TailPrefix<T> out;
    out.seed_depth = N;
    out.seed_value = zero_like(coeffs.a(N));
    out.tails.assign(static_cast<std::size_t>(N) + 1, out.seed_value);
    T t = out.seed_value;
    for (long long m = N; m >= 0; --m) {
        T denom = coeffs.b(m) + t;
        if (is_zero(denom)) {
            throw DomainError("zero denominator b + t at level " + std::to_string(m));
        }
        t = coeffs.a(m) / denom;
        out.tails[static_cast<std::size_t>(m)] = t;
    }
    return out;
}

// Backward recurrence from x_{N+2} = 0, x_{N+1} = 1, normalized to x_0 = 1.
// The returned x_n approximates the minimal solution; -x_1/x_0 estimates t_0.
template <class T>
T minimal_estimate(const CoeffSeq<T>& coeffs, long long N, long long n) {
    if (N < 0 || n < 0 || n > N) {
        throw ConfigError("minimal_estimate requires 0 <= n <= N");
    }
    T model = coeffs.a(0);
    std::vector<T> x(static_cast<std::size_t>(N) + 3, zero_like(model));
    x[static_cast<std::size_t>(N) + 2] = zero_like(model);
    x[static_cast<std::size_t>(N) + 1] = one_like(model);
    for (long long m = N; m >= 0; --m) {
        T am = coeffs.a(m);
        if (is_zero(am)) {
            throw DomainError("a = 0 at index " + std::to_string(m) +
                              " during backward recurrence");
        }
        x[static_cast<std::size_t>(m)] =
            (x[static_cast<std::size_t>(m) + 2] - coeffs.b(m) * x[static_cast<std::size_t>(m) + 1]) /
            am;
    }
    if (is_zero(x[0])) {
        throw DomainError("backward recurrence reached x_0 = 0; cannot normalize");
    }
    return x[static_cast<std::size_t>(n)] / x[0];
}

}  // namespace cfkit
