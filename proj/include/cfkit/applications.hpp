#pragma once

#include <memory>
#include <string>

#include "cfkit/errors.hpp"
#include "cfkit/scalar.hpp"

namespace cfkit {

// Partial sum of a convergent series plus bookkeeping: how many terms were
// added, the magnitude of the last one, and whether the cap cut the sum off
// before the stopping rule fired.
template <class T>
struct SeriesValue {
    T value{};
    long long terms_used = 0;
    double last_term_norm = 0.0;
    bool cap_hit = false;
};

namespace detail {

// Stopping rule shared by all series: three consecutive terms with norm
// below eps times the partial sum's norm. The formal realization has no
// magnitude, so there only exactly vanishing terms count as negligible.
template <class T, class NextTerm>
SeriesValue<T> sum_series(T first_term, NextTerm next, double eps, long long cap) {
    if (eps <= 0) throw ConfigError("series summation requires eps > 0");
    if (cap < 1) throw ConfigError("series summation requires a positive term cap");
    SeriesValue<T> out;
    out.value = zero_like(first_term);
    T term = std::move(first_term);
    int consecutive_small = 0;
    for (long long k = 0; k < cap; ++k) {
        out.value = out.value + term;
        out.terms_used = k + 1;
        out.last_term_norm = approx_norm(term);
        bool small;
        if constexpr (scalar_traits<T>::is_formal) {
            small = is_zero(term);
        } else {
            small = out.last_term_norm < eps * approx_norm(out.value);
        }
        if (small) {
            if (++consecutive_small >= 3) return out;
        } else {
            consecutive_small = 0;
        }
        term = next(term);
    }
    out.cap_hit = true;
    return out;
}

}  // namespace detail

// 0F1(;c;z) = sum_k z^k / ((c)_k k!), where (c)_k is the rising factorial.
template <class T>
SeriesValue<T> hyp0f1(const T& c, const T& z, double eps, long long cap) {
    auto ci = as_integer(c);
    if (ci && *ci <= 0) {
        throw DomainError("hyp0f1 pole: c = " + std::to_string(*ci) +
                          " makes the rising factorial vanish");
    }
    T one = one_like(c);
    // Term ratio: t_{k+1} = t_k * z / ((c+k)(k+1)).
    struct State {
        T ck;  // c + k
        T k1;  // k + 1
    };
    auto state = std::make_shared<State>(State{c, one});
    return detail::sum_series<T>(
        one,
        [z, one, state](const T& term) -> T {
            T denom = state->ck * state->k1;
            if (is_zero(denom)) throw DomainError("hyp0f1: rising factorial hit zero");
            T next = term * z / denom;
            state->ck = state->ck + one;
            state->k1 = state->k1 + one;
            return next;
        },
        eps, cap);
}

// q-Pochhammer (q)_k = (1-q)(1-q^2)...(1-q^k), with (q)_0 = 1.
template <class T>
T q_pochhammer(const T& q, long long k) {
    if (k < 0) throw ConfigError("q_pochhammer requires k >= 0");
    T prod = one_like(q);
    T qpow = q;
    for (long long j = 1; j <= k; ++j) {
        prod = prod * (one_like(q) - qpow);
        qpow = qpow * q;
    }
    return prod;
}

enum class RRKind { G, H };
enum class App3Kind { Numerator, Denominator };

// G(q,z) = sum q^{k^2} z^k / (q)_k and H(q,z) = sum q^{k(k+1)} z^k / (q)_k.
// Convergent for |q| < 1; the formal series realization skips that guard.
template <class T>
SeriesValue<T> rr_series(RRKind kind, const T& q, const T& z, double eps, long long cap) {
    if constexpr (!scalar_traits<T>::is_formal) {
        if (approx_norm(q) >= 1.0) {
            throw DomainError("rr_series requires |q| < 1");
        }
    }
    T one = one_like(q);
    // Term ratio: q^{2k+1} z / (1-q^{k+1}) for G, q^{2k+2} z / (1-q^{k+1}) for H.
    struct State {
        T q2k;  // q^{2k}
        T qk1;  // q^{k+1}
    };
    auto state = std::make_shared<State>(State{one, q});
    T qsq = q * q;
    const bool is_h = (kind == RRKind::H);
    return detail::sum_series<T>(
        one,
        [q, z, one, qsq, is_h, state](const T& term) -> T {
            T denom = one - state->qk1;
            if (is_zero(denom)) throw DomainError("rr_series: 1 - q^k vanished");
            T ratio = state->q2k * q * z / denom;
            if (is_h) ratio = ratio * q;
            state->q2k = state->q2k * qsq;
            state->qk1 = state->qk1 * q;
            return term * ratio;
        },
        eps, cap);
}

// Numerator sum (-1)^k z^k q^{-k(k+1)/2} / (q)_k and denominator sum
// (-1)^k z^k q^{-k(k-1)/2} / (q)_k. Convergent for |q| > 1; the formal
// series realization skips that guard.
template <class T>
SeriesValue<T> app3_series(App3Kind kind, const T& q, const T& z, double eps, long long cap) {
    if (is_zero(q)) throw DomainError("app3_series requires q != 0");
    if constexpr (!scalar_traits<T>::is_formal) {
        if (approx_norm(q) <= 1.0) {
            throw DomainError("app3_series requires |q| > 1");
        }
    }
    T one = one_like(q);
    T qinv = one / q;
    // Term ratio: -z q^{-(k+1)} / (1-q^{k+1}) for the numerator,
    //             -z q^{-k}     / (1-q^{k+1}) for the denominator.
    struct State {
        T qinv_k;  // q^{-k}
        T qk1;     // q^{k+1}
    };
    auto state = std::make_shared<State>(State{one, q});
    const bool is_num = (kind == App3Kind::Numerator);
    return detail::sum_series<T>(
        one,
        [q, z, qinv, one, is_num, state](const T& term) -> T {
            T denom = one - state->qk1;
            if (is_zero(denom)) throw DomainError("app3_series: 1 - q^k vanished");
            T ratio = zero_like(one) - z * state->qinv_k / denom;
            if (is_num) ratio = ratio * qinv;
            state->qinv_k = state->qinv_k * qinv;
            state->qk1 = state->qk1 * q;
            return term * ratio;
        },
        eps, cap);
}

}  // namespace cfkit
