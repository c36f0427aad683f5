#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfkit/coeffs.hpp"
#include "cfkit/errors.hpp"
#include "cfkit/real.hpp"
#include "cfkit/scalar.hpp"

namespace cfkit {

// P_n/Q_n per the Euler-Wallis recurrence, with P_{-1}=0, Q_{-1}=1,
// P_0=a_0, Q_0=b_0. A zero Q_n is represented projectively: value is empty.
template <class T>
struct Convergent {
    long long index = 0;
    T P{};
    T Q{};
    std::optional<T> value;
};

namespace detail {

// Joint power-of-2 rescaling keeps |P|,|Q| inside [2^-512, 2^512] in the
// approximate realizations; convergent values are unchanged.
template <class T>
void rescale_pq(T& p, T& q, T& p_prev, T& q_prev, const T& up, const T& down) {
    constexpr double kHi = 1.3407807929942597e154;  // 2^512
    constexpr double kLo = 1.0 / 1.3407807929942597e154;
    auto mag = [](const T& x) { return approx_norm(x); };
    double m = mag(p) > mag(q) ? mag(p) : mag(q);
    while (m > kHi) {
        p = p * down;
        q = q * down;
        p_prev = p_prev * down;
        q_prev = q_prev * down;
        m = mag(p) > mag(q) ? mag(p) : mag(q);
    }
    while (m > 0.0 && m < kLo) {
        p = p * up;
        q = q * up;
        p_prev = p_prev * up;
        q_prev = q_prev * up;
        m = mag(p) > mag(q) ? mag(p) : mag(q);
    }
}

}  // namespace detail

template <class T>
std::vector<Convergent<T>> convergents(const CoeffSeq<T>& coeffs, long long N) {
    if (N < 0) throw ConfigError("convergents requires N >= 0");
    std::vector<Convergent<T>> out;
    out.reserve(static_cast<std::size_t>(N) + 1);
    T a0 = coeffs.a(0);
    T p_prev = zero_like(a0);
    T q_prev = one_like(a0);
    T p = a0;
    T q = coeffs.b(0);
    [[maybe_unused]] T up = one_like(a0);
    [[maybe_unused]] T down = one_like(a0);
    if constexpr (!scalar_traits<T>::is_exact) {
        T two = one_like(a0) + one_like(a0);
        up = pow_int(two, 512);
        down = one_like(a0) / up;
    }
    for (long long n = 0;; ++n) {
        Convergent<T> c;
        c.index = n;
        c.P = p;
        c.Q = q;
        if (!is_zero(q)) c.value = p / q;
        out.push_back(std::move(c));
        if (n == N) break;
        T a = coeffs.a(n + 1);
        T b = coeffs.b(n + 1);
        T p_next = b * p + a * p_prev;
        T q_next = b * q + a * q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(p_next);
        q = std::move(q_next);
        if constexpr (!scalar_traits<T>::is_exact) {
            detail::rescale_pq(p, q, p_prev, q_prev, up, down);
        }
    }
    return out;
}

// Innermost-first evaluation of the depth-N truncation; identical to the
// t_0 of the tail recurrence with seed 0.
template <class T>
T eval_backward(const CoeffSeq<T>& coeffs, long long N) {
    if (N < 0) throw ConfigError("eval_backward requires N >= 0");
    T s = zero_like(coeffs.a(N));
    for (long long m = N; m >= 0; --m) {
        T denom = coeffs.b(m) + s;
        if (is_zero(denom)) {
            throw DomainError("zero denominator at level " + std::to_string(m));
        }
        s = coeffs.a(m) / denom;
    }
    return s;
}

template <class T>
struct LentzResult {
    T value{};
    long long iterations = 0;
    bool converged = false;
};

namespace detail {

// Floor used in place of a vanishing Lentz accumulator, scaled from the
// customary double-precision 1e-30 to the working precision.
inline Real lentz_tiny_real() {
    long long bits = static_cast<long long>(real_precision_bits());
    return Real(1e-30) * pow_int(Real(2), 53 - bits);
}

inline void lentz_tiny_assign(Real& x) { x = lentz_tiny_real(); }
inline void lentz_tiny_assign(Complex<Real>& x) {
    x = Complex<Real>(lentz_tiny_real(), Real(0));
}

}  // namespace detail

// Modified Lentz iteration for a_0/(b_0 + a_1/(b_1 + ...)): accumulates
// f = b_0 + a_1/(b_1 + ...) through ratio updates and returns a_0/f.
// Non-convergence is reported in the result, carrying the last iterate.
template <class T>
LentzResult<T> eval_lentz(const CoeffSeq<T>& coeffs, double eps, long long max_iter) {
    static_assert(!scalar_traits<T>::is_exact && !scalar_traits<T>::is_formal,
                  "Lentz iteration is defined for the approximate realizations");
    if (eps <= 0) throw ConfigError("eval_lentz requires eps > 0");
    if (max_iter < 1) throw ConfigError("eval_lentz requires max_iter >= 1");
    T a0 = coeffs.a(0);
    T one = one_like(a0);
    T f = coeffs.b(0);
    if (is_zero(f)) detail::lentz_tiny_assign(f);
    T C = f;
    T D = zero_like(a0);
    LentzResult<T> out;
    for (long long m = 1; m <= max_iter; ++m) {
        T a = coeffs.a(m);
        T b = coeffs.b(m);
        D = b + a * D;
        if (is_zero(D)) detail::lentz_tiny_assign(D);
        C = b + a / C;
        if (is_zero(C)) detail::lentz_tiny_assign(C);
        D = one / D;
        T delta = C * D;
        f = f * delta;
        out.iterations = m;
        if (approx_norm(delta - one) <= eps) {
            out.converged = true;
            break;
        }
    }
    if (is_zero(f)) {
        throw DomainError("Lentz accumulator collapsed to zero");
    }
    out.value = a0 / f;
    return out;
}

// Rescales partial numerators and denominators by factors r (r_0 = 1):
// a'_m = r_m r_{m-1} a_m, b'_m = r_m b_m. Convergent values are invariant.
template <class T>
CoeffSeq<T> equivalence_transform(const CoeffSeq<T>& coeffs, std::vector<T> r) {
    if (r.empty()) throw ConfigError("equivalence transform needs at least r_0");
    if (!is_one(r[0])) throw ConfigError("equivalence transform requires r_0 = 1");
    for (std::size_t m = 0; m < r.size(); ++m) {
        if (is_zero(r[m])) {
            throw DomainError("equivalence factor r_" + std::to_string(m) + " is zero");
        }
    }
    auto factors = std::make_shared<const std::vector<T>>(std::move(r));
    auto factor_at = [factors](long long m) -> const T& {
        if (m < 0 || static_cast<std::size_t>(m) >= factors->size()) {
            throw ConfigError("equivalence factors cover indices 0.." +
                              std::to_string(factors->size() - 1) + " but index " +
                              std::to_string(m) + " was requested");
        }
        return (*factors)[static_cast<std::size_t>(m)];
    };
    CoeffSeq<T> out;
    out.a = [base = coeffs.a, factor_at](long long m) -> T {
        if (m == 0) return base(0);
        return factor_at(m) * factor_at(m - 1) * base(m);
    };
    out.b = [base = coeffs.b, factor_at](long long m) -> T {
        return factor_at(m) * base(m);
    };
    return out;
}

}  // namespace cfkit
