#pragma once

#include <string>
#include <vector>

#include "cfkit/coeffs.hpp"
#include "cfkit/errors.hpp"
#include "cfkit/scalar.hpp"

namespace cfkit {

// g_1..g_n with g_i = a_i/(b_{i-1} b_i). unit carries the realization's
// multiplicative identity so empty sums and products stay well-typed.
template <class T>
struct GWeights {
    std::vector<T> g;
    T unit{};

    long long max_index() const { return static_cast<long long>(g.size()); }
    const T& at(long long i) const {
        if (i < 1 || i > max_index()) {
            throw ConfigError("g-weight index " + std::to_string(i) + " outside 1.." +
                              std::to_string(max_index()));
        }
        return g[static_cast<std::size_t>(i) - 1];
    }
};

template <class T>
GWeights<T> g_weights(const CoeffSeq<T>& coeffs, long long n) {
    if (n < 1) throw ConfigError("g_weights requires n >= 1");
    std::vector<T> b;
    b.reserve(static_cast<std::size_t>(n) + 1);
    for (long long m = 0; m <= n; ++m) b.push_back(coeffs.b(m));
    GWeights<T> out;
    out.unit = one_like(b[0]);
    out.g.reserve(static_cast<std::size_t>(n));
    for (long long i = 1; i <= n; ++i) {
        T denom = b[static_cast<std::size_t>(i) - 1] * b[static_cast<std::size_t>(i)];
        if (is_zero(denom)) {
            throw DomainError("b_" + std::to_string(i - 1) + "*b_" + std::to_string(i) +
                              " = 0 computing g_" + std::to_string(i));
        }
        out.g.push_back(coeffs.a(i) / denom);
    }
    return out;
}

namespace detail {

inline void check_phi_range(long long q, long long n, long long max_index) {
    if (q < 1) throw ConfigError("phi start index must be >= 1");
    if (n - 2 >= q && n - 2 > max_index) {
        throw ConfigError("index set {" + std::to_string(q) + ".." + std::to_string(n - 2) +
                          "} exceeds available g-weights 1.." + std::to_string(max_index));
    }
}

}  // namespace detail

// Brute-force oracle: sum over all subsets of {q..n-2} whose consecutive
// chosen indices differ by at least 2, of the product of g over the subset.
template <class T>
T phi_enumerate(const GWeights<T>& g, long long q, long long n) {
    detail::check_phi_range(q, n, g.max_index());
    long long size = n - 1 - q;
    if (size < 0) size = 0;
    if (size > 24) {
        throw ConfigError("index set size " + std::to_string(size) +
                          " exceeds the enumeration guard of 24");
    }
    T sum = zero_like(g.unit);
    const unsigned long long masks = 1ULL << size;
    for (unsigned long long mask = 0; mask < masks; ++mask) {
        if (mask & (mask >> 1)) continue;  // adjacent indices chosen
        T prod = g.unit;
        for (long long p = 0; p < size; ++p) {
            if (mask & (1ULL << p)) prod = prod * g.at(q + p);
        }
        sum = sum + prod;
    }
    return sum;
}

// Path-graph DP for the same sum: F(m) = F(m-1) + g_m F(m-2),
// F(q-1) = F(q-2) = 1; returns F(n-2).
template <class T>
T phi_dp(const GWeights<T>& g, long long q, long long n) {
    detail::check_phi_range(q, n, g.max_index());
    T prev2 = g.unit;
    T prev1 = g.unit;
    for (long long m = q; m <= n - 2; ++m) {
        T cur = prev1 + g.at(m) * prev2;
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

// Layered version: by_depth[d] sums exactly the size-d gap-constrained
// subsets, so sum_d by_depth[d] equals phi_dp once dmax covers ceil(size/2).
template <class T>
struct PhiTable {
    long long q = 1;
    long long n = 2;
    T total{};
    std::vector<T> by_depth;
};

template <class T>
PhiTable<T> phi_by_depth(const GWeights<T>& g, long long q, long long n, long long dmax) {
    detail::check_phi_range(q, n, g.max_index());
    if (dmax < 0) throw ConfigError("phi depth must be >= 0");
    PhiTable<T> out;
    out.q = q;
    out.n = n;
    std::size_t depths = static_cast<std::size_t>(dmax) + 1;
    std::vector<T> prev2(depths, zero_like(g.unit));
    std::vector<T> prev1(depths, zero_like(g.unit));
    prev2[0] = g.unit;
    prev1[0] = g.unit;
    for (long long m = q; m <= n - 2; ++m) {
        std::vector<T> cur(depths, zero_like(g.unit));
        cur[0] = prev1[0];
        for (std::size_t d = 1; d < depths; ++d) {
            cur[d] = prev1[d] + g.at(m) * prev2[d - 1];
        }
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    out.by_depth = std::move(prev1);
    out.total = phi_dp(g, q, n);
    return out;
}

// Closed form of the three-term recurrence: the product of b_0..b_{n-2}
// times [x_1 Phi_{1,n} + x_0 (a_0/b_0) Phi_{2,n}] equals x_n.
template <class T>
T reconstruct(const CoeffSeq<T>& coeffs, const T& x0, const T& x1, long long n) {
    if (n < 2) throw ConfigError("reconstruct requires n >= 2");
    T b0 = coeffs.b(0);
    if (is_zero(b0)) throw DomainError("b_0 = 0 in closed-form reconstruction");
    T prod = b0;
    for (long long i = 1; i <= n - 2; ++i) {
        T bi = coeffs.b(i);
        if (is_zero(bi)) {
            throw DomainError("b_" + std::to_string(i) + " = 0 in closed-form product");
        }
        prod = prod * bi;
    }
    GWeights<T> g;
    g.unit = one_like(b0);
    if (n >= 3) g = g_weights(coeffs, n - 2);
    T phi1 = phi_dp(g, 1, n);
    T phi2 = phi_dp(g, 2, n);
    T head = coeffs.a(0) / b0;
    return prod * (x1 * phi1 + x0 * head * phi2);
}

// Finite truncation of the fraction-as-series-ratio identity:
// (a_0/b_0) Phi_{2,n} / Phi_{1,n}.
template <class T>
T series_ratio_approx(const CoeffSeq<T>& coeffs, long long n) {
    if (n < 2) throw ConfigError("series_ratio_approx requires n >= 2");
    T b0 = coeffs.b(0);
    if (is_zero(b0)) throw DomainError("b_0 = 0 in series ratio");
    GWeights<T> g;
    g.unit = one_like(b0);
    if (n >= 3) g = g_weights(coeffs, n - 2);
    T phi1 = phi_dp(g, 1, n);
    if (is_zero(phi1)) {
        throw DomainError("degenerate denominator: Phi_{1," + std::to_string(n) + "} = 0");
    }
    T phi2 = phi_dp(g, 2, n);
    return coeffs.a(0) / b0 * phi2 / phi1;
}

}  // namespace cfkit
