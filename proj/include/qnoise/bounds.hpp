// bounds.hpp
// Quantum Hamming and Gilbert-Varshamov bounds in exact integer arithmetic,
// their asymptotic rate forms, and the classical triple-repetition baseline.

#pragma once

#include <cmath>
#include <cstdint>

#include "qnoise/errors.hpp"

namespace qnoise {

namespace detail {
using uint128 = unsigned __int128;

inline uint128 binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    uint128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= static_cast<uint128>(n - k + i);
        r /= static_cast<uint128>(i);
    }
    return r;
}

// 2^l * sum_{i<=t} 3^i C(n,i)
inline uint128 orthogonal_state_count(int l, int t, int n) {
    uint128 sum = 0;
    uint128 pow3 = 1;
    for (int i = 0; i <= t; ++i) {
        sum += pow3 * binomial(n, i);
        pow3 *= 3;
    }
    return sum << l;
}
} // namespace detail

inline void check_bound_query(int l, int t, int n = -1) {
    if (l < 1 || t < 0) throw config_error("bound query: l >= 1 and t >= 0 required");
    if (n >= 0 && n < l) throw config_error("bound query: n >= l required");
    if (n > 120) throw config_error("bound query: n too large for exact arithmetic");
}

// 2^l sum_{i<=t} 3^i C(n,i) <= 2^n
inline bool hamming_feasible(int l, int t, int n) {
    check_bound_query(l, t, n);
    return detail::orthogonal_state_count(l, t, n) <= (detail::uint128{1} << n);
}

inline int hamming_min_n(int l, int t) {
    check_bound_query(l, t);
    for (int n = l; n <= 120; ++n)
        if (hamming_feasible(l, t, n)) return n;
    throw config_error("hamming_min_n: no feasible n <= 120");
}

// 2^l sum_{i<=2t} 3^i C(n,i) >= 2^n; the polynomial side eventually loses to
// 2^n, so the answer is the last n before the final sign change.
inline bool gv_feasible(int l, int t, int n) {
    check_bound_query(l, t, n);
    return detail::orthogonal_state_count(l, 2 * t, n) >= (detail::uint128{1} << n);
}

inline int gv_max_n(int l, int t) {
    check_bound_query(l, t);
    int last = -1;
    for (int n = l; n <= 64; ++n)
        if (gv_feasible(l, t, n)) last = n;
    if (last < 0) throw config_error("gv_max_n: no feasible n");
    return last;
}

// Binary entropy with the continuity convention H(0) = H(1) = 0
inline double binary_entropy(double x) {
    if (x < 0.0 || x > 1.0) throw config_error("binary_entropy: argument outside [0,1]");
    double h = 0.0;
    if (x > 0.0) h -= x * std::log2(x);
    if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
    return h;
}

// Asymptotic Hamming rate cap: 1 - x log2(3) - H(x), x = t/n
inline double hamming_rate(double x) {
    return 1.0 - x * std::log2(3.0) - binary_entropy(x);
}

// Asymptotic Gilbert-Varshamov rate: 1 - 2x log2(3) - H(2x), x = t/n
inline double gv_rate(double x) {
    if (2.0 * x < 0.0 || 2.0 * x > 1.0)
        throw config_error("gv_rate: 2 t/n outside [0,1]");
    return 1.0 - 2.0 * x * std::log2(3.0) - binary_entropy(2.0 * x);
}

// Bisection root of hamming_rate on (0, 1/2): the maximal tolerable t/n
inline double hamming_rate_root(double tol = 1e-8) {
    double lo = 1e-12, hi = 0.5 - 1e-12;
    if (hamming_rate(lo) <= 0.0 || hamming_rate(hi) >= 0.0)
        throw diagnostic_error("hamming_rate_root: bracket failed");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (hamming_rate(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Three-bit majority failure: 3 p^2 (1-p) + p^3
inline double repetition_error(double p) {
    if (p < 0.0 || p > 1.0) throw config_error("repetition_error: p outside [0,1]");
    return 3.0 * p * p - 2.0 * p * p * p;
}

} // namespace qnoise
