#pragma once

// Globally adaptive Gauss-Kronrod (G10/K21) integration over a list of
// breakpoints. Shared by the quadrature module and by the contour evaluation
// of gamma-weighted U inside specfun.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <span>
#include <vector>

namespace magnus::detail {

inline constexpr std::array<double, 11> kKronrodNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
};
inline constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208967377036, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
};
// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5, 7, 9.
inline constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(std::complex<double> v) { return std::abs(v); }
template <std::size_t N>
double magnitude(const std::array<std::complex<double>, N>& v) {
    double m = 0.0;
    for (const auto& c : v) m = std::max(m, std::abs(c));
    return m;
}

template <class V>
V zero_like() {
    return V{};
}

template <class V>
void axpy(V& acc, double w, const V& x) {
    acc += w * x;
}
template <std::size_t N>
void axpy(std::array<std::complex<double>, N>& acc, double w, const std::array<std::complex<double>, N>& x) {
    for (std::size_t i = 0; i < N; ++i) acc[i] += w * x[i];
}

template <class V>
V difference(const V& a, const V& b) {
    return a - b;
}
template <std::size_t N>
std::array<std::complex<double>, N> difference(const std::array<std::complex<double>, N>& a,
                                               const std::array<std::complex<double>, N>& b) {
    std::array<std::complex<double>, N> d;
    for (std::size_t i = 0; i < N; ++i) d[i] = a[i] - b[i];
    return d;
}

template <class V>
struct Segment {
    double lo = 0.0;
    double hi = 0.0;
    V value{};
    double error = 0.0;
    double abs_value = 0.0;  // K21 applied to |f|
};

template <class V, class F>
Segment<V> gauss_kronrod_21(F& f, double lo, double hi) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    V kron = zero_like<V>();
    V gauss = zero_like<V>();
    double abs_sum = 0.0;
    for (std::size_t i = 0; i < kKronrodNodes.size(); ++i) {
        const double x = kKronrodNodes[i] * h;
        if (i == kKronrodNodes.size() - 1) {
            V fc = f(c);
            axpy(kron, kKronrodWeights[i], fc);
            abs_sum += kKronrodWeights[i] * magnitude(fc);
            continue;
        }
        V f1 = f(c - x);
        V f2 = f(c + x);
        axpy(kron, kKronrodWeights[i], f1);
        axpy(kron, kKronrodWeights[i], f2);
        abs_sum += kKronrodWeights[i] * (magnitude(f1) + magnitude(f2));
        if (i % 2 == 1) {
            axpy(gauss, kGaussWeights[i / 2], f1);
            axpy(gauss, kGaussWeights[i / 2], f2);
        }
    }
    Segment<V> s;
    s.lo = lo;
    s.hi = hi;
    s.value = zero_like<V>();
    axpy(s.value, h, kron);
    V g = zero_like<V>();
    axpy(g, h, gauss);
    s.error = magnitude(difference(s.value, g));
    s.abs_value = std::abs(h) * abs_sum;
    // Roundoff floor: the rule cannot resolve below a few ulps of sum |f|.
    s.error = std::max(s.error, 50.0 * 2.220446049250313e-16 * s.abs_value);
    return s;
}

template <class V>
struct AdaptiveResult {
    V value{};
    double error = 0.0;
    double abs_value = 0.0;
    std::size_t intervals = 0;
    std::size_t evaluations = 0;
    bool converged = false;
};

/// Adaptive integration over consecutive intervals [b0,b1], [b1,b2], ...
/// The segment with the largest error estimate is bisected until the summed
/// estimates fall below max(abs_tol, rel_tol * integral of |f|) or the
/// interval budget is exhausted. The final sum is formed in left-to-right
/// order so the result does not depend on the refinement history.
template <class V, class F>
AdaptiveResult<V> integrate_adaptive(F&& f, std::span<const double> breakpoints, double abs_tol, double rel_tol,
                                     std::size_t max_intervals = 2000) {
    AdaptiveResult<V> out;
    out.value = zero_like<V>();
    if (breakpoints.size() < 2) return out;

    auto worse = [](const Segment<V>& a, const Segment<V>& b) { return a.error < b.error; };
    std::priority_queue<Segment<V>, std::vector<Segment<V>>, decltype(worse)> queue(worse);

    double total_err = 0.0;
    double total_abs = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i + 1] > breakpoints[i])) continue;
        auto s = gauss_kronrod_21<V>(f, breakpoints[i], breakpoints[i + 1]);
        out.evaluations += 21;
        total_err += s.error;
        total_abs += s.abs_value;
        queue.push(std::move(s));
    }

    auto target = [&] { return std::max(abs_tol, rel_tol * total_abs); };
    while (total_err > target() && queue.size() < max_intervals) {
        Segment<V> worst = queue.top();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi)) break;
        queue.pop();
        auto left = gauss_kronrod_21<V>(f, worst.lo, mid);
        auto right = gauss_kronrod_21<V>(f, mid, worst.hi);
        out.evaluations += 42;
        total_err += left.error + right.error - worst.error;
        total_abs += left.abs_value + right.abs_value - worst.abs_value;
        queue.push(std::move(left));
        queue.push(std::move(right));
    }

    std::vector<Segment<V>> segments;
    segments.reserve(queue.size());
    while (!queue.empty()) {
        segments.push_back(queue.top());
        queue.pop();
    }
    std::sort(segments.begin(), segments.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
    double err = 0.0;
    double abs_value = 0.0;
    for (const auto& s : segments) {
        axpy(out.value, 1.0, s.value);
        err += s.error;
        abs_value += s.abs_value;
    }
    out.error = err;
    out.abs_value = abs_value;
    out.intervals = segments.size();
    out.converged = err <= std::max(abs_tol, rel_tol * abs_value);
    return out;
}

}  // namespace magnus::detail
