#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "magnus/branched_complex.hpp"
#include "magnus/errors.hpp"

namespace magnus::specfun {

namespace detail {

using lcplx = std::complex<long double>;

inline bool is_nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Stirling series for log Gamma, valid for Re w >= 10. Evaluated in long
// double: the leading terms reach ~1e3 at |Im w| ~ 200 and a double result
// would carry absolute errors of a few 1e-13.
inline lcplx log_gamma_stirling(lcplx w) {
    static constexpr std::array<long double, 10> kCoef = {
        1.0L / 12.0L,           -1.0L / 360.0L,         1.0L / 1260.0L,          -1.0L / 1680.0L,
        1.0L / 1188.0L,         -691.0L / 360360.0L,    1.0L / 156.0L,           -3617.0L / 122400.0L,
        43867.0L / 244188.0L,   -174611.0L / 125400.0L,
    };
    const long double half_log_2pi = 0.918938533204672741780329736405617639861L;
    lcplx inv = 1.0L / w;
    lcplx inv2 = inv * inv;
    lcplx series = 0.0L;
    lcplx p = inv;
    for (long double c : kCoef) {
        series += c * p;
        p *= inv2;
    }
    return (w - 0.5L) * std::log(w) - w + half_log_2pi + series;
}

inline lcplx log_gamma_ld(cplx z) {
    if (is_nonpositive_integer(z)) throw GammaPoleError("log_gamma: pole at nonpositive integer");
    lcplx w(z.real(), z.imag());
    lcplx shift = 0.0L;
    while (w.real() < 10.0L) {
        shift += std::log(w);
        w += 1.0L;
    }
    return log_gamma_stirling(w) - shift;
}

}  // namespace detail

/// Principal branch of log Gamma(z): continuous on C minus (-inf, 0], real on
/// the positive axis. Computed by upward recurrence to Re z >= 10 followed by
/// the Stirling series; the recurrence is used for Re z < 0 as well, which
/// keeps the imaginary part on the principal branch.
inline cplx log_gamma(cplx z) {
    auto r = detail::log_gamma_ld(z);
    return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

inline cplx gamma(cplx z) {
    auto r = std::exp(detail::log_gamma_ld(z));
    return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

/// 1/Gamma(z), zero at the poles of Gamma.
inline cplx rgamma(cplx z) {
    if (detail::is_nonpositive_integer(z)) return {};
    auto r = std::exp(-detail::log_gamma_ld(z));
    return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

/// Digamma psi(z) = Gamma'(z)/Gamma(z).
inline cplx digamma(cplx z) {
    if (detail::is_nonpositive_integer(z)) throw GammaPoleError("digamma: pole at nonpositive integer");
    using detail::lcplx;
    lcplx w(z.real(), z.imag());
    lcplx shift = 0.0L;
    while (w.real() < 10.0L) {
        shift += 1.0L / w;
        w += 1.0L;
    }
    // psi(w) ~ log w - 1/(2w) - sum B_{2k} / (2k w^{2k})
    static constexpr std::array<long double, 8> kCoef = {
        1.0L / 12.0L, -1.0L / 120.0L, 1.0L / 252.0L, -1.0L / 240.0L,
        1.0L / 132.0L, -691.0L / 32760.0L, 1.0L / 12.0L, -3617.0L / 8160.0L,
    };
    lcplx inv2 = 1.0L / (w * w);
    lcplx p = inv2;
    lcplx series = 0.0L;
    for (long double c : kCoef) {
        series += c * p;
        p *= inv2;
    }
    lcplx r = std::log(w) - 0.5L / w - series - shift;
    return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

}  // namespace magnus::specfun
