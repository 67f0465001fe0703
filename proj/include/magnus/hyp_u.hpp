#pragma once

// Confluent hypergeometric function of the second kind U(a, b, z) for complex
// a, b and z on the Riemann surface of log (|arg z| <= 2*pi).
//
// Routes, tried in order:
//   1. terminating polynomial when a is a nonpositive integer;
//   2. Kummer-series connection formula (logarithmic series for integer b),
//      accepted when its cancellation estimate allows ~1e-13 accuracy;
//   3. large-|z| asymptotic series at a radius R, carried inward along a ray
//      and then around an arc by Taylor stepping of Kummer's equation
//      (small |a|, |b|);
//   4. Gamma(a) U(a, b, z) as a Laplace integral along the ray on which the
//      exponent is real at an anchor argument -arg(a), followed by the same
//      arc continuation (large |a|, Re a > 0);
//   5. backward recurrence in a otherwise.
//
// The gamma-weighted product Gamma(a) U(a, b, z) is available separately in
// log-scaled form; it stays representable when Gamma(a) and U do not.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "magnus/branched_complex.hpp"
#include "magnus/detail/gauss_kronrod.hpp"
#include "magnus/errors.hpp"
#include "magnus/gamma.hpp"

namespace magnus::specfun {

struct UParams {
    cplx a;
    cplx b;
    BranchedComplex z;
};

namespace detail {

inline constexpr double kEps = 2.220446049250313e-16;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

struct SeriesSum {
    cplx value;
    double abs_sum;
};

// M(a, b, z) = sum_k (a)_k z^k / ((b)_k k!)
inline SeriesSum kummer_m(cplx a, cplx b, cplx z) {
    cplx term = 1.0;
    cplx sum = 1.0;
    double abs_sum = 1.0;
    for (int k = 0; k < 20000; ++k) {
        const cplx ratio = (a + double(k)) * z / ((b + double(k)) * double(k + 1));
        term *= ratio;
        sum += term;
        abs_sum += std::abs(term);
        if (term == cplx{}) return {sum, abs_sum};
        if (std::abs(term) < 1e-18 * abs_sum && std::abs(ratio) < 0.5) return {sum, abs_sum};
    }
    throw NonConvergenceError("kummer_m: series did not converge");
}

struct Estimate {
    cplx value;
    double error;
};

// U(-m, b, z), a polynomial of degree m (single-valued in z).
inline cplx u_polynomial(int m, cplx b, cplx z) {
    cplx sum = 0.0;
    double binom = 1.0;
    for (int s = 0; s <= m; ++s) {
        cplx poch = 1.0;
        for (int j = 0; j < m - s; ++j) poch *= b + double(s + j);
        sum += binom * poch * std::pow(-z, s);
        binom = binom * double(m - s) / double(s + 1);
    }
    return (m % 2 == 0) ? sum : -sum;
}

// U for b = n + 1, n >= 0 (logarithmic case).
inline Estimate u_series_log(cplx a, int n, const BranchedComplex& z) {
    const cplx zp = z.to_principal();
    const cplx logz = z.log();
    double nfact = 1.0;
    for (int j = 2; j <= n; ++j) nfact *= j;

    cplx first = 0.0;
    double first_abs = 0.0;
    const cplx ra_n = rgamma(a - double(n));
    if (ra_n != cplx{}) {
        const cplx pref = ((n + 1) % 2 == 0 ? 1.0 : -1.0) / nfact * ra_n;
        cplx psi_a = digamma(a);
        double psi_1 = -kEulerGamma;          // psi(1 + k)
        double psi_n1 = -kEulerGamma;         // psi(n + 1 + k)
        for (int j = 1; j <= n; ++j) psi_n1 += 1.0 / j;
        cplx term = 1.0;
        double sum_abs_terms = 0.0;
        for (int k = 0; k < 20000; ++k) {
            const cplx bracket = logz + psi_a - psi_1 - psi_n1;
            const cplx piece = term * bracket;
            first += piece;
            first_abs += std::abs(term) * (std::abs(logz) + std::abs(psi_a) + std::abs(psi_1) + std::abs(psi_n1));
            sum_abs_terms += std::abs(term);
            const cplx ratio = (a + double(k)) * zp / (double(n + 1 + k) * double(k + 1));
            psi_a += 1.0 / (a + double(k));
            psi_1 += 1.0 / double(k + 1);
            psi_n1 += 1.0 / double(n + 1 + k);
            term *= ratio;
            if (term == cplx{}) break;
            if (std::abs(term) * (std::abs(bracket) + 1.0) < 1e-18 * first_abs && std::abs(ratio) < 0.5) break;
            if (k == 19999) throw NonConvergenceError("u_series_log: series did not converge");
        }
        first *= pref;
        first_abs *= std::abs(pref);
    }

    cplx second = 0.0;
    double second_abs = 0.0;
    if (n > 0) {
        const cplx ra = rgamma(a);
        for (int k = 1; k <= n; ++k) {
            double kfact = 1.0;
            for (int j = 2; j <= k - 1; ++j) kfact *= j;
            double nk_fact = 1.0;
            for (int j = 2; j <= n - k; ++j) nk_fact *= j;
            cplx poch = 1.0;
            for (int j = 0; j < n - k; ++j) poch *= 1.0 - a + double(k + j);
            const cplx piece = kfact * poch / nk_fact * std::pow(zp, -k);
            second += piece;
            second_abs += std::abs(piece);
        }
        second *= ra;
        second_abs *= std::abs(ra);
    }
    const cplx value = first + second;
    const double err = 16.0 * kEps * (first_abs + second_abs);
    return {value, err};
}

// Connection formula through two Kummer series, non-integer b.
inline Estimate u_series_nonint(cplx a, cplx b, const BranchedComplex& z) {
    const cplx zp = z.to_principal();
    const cplx c1 = std::exp(log_gamma(1.0 - b)) * rgamma(a - b + 1.0);
    const cplx zpow = z.pow(1.0 - b);
    const cplx c2 = std::exp(log_gamma(b - 1.0)) * rgamma(a) * zpow;
    cplx t1 = 0.0, t2 = 0.0;
    double e1 = 0.0, e2 = 0.0;
    if (c1 != cplx{}) {
        auto m1 = kummer_m(a, b, zp);
        t1 = c1 * m1.value;
        e1 = std::abs(c1) * m1.abs_sum;
    }
    if (c2 != cplx{}) {
        auto m2 = kummer_m(a - b + 1.0, 2.0 - b, zp);
        t2 = c2 * m2.value;
        e2 = std::abs(c2) * m2.abs_sum;
    }
    const cplx value = t1 + t2;
    const double gamma_rel = 8.0 * kEps * (1.0 + std::abs(1.0 - b) * std::abs(z.log()));
    const double err = 16.0 * kEps * (e1 + e2) + gamma_rel * (std::abs(t1) + std::abs(t2));
    return {value, err};
}

inline bool is_integer(cplx b) { return b.imag() == 0.0 && b.real() == std::round(b.real()); }

inline Estimate u_series(cplx a, cplx b, const BranchedComplex& z) {
    if (is_integer(b)) {
        const int bi = static_cast<int>(std::lround(b.real()));
        if (bi >= 1) return u_series_log(a, bi - 1, z);
        // U(a, b, z) = z^{1-b} U(a-b+1, 2-b, z), and 2 - b >= 2.
        auto inner = u_series_log(a - b + 1.0, 1 - bi, z);
        const cplx f = z.pow(1.0 - b);
        return {f * inner.value, std::abs(f) * inner.error};
    }
    return u_series_nonint(a, b, z);
}

// Value and z-derivative of a solution of Kummer's equation, times exp(log_scale).
struct KummerState {
    cplx w;
    cplx dw;
    cplx log_scale;
};

inline double kummer_step_length(cplx a, cplx b, cplx z0) {
    const double r = std::abs(z0);
    const double kappa = std::abs(b / z0 - 1.0) + std::sqrt(std::abs(a) / r);
    return std::min(0.4 * r, 2.0 / kappa);
}

// One Taylor step of z w'' + (b - z) w' - a w = 0 from z0 to z0 + h.
inline void kummer_taylor_step(cplx a, cplx b, cplx z0, cplx h, KummerState& s) {
    cplx d_prev = s.w;        // c_k h^k
    cplx d_cur = s.dw * h;    // c_{k+1} h^{k+1}
    cplx w1 = d_prev + d_cur;
    cplx dw1 = d_cur;         // sum k c_k h^k, divided by h at the end
    const double scale = std::max(std::abs(s.w), std::abs(s.dw * h));
    double dmax = scale;
    const cplx h2 = h * h;
    for (int k = 0; k < 2000; ++k) {
        const double kk = k;
        const cplx d_next = (-(kk + 1.0) * (kk + b - z0) * h * d_cur + (kk + a) * h2 * d_prev) /
                            (z0 * (kk + 1.0) * (kk + 2.0));
        w1 += d_next;
        dw1 += (kk + 2.0) * d_next;
        dmax = std::max(dmax, std::abs(d_next));
        if (k >= 4 && std::abs(d_next) + std::abs(d_cur) <= 1e-18 * dmax) {
            s.w = w1;
            s.dw = dw1 / h;
            return;
        }
        d_prev = d_cur;
        d_cur = d_next;
    }
    throw NonConvergenceError("kummer_taylor_step: Taylor series did not converge");
}

inline void renormalize(KummerState& s, double r) {
    const double m = std::abs(s.w) + std::abs(s.dw) * r;
    if (m == 0.0 || !std::isfinite(m)) return;
    s.w /= m;
    s.dw /= m;
    s.log_scale += std::log(m);
}

// Carry a solution along the ray arg z = theta from modulus r_from to r_to.
inline void continue_radial(cplx a, cplx b, double theta, double r_from, double r_to, KummerState& s) {
    double r = r_from;
    const cplx dir = std::polar(1.0, theta);
    const double sign = r_to < r_from ? -1.0 : 1.0;
    int guard = 0;
    while (sign * (r_to - r) > 0.0) {
        const double len = kummer_step_length(a, b, r * dir);
        const double r_next = sign < 0 ? std::max(r_to, r - len) : std::min(r_to, r + len);
        kummer_taylor_step(a, b, r * dir, (r_next - r) * dir, s);
        r = r_next;
        renormalize(s, r);
        if (++guard > 200000) throw NonConvergenceError("continue_radial: too many steps");
    }
}

// Carry a solution around the circle |z| = r from argument theta_from to theta_to.
inline void continue_arc(cplx a, cplx b, double r, double theta_from, double theta_to, KummerState& s) {
    double th = theta_from;
    const double sign = theta_to < theta_from ? -1.0 : 1.0;
    int guard = 0;
    while (sign * (theta_to - th) > 0.0) {
        const cplx z0 = std::polar(r, th);
        const double len = kummer_step_length(a, b, z0);
        const double dth = std::min(0.4, len / r);
        const double th_next = sign < 0 ? std::max(theta_to, th - dth) : std::min(theta_to, th + dth);
        kummer_taylor_step(a, b, z0, std::polar(r, th_next) - z0, s);
        th = th_next;
        renormalize(s, r);
        if (++guard > 200000) throw NonConvergenceError("continue_arc: too many steps");
    }
}

// U and U' from the asymptotic series z^{-a} sum (a)_k (a-b+1)_k / k! (-z)^{-k}.
inline bool u_asymptotic(cplx a, cplx b, const BranchedComplex& z, KummerState& out) {
    const cplx w = -1.0 / z.to_principal();
    const cplx c = a - b + 1.0;
    cplx term = 1.0, sum = 1.0;
    cplx dterm = 1.0, dsum = 1.0;  // series for U(a+1, b+1, z)
    double last = 1.0;
    bool ok = false;
    for (int k = 0; k < 500; ++k) {
        const cplx r1 = (a + double(k)) * (c + double(k)) / double(k + 1) * w;
        const cplx r2 = (a + 1.0 + double(k)) * (c + double(k)) / double(k + 1) * w;
        if (std::abs(r1) >= 1.0 && k > 2) break;
        term *= r1;
        dterm *= r2;
        sum += term;
        dsum += dterm;
        last = std::abs(term) + std::abs(dterm);
        if (last < 1e-17 * (std::abs(sum) + std::abs(dsum))) {
            ok = true;
            break;
        }
    }
    if (!ok && last > 1e-16 * (std::abs(sum) + std::abs(dsum))) return false;
    // Keep the state in log-scaled form: U = sum * z^{-a}.
    const cplx log_zpow = -a * z.log();
    out.w = sum;
    out.dw = -a * dsum / z.to_principal();
    out.log_scale = log_zpow;
    return true;
}

// Carry s from (r, theta_from) to (r, theta_to) around an arc of radius rho <= r:
// in along theta_from, around, and out along theta_to. On the outward leg the
// second solution decays relative to U whenever the target is past the
// anti-Stokes line, so the detour keeps errors from the arc bounded.
inline void continue_via_inner_arc(cplx a, cplx b, double r, double rho, double theta_from, double theta_to,
                                   KummerState& s) {
    if (rho >= r) {
        continue_arc(a, b, r, theta_from, theta_to, s);
        return;
    }
    continue_radial(a, b, theta_from, r, rho, s);
    continue_arc(a, b, rho, theta_from, theta_to, s);
    continue_radial(a, b, theta_to, rho, r, s);
}

// U(a, b, z) by asymptotic series at a large radius, carried in to |z| along
// arg = clamp(arg z, -pi/2, pi/2), then around to arg z. Past the imaginary
// axis the arc is taken at a radius where |Re z| stays within about one unit
// of Re z at the target. Returns U in log-scaled form.
inline LogScaled u_by_asymptotic_anchor(cplx a, cplx b, const BranchedComplex& z) {
    const double theta = z.argument();
    const double anchor = std::clamp(theta, -0.5 * kPi, 0.5 * kPi);
    const double r = z.modulus();
    double R = std::max(r, 30.0 + 3.0 * (std::abs(a) + std::abs(b)));
    KummerState s{};
    int tries = 0;
    while (!u_asymptotic(a, b, BranchedComplex(R, anchor), s)) {
        R *= 1.5;
        if (++tries > 20) throw NonConvergenceError("hyp_u: asymptotic anchor failed");
    }
    continue_radial(a, b, anchor, R, r, s);
    const double x_end = r * std::cos(theta);
    const double rho = std::abs(theta) <= kPi ? r : std::min(r, std::max(0.5, 1.0 - x_end));
    continue_via_inner_arc(a, b, r, rho, anchor, theta, s);
    return {s.w, s.log_scale};
}

// Gamma(a) U(a, b, z0) and its z-derivative at z0 = r e^{i theta0}, from the
// Laplace integral over the ray arg t = -theta0 (so that z0 t > 0). Near
// t = 0 the integrand t^{a-1} g(t) is integrated termwise from the Taylor
// series of g(t) = (1+t)^{b-a-1} e^{-z0 t}, which also continues the integral
// analytically to Re a <= 0.
inline KummerState gamma_u_ray(cplx a, cplx b, double r, double theta0) {
    const double psi = -theta0;
    const cplx dir = std::polar(1.0, psi);
    const cplx z0 = std::polar(r, theta0);
    const cplx beta = b - a - 1.0;

    auto exponent = [&](double rho) {
        const cplx t = rho * dir;
        return a * cplx(std::log(rho), psi) + beta * std::log(1.0 + t) - r * rho;
    };

    // Saddle of (a-1) log t + beta log(1+t) - z0 t.
    double rho_saddle = 0.0;
    double width_v = 0.5;
    {
        const cplx p = b - 2.0 - z0;
        const cplx disc = std::sqrt(p * p + 4.0 * z0 * (a - 1.0));
        for (cplx root : {(p + disc) / (2.0 * z0), (p - disc) / (2.0 * z0)}) {
            const cplx along = root / dir;
            if (along.real() > 0.0 && std::abs(along.imag()) < 0.5 * along.real() + 1.0) {
                if (std::abs(root) > rho_saddle) {
                    rho_saddle = std::abs(root);
                    const cplx second = -(a - 1.0) / (root * root) - beta / ((1.0 + root) * (1.0 + root));
                    const double curv = std::abs(root * root * second);
                    width_v = curv > 0.0 ? std::clamp(1.0 / std::sqrt(curv), 1e-3, 1.0) : 1.0;
                }
            }
        }
    }

    const double rho1 = 0.25 / std::max({1.0, std::abs(beta), r, std::abs(a)});
    double rho_hi = std::max({4.0, 3.0 * rho_saddle, (std::abs(b) + std::abs(a) + 60.0) / r});

    // Peak of the real exponent on a coarse log grid.
    double peak = -1e300;
    auto scan = [&](double lo, double hi) {
        const int n = 64;
        for (int i = 0; i <= n; ++i) {
            const double rho = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / n);
            peak = std::max(peak, exponent(rho).real());
        }
    };
    scan(rho1, rho_hi);
    if (rho_saddle > rho1) peak = std::max(peak, exponent(rho_saddle).real());
    for (int guard = 0; exponent(rho_hi).real() > peak - 50.0; ++guard) {
        rho_hi *= 2.0;
        scan(rho_hi / 2.0, rho_hi);
        if (guard > 60) throw NonConvergenceError("gamma_u_ray: integrand does not decay");
    }

    // Termwise integral over [0, rho1 e^{i psi}].
    cplx series = 0.0, dseries = 0.0;
    {
        const cplx log_t1 = cplx(std::log(rho1), psi);
        const cplx t1 = rho1 * dir;
        cplx g_prev = 0.0, g = 1.0;
        cplx tk = 1.0;  // t1^k
        double gmax = 0.0;
        for (int k = 0; k < 400; ++k) {
            series += g * tk / (a + double(k));
            dseries += g * tk * t1 / (a + double(k + 1));
            const double mag = std::abs(g * tk);
            gmax = std::max(gmax, mag);
            if (k > 4 && mag < 1e-18 * gmax) break;
            const cplx g_next = ((beta - z0 - double(k)) * g - z0 * g_prev) / double(k + 1);
            g_prev = g;
            g = g_next;
            tk *= t1;
        }
        const cplx lead = a * log_t1 - peak;
        const cplx f = lead.real() < -700.0 ? cplx{} : std::exp(lead);
        series *= f;
        dseries *= f;
    }

    auto integrand = [&](double v) {
        const double rho = std::exp(v);
        const cplx e = exponent(rho) - peak;
        const cplx val = e.real() < -745.0 ? cplx{} : std::exp(e);
        return std::array<cplx, 2>{val, val * (rho * dir)};
    };

    std::vector<double> bp;
    const double v_lo = std::log(rho1), v_hi = std::log(rho_hi);
    for (int i = 0; i <= 8; ++i) bp.push_back(v_lo + (v_hi - v_lo) * i / 8.0);
    if (rho_saddle > rho1 && rho_saddle < rho_hi) {
        const double vs = std::log(rho_saddle);
        for (double k : {-8.0, -4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0, 8.0}) {
            const double v = vs + k * width_v;
            if (v > v_lo && v < v_hi) bp.push_back(v);
        }
    }
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());

    auto res = magnus::detail::integrate_adaptive<std::array<cplx, 2>>(integrand, bp, 0.0, 3e-14, 4000);
    if (!(res.error <= 1e-12 * std::max(res.abs_value, 1e-300)))
        throw NonConvergenceError("gamma_u_ray: quadrature did not converge");

    KummerState s;
    s.w = series + res.value[0];
    s.dw = -(dseries + res.value[1]);
    s.log_scale = peak;
    return s;
}

inline bool series_worth_trying(cplx a, cplx b, double r) {
    return std::abs(a) <= 40.0 && std::abs(b) <= 40.0 && r <= 40.0 &&
           2.0 * std::sqrt(std::abs(a) * r) + r <= 45.0;
}

LogScaled gamma_u_impl(cplx a, cplx b, const BranchedComplex& z);

inline LogScaled gamma_u_core(cplx a, cplx b, const BranchedComplex& z) {
    const double r = z.modulus();
    if (series_worth_trying(a, b, r)) {
        auto est = u_series(a, b, z);
        if (std::isfinite(est.value.real()) && std::isfinite(est.value.imag()) &&
            est.error <= 1e-13 * std::abs(est.value))
            return {est.value, log_gamma(a)};
    }
    if (std::abs(a) <= 12.0 && std::abs(b) <= 12.0) {
        auto u = u_by_asymptotic_anchor(a, b, z);
        return {u.mantissa, u.log_scale + log_gamma(a)};
    }
    // For Re a <= 0 the termwise piece near t = 0 grows like rho1^{Re a} and
    // cancels against the rest of the ray; recur from Re a >= 2 instead.
    if (a.real() > 0.0) {
        const double anchor = -std::arg(a);
        KummerState s = gamma_u_ray(a, b, r, anchor);
        // The companion solutions behave like exp(+-2 sqrt(a z)); beyond
        // |arg(a z)| = 2 pi the arc at radius r would amplify the growing one.
        const double phi = std::arg(a) + z.argument();
        const double rho = std::abs(phi) <= 2.0 * kPi ? r : std::min(r, 0.25 / (1.0 + std::abs(a)));
        continue_via_inner_arc(a, b, r, rho, anchor, z.argument(), s);
        return {s.w, s.log_scale};
    }
    // Backward recurrence from a + n, n chosen so that Re(a + n) >= 2:
    // (a-1) G(a-1) + (b - 2a - z) G(a) + (a - b + 1) G(a+1) = 0, G = Gamma(a) U.
    const int n = static_cast<int>(std::ceil(-a.real())) + 2;
    const cplx zp = z.to_principal();
    LogScaled hi = gamma_u_impl(a + double(n + 1), b, z);
    LogScaled mid = gamma_u_impl(a + double(n), b, z);
    // Bring both to a common scale.
    const cplx common = mid.log_scale;
    cplx g_hi = hi.mantissa * std::exp(hi.log_scale - common);
    cplx g_mid = mid.mantissa;
    for (int k = n; k > 0; --k) {
        const cplx ak = a + double(k);
        const cplx g_lo = -((b - 2.0 * ak - zp) * g_mid + (ak - b + 1.0) * g_hi) / (ak - 1.0);
        g_hi = g_mid;
        g_mid = g_lo;
    }
    return {g_mid, common};
}

inline LogScaled gamma_u_impl(cplx a, cplx b, const BranchedComplex& z) {
    if (is_nonpositive_integer(a)) throw GammaPoleError("gamma_hyp_u: Gamma(a) has a pole");
    if (z.modulus() == 0.0) {
        if (b.real() < 1.0) {
            if (is_nonpositive_integer(a - b + 1.0)) return {0.0, 0.0};
            return {1.0, log_gamma(a) + log_gamma(1.0 - b) - log_gamma(a - b + 1.0)};
        }
        throw DomainError("hyp_u: U(a, b, 0) is infinite for Re b >= 1");
    }
    return gamma_u_core(a, b, z);
}

}  // namespace detail

/// Gamma(a) U(a, b, z) in log-scaled form. Requires a not a nonpositive integer.
inline LogScaled gamma_hyp_u_scaled(cplx a, cplx b, const BranchedComplex& z) {
    return detail::gamma_u_impl(a, b, z);
}

/// Gamma(a) U(a, b, z).
inline cplx gamma_hyp_u(cplx a, cplx b, const BranchedComplex& z) { return gamma_hyp_u_scaled(a, b, z).value(); }

/// U(a, b, z) on the sheet given by z's argument.
inline cplx hyp_u(const UParams& p) {
    const cplx a = p.a, b = p.b;
    const BranchedComplex& z = p.z;
    if (detail::is_nonpositive_integer(a)) {
        return detail::u_polynomial(static_cast<int>(std::lround(-a.real())), b, z.to_principal());
    }
    if (z.modulus() == 0.0) {
        if (b.real() < 1.0) return std::exp(log_gamma(1.0 - b)) * rgamma(a - b + 1.0);
        throw DomainError("hyp_u: U(a, b, 0) is infinite for Re b >= 1");
    }
    if (detail::series_worth_trying(a, b, z.modulus())) {
        auto est = detail::u_series(a, b, z);
        if (std::isfinite(est.value.real()) && std::isfinite(est.value.imag()) &&
            est.error <= 1e-13 * std::abs(est.value))
            return est.value;
    }
    if (std::abs(a) <= 12.0 && std::abs(b) <= 12.0) return detail::u_by_asymptotic_anchor(a, b, z).value();
    LogScaled g = detail::gamma_u_core(a, b, z);
    return LogScaled{g.mantissa, g.log_scale - log_gamma(a)}.value();
}

inline cplx hyp_u(cplx a, cplx b, const BranchedComplex& z) { return hyp_u(UParams{a, b, z}); }

/// U(a, b, z) from direct adaptive quadrature of the Laplace integral
///   Gamma(a) U(a,b,z) = int_0^inf e^{-zt} t^{a-1} (1+t)^{b-a-1} dt,
/// valid for Re a > 0 and |arg z| < pi/2. Independent of hyp_u; used as an oracle.
inline cplx hyp_u_laplace_oracle(cplx a, cplx b, cplx z, double tol = 1e-13) {
    if (!(a.real() > 0.0)) throw DomainError("hyp_u_laplace_oracle: requires Re a > 0");
    if (z == cplx{} || !(std::abs(std::arg(z)) < 0.5 * kPi))
        throw DomainError("hyp_u_laplace_oracle: requires |arg z| < pi/2");
    const cplx am1 = a - 1.0;
    const cplx e2 = b - a - 1.0;
    auto f = [&](double t) -> cplx {
        if (t <= 0.0) return 0.0;
        return std::exp(-z * t + am1 * std::log(t) + e2 * std::log1p(t));
    };

    // [0, 1]: t = u^{1/alpha} removes the t^{Re a - 1} endpoint singularity.
    const double alpha = std::min(a.real(), 1.0);
    auto f_head = [&](double u) -> cplx {
        if (u <= 0.0) return 0.0;
        const double t = std::pow(u, 1.0 / alpha);
        return std::exp(-z * t + (a / alpha - 1.0) * std::log(u) + e2 * std::log1p(t)) / alpha;
    };
    const std::array<double, 5> head_bp = {0.0, 0.125, 0.25, 0.5, 1.0};
    auto head = magnus::detail::integrate_adaptive<cplx>(f_head, head_bp, 0.0, 0.1 * tol, 4000);

    // [1, t_max] with geometric breakpoints.
    const double re_z = z.real();
    double t_max = 2.0;
    const double f1 = std::abs(f(1.0));
    double peak = f1;
    while (true) {
        const double m = std::abs(f(t_max));
        peak = std::max(peak, m);
        if (t_max * re_z > 40.0 && m < 1e-20 * peak) break;
        t_max *= 2.0;
        if (t_max > 1e12) throw NonConvergenceError("hyp_u_laplace_oracle: integrand does not decay");
    }
    std::vector<double> bp;
    for (double t = 1.0; t < t_max; t *= 1.5) bp.push_back(t);
    bp.push_back(t_max);
    auto tail = magnus::detail::integrate_adaptive<cplx>(f, bp, 0.0, 0.1 * tol, 4000);
    const double total_abs = head.abs_value + tail.abs_value;
    if (head.error + tail.error > tol * std::max(std::abs(head.value + tail.value), 1e-300) &&
        head.error + tail.error > tol * total_abs)
        throw NonConvergenceError("hyp_u_laplace_oracle: quadrature did not converge");
    return (head.value + tail.value) * rgamma(a);
}

}  // namespace magnus::specfun
