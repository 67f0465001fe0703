#pragma once

// Large-parameter estimates for Gamma(a) U(a, b, z^2) with a = u^2/4 + b/2,
// the one-term K_nu expansion, and the decay model of the addition-theorem
// integrand that sets quadrature truncation heights.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "magnus/branched_complex.hpp"
#include "magnus/cylinder.hpp"
#include "magnus/errors.hpp"
#include "magnus/gamma.hpp"

namespace magnus::asymptotics {

using specfun::bessel_k;

namespace detail {

inline void check_u(cplx u) {
    if (u == cplx{} || !(u.real() > 0.0)) throw DomainError("asymptotics: requires |arg u| < pi/2");
}

inline constexpr double kLn2 = 0.69314718055994530941723212145817657;

}  // namespace detail

struct Lemma21Estimate {
    cplx bessel_form;    // z K_{b-1}(uz) - (z/u) K_b(uz) z^3/6
    cplx reconstructed;  // implied Gamma(a) U(a, b, z^2)
};

/// Bessel-form leading approximation. z may lie on any sheet with
/// |arg z| <= pi (so that z^2 stays within the tracked range).
inline Lemma21Estimate lemma21_estimate(cplx b, const BranchedComplex& z, cplx u) {
    detail::check_u(u);
    if (z.modulus() == 0.0) throw DomainError("lemma21_estimate: z = 0");
    const BranchedComplex uz(std::abs(u) * z.modulus(), std::arg(u) + z.argument());
    const cplx zp = z.to_principal();
    const cplx form = zp * bessel_k(b - 1.0, uz) - zp / u * bessel_k(b, uz) * (zp * zp * zp / 6.0);
    const cplx log_pref = (b - 2.0) * detail::kLn2 + (1.0 - b) * std::log(u) - 0.5 * zp * zp + b * z.log();
    return {form, form * std::exp(-log_pref)};
}

inline Lemma21Estimate lemma21_estimate(cplx b, cplx z, cplx u) {
    return lemma21_estimate(b, BranchedComplex::principal(z), u);
}

/// sqrt(pi) (u/2)^{b-3/2} z^{1/2-b} e^{z^2/2 - uz}, leading form of Gamma(a) U(a, b, z^2).
inline cplx lemma22_estimate(cplx b, const BranchedComplex& z, cplx u) {
    detail::check_u(u);
    if (z.modulus() == 0.0) throw DomainError("lemma22_estimate: z = 0");
    if (std::abs(z.argument()) > kPi + 1e-12) throw SectorError("lemma22_estimate: requires |arg z| <= pi");
    const cplx zp = z.to_principal();
    const cplx l = 0.5 * std::log(kPi) + (b - 1.5) * std::log(0.5 * u) + (0.5 - b) * z.log() + 0.5 * zp * zp - u * zp;
    return std::exp(l);
}

inline cplx lemma22_estimate(cplx b, cplx z, cplx u) { return lemma22_estimate(b, BranchedComplex::principal(z), u); }

/// sqrt(pi / (2w)) e^{-w}, for |arg w| < 3 pi / 2.
inline cplx k_asymptotic(cplx nu, const BranchedComplex& w) {
    (void)nu;
    if (w.modulus() == 0.0) throw DomainError("k_asymptotic: w = 0");
    if (!(std::abs(w.argument()) < 1.5 * kPi)) throw SectorError("k_asymptotic: requires |arg w| < 3 pi / 2");
    const cplx l = 0.5 * std::log(kPi) - 0.5 * (detail::kLn2 + w.log()) - w.to_principal();
    return std::exp(l);
}

inline cplx k_asymptotic(cplx nu, cplx w) { return k_asymptotic(nu, BranchedComplex::principal(w)); }

/// Predicted |integrand(t)| ~ exp(log_amplitude) |t|^power exp(-sqrt|t| alpha_pm)
/// for t -> +-inf.
struct TailModel {
    double alpha_plus = 0.0;
    double alpha_minus = 0.0;
    double power = 0.0;
    double log_amplitude = 0.0;

    double min_alpha() const { return std::min(alpha_plus, alpha_minus); }
    double log_envelope(double t) const {
        const double at = std::abs(t);
        const double alpha = t >= 0.0 ? alpha_plus : alpha_minus;
        return log_amplitude + power * std::log(at) - std::sqrt(at) * alpha;
    }
};

struct DecayFactors {
    cplx f_plus;   // (1-i) sqrt x + (1+i) sqrt y
    cplx f_minus;  // (1+i) sqrt x + (1-i) sqrt y
};

inline DecayFactors decay_factors(const BranchedComplex& x, const BranchedComplex& y) {
    const cplx sx = x.sqrt().to_principal();
    const cplx sy = y.sqrt().to_principal();
    const cplx i(0.0, 1.0);
    return {(1.0 - i) * sx + (1.0 + i) * sy, (1.0 + i) * sx + (1.0 - i) * sy};
}

/// Decay model of (1/(4 pi)) Gamma((c-it)/2) Gamma((c+it)/2) U((c-it)/2, c, x) U((c+it)/2, c, y).
inline TailModel tail_model(cplx c, const BranchedComplex& x, const BranchedComplex& y) {
    if (x.modulus() == 0.0 || y.modulus() == 0.0) throw ZeroInputError("tail_model: x and y must be nonzero");
    const auto f = decay_factors(x, y);
    TailModel m;
    m.alpha_plus = f.f_plus.real();
    m.alpha_minus = f.f_minus.real();
    m.power = c.real() - 1.5;
    const cplx l = 0.5 * (x.to_principal() + y.to_principal()) + (0.25 - 0.5 * c) * (x.log() + y.log()) -
                   (0.5 + c) * detail::kLn2;
    m.log_amplitude = l.real();
    return m;
}

/// The same model in the quadrature variable t_q with s = sigma + i t_q
/// (t = 2 t_q), for the integrand (1/(2 pi i)) ... ds / dt_q times a constant
/// factor of modulus exp(log_kappa).
inline TailModel to_quadrature_variable(const TailModel& m, double log_kappa = 0.0) {
    TailModel q = m;
    q.alpha_plus = std::sqrt(2.0) * m.alpha_plus;
    q.alpha_minus = std::sqrt(2.0) * m.alpha_minus;
    q.log_amplitude = m.log_amplitude + (1.0 + m.power) * detail::kLn2 + log_kappa;
    return q;
}

/// Smallest T >= 1 (searched where the envelope decreases) with
/// exp(log_amplitude) T^power e^{-sqrt(T) min(alpha)} <= eps.
inline double truncation_height(const TailModel& model, double eps) {
    const double alpha = model.min_alpha();
    if (!(alpha > 0.0)) throw NoDecayError("truncation_height: the integrand does not decay");
    if (!(eps > 0.0)) throw DomainError("truncation_height: eps must be positive");
    const double target = std::log(eps);
    auto g = [&](double r) { return model.log_amplitude + 2.0 * model.power * std::log(r) - alpha * r; };
    double lo = std::max(1.0, 2.0 * model.power / alpha);
    if (g(lo) <= target) return lo * lo;
    double hi = 2.0 * lo;
    while (g(hi) > target) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e12) throw NoDecayError("truncation_height: decay too slow");
    }
    for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) > target ? lo : hi) = mid;
    }
    return hi * hi;
}

/// Bound on the envelope integral of one side, int_T^inf A t^p e^{-alpha sqrt t} dt.
inline double tail_bound_one_side(double log_amplitude, double power, double alpha, double T) {
    if (!(alpha > 0.0)) return std::numeric_limits<double>::infinity();
    const double R = std::sqrt(T);
    const double q = 2.0 * power + 1.0;
    const double base = 2.0 * std::exp(log_amplitude + q * std::log(R) - alpha * R);
    if (q <= 0.0) return base / alpha;
    if (q <= 1.0) return base * (1.0 / alpha + q / (alpha * alpha));
    if (alpha <= q / R) return std::numeric_limits<double>::infinity();
    return base / (alpha - q / R);
}

/// Envelope mass beyond |t| = T on both sides.
inline double tail_bound(const TailModel& model, double T) {
    return tail_bound_one_side(model.log_amplitude, model.power, model.alpha_plus, T) +
           tail_bound_one_side(model.log_amplitude, model.power, model.alpha_minus, T);
}

}  // namespace magnus::asymptotics
