#pragma once

// Registry of the integral addition theorems: left-hand sides, right-hand
// side integrands along s = sigma + i t, strip constraints, convergence
// domains and decay models.
//
// Every corollary integrand is a constant multiple kappa of the general
// U-form integrand (1/(2 pi i)) G(c/2 - s, c, x) G(c/2 + s, c, y),
// G = Gamma(a) U(a, b, z), under
//   U_HALF, U_THREEHALVES   c = 1/2, 3/2 with the same x, y
//   H2-type                 x = i xi^2,   sqrt(2x) = (1+i) xi
//   H1-type                 x = -i xi^2,  sqrt(2x) = (1-i) xi
//   K-type                  x = xi^2 / 2, sqrt(2x) = xi
// J and Y combine one H1-type and one H2-type term. The integrands themselves
// are evaluated in D-form, where D is entire and needs no sheet tracking.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "magnus/asymptotics.hpp"
#include "magnus/branched_complex.hpp"
#include "magnus/cylinder.hpp"
#include "magnus/errors.hpp"
#include "magnus/hyp_u.hpp"
#include "magnus/pcf.hpp"
#include "magnus/quadrature.hpp"

namespace magnus::theorems {

using asymptotics::TailModel;
using quadrature::QuadratureResult;

enum class TheoremId { U_GENERAL, U_HALF, U_THREEHALVES, H2_0, H1_0, H1_1, H2_1, J0_ADD, Y0_ADD, J1_ADD, Y1_ADD, K0_ADD, K1_ADD };

inline constexpr std::array<TheoremId, 13> kAllTheorems = {
    TheoremId::U_GENERAL, TheoremId::U_HALF, TheoremId::U_THREEHALVES, TheoremId::H2_0, TheoremId::H1_0,
    TheoremId::H1_1,      TheoremId::H2_1,   TheoremId::J0_ADD,        TheoremId::Y0_ADD, TheoremId::J1_ADD,
    TheoremId::Y1_ADD,    TheoremId::K0_ADD, TheoremId::K1_ADD,
};

inline std::string_view to_string(TheoremId id) {
    switch (id) {
        case TheoremId::U_GENERAL: return "u-general";
        case TheoremId::U_HALF: return "u-half";
        case TheoremId::U_THREEHALVES: return "u-threehalves";
        case TheoremId::H2_0: return "h2-0";
        case TheoremId::H1_0: return "h1-0";
        case TheoremId::H1_1: return "h1-1";
        case TheoremId::H2_1: return "h2-1";
        case TheoremId::J0_ADD: return "j0";
        case TheoremId::Y0_ADD: return "y0";
        case TheoremId::J1_ADD: return "j1";
        case TheoremId::Y1_ADD: return "y1";
        case TheoremId::K0_ADD: return "k0";
        case TheoremId::K1_ADD: return "k1";
    }
    return "?";
}

inline std::optional<TheoremId> parse_theorem_id(std::string_view s) {
    for (TheoremId id : kAllTheorems)
        if (to_string(id) == s) return id;
    return std::nullopt;
}

inline bool is_u_form(TheoremId id) {
    return id == TheoremId::U_GENERAL || id == TheoremId::U_HALF || id == TheoremId::U_THREEHALVES;
}

/// Order of the cylinder function (0 or 1); the c = 3/2 family for U.
inline bool is_order_one(TheoremId id) {
    switch (id) {
        case TheoremId::U_THREEHALVES:
        case TheoremId::H1_1:
        case TheoremId::H2_1:
        case TheoremId::J1_ADD:
        case TheoremId::Y1_ADD:
        case TheoremId::K1_ADD: return true;
        default: return false;
    }
}

struct TheoremCase {
    TheoremId id = TheoremId::U_GENERAL;
    cplx c = 0.5;                 // U_GENERAL only
    BranchedComplex x{1.0, 0.0};  // U-form theorems
    BranchedComplex y{1.0, 0.0};
    cplx xi = 1.0;                // xi, eta-form theorems
    cplx eta = 1.0;
    cplx sigma = 0.0;

    static TheoremCase u_form(TheoremId id, cplx c, BranchedComplex x, BranchedComplex y, cplx sigma = 0.0) {
        TheoremCase k;
        k.id = id;
        k.c = id == TheoremId::U_HALF ? cplx(0.5) : id == TheoremId::U_THREEHALVES ? cplx(1.5) : c;
        k.x = x;
        k.y = y;
        k.sigma = sigma;
        return k;
    }
    static TheoremCase xi_eta(TheoremId id, cplx xi, cplx eta, cplx sigma = 0.0) {
        TheoremCase k;
        k.id = id;
        k.c = is_order_one(id) ? 1.5 : 0.5;
        k.xi = xi;
        k.eta = eta;
        k.sigma = sigma;
        return k;
    }
};

/// Effective c of the underlying U-form theorem.
inline cplx effective_c(const TheoremCase& k) {
    if (k.id == TheoremId::U_GENERAL) return k.c;
    return is_order_one(k.id) ? 1.5 : 0.5;
}

/// Half-width of the admissible strip |Re sigma| < w.
inline double strip_half_width(const TheoremCase& k) { return 0.5 * effective_c(k).real(); }

inline void check_strip(const TheoremCase& k) {
    if (k.id == TheoremId::U_GENERAL && !(k.c.real() > 0.0)) throw DomainError("u-general requires Re c > 0");
    if (!(std::abs(k.sigma.real()) < strip_half_width(k)))
        throw StripError("sigma outside the strip |Re sigma| < " + std::to_string(strip_half_width(k)));
}

struct DomainDecision {
    bool inside = false;
    std::array<double, 2> margins{};
    TailModel model;  // decay of the case's integrand in t, s = it/2 (measure dt), prefactors included

    /// Both sides grow: no part of the contour converges.
    bool divergent() const { return std::max(model.alpha_plus, model.alpha_minus) < 0.0; }
};

namespace detail {

inline constexpr double kLn2 = 0.69314718055994530941723212145817657;
inline const cplx I(0.0, 1.0);

inline double reduce_arg(cplx z, double lo) {
    double a = std::arg(z);
    while (a <= lo) a += 2.0 * kPi;
    while (a > lo + 2.0 * kPi) a -= 2.0 * kPi;
    return a;
}

enum class Mapping { H2, H1, K };

// x = i xi^2, -i xi^2 or xi^2 / 2 on the sheet that makes sqrt(2x) = (1 +- i) xi or xi.
inline BranchedComplex mapped(cplx xi, Mapping m) {
    const double r = std::abs(xi);
    switch (m) {
        case Mapping::H2: return {r * r, 0.5 * kPi + 2.0 * reduce_arg(xi, -1.25 * kPi)};
        case Mapping::H1: return {r * r, -0.5 * kPi + 2.0 * reduce_arg(xi, -0.75 * kPi)};
        case Mapping::K: return {0.5 * r * r, 2.0 * reduce_arg(xi, -kPi)};
    }
    return {};
}

struct Term {
    BranchedComplex x;
    BranchedComplex y;
    double log_kappa;
};

inline cplx half_sum_sq(const TheoremCase& k) { return 0.5 * (k.xi * k.xi + k.eta * k.eta); }

// The U-form terms making up the case's integrand, with |kappa|.
inline std::vector<Term> terms(const TheoremCase& k) {
    const double log_pi = std::log(kPi);
    switch (k.id) {
        case TheoremId::U_GENERAL: return {{k.x, k.y, 0.0}};
        case TheoremId::U_HALF: return {{k.x, k.y, -0.5 * log_pi}};
        case TheoremId::U_THREEHALVES:
            return {{k.x, k.y, kLn2 + 0.5 * std::log(k.x.modulus() * k.y.modulus()) - 0.5 * log_pi}};
        default: break;
    }
    const cplx w = half_sum_sq(k);
    const double log_w2 = std::log(std::abs(2.0 * w));
    const double log_xe = std::log(std::abs(k.xi * k.eta));
    const Term h2{mapped(k.xi, Mapping::H2), mapped(k.eta, Mapping::H2), 0.0};
    const Term h1{mapped(k.xi, Mapping::H1), mapped(k.eta, Mapping::H1), 0.0};
    auto with = [](Term t, double lk) {
        t.log_kappa = lk;
        return t;
    };
    const double k0 = std::log(2.0 / kPi);
    const double k1 = std::log(4.0 / kPi) + log_w2;
    switch (k.id) {
        case TheoremId::H2_0: return {with(h2, k0 + w.imag())};
        case TheoremId::H1_0: return {with(h1, k0 - w.imag())};
        case TheoremId::H2_1: return {with(h2, k1 + log_xe + w.imag())};
        case TheoremId::H1_1: return {with(h1, k1 + log_xe - w.imag())};
        case TheoremId::J0_ADD:
        case TheoremId::Y0_ADD: return {with(h1, k0 - kLn2 - w.imag()), with(h2, k0 - kLn2 + w.imag())};
        case TheoremId::J1_ADD:
        case TheoremId::Y1_ADD: return {with(h1, k1 - kLn2 - w.imag()), with(h2, k1 - kLn2 + w.imag())};
        case TheoremId::K0_ADD:
        case TheoremId::K1_ADD: {
            const Term kt{mapped(k.xi, Mapping::K), mapped(k.eta, Mapping::K), 0.0};
            const cplx z = 0.5 * w;
            double lk = -z.real();
            if (k.id == TheoremId::K1_ADD) lk += kLn2 + log_xe + std::log(std::abs(2.0 * z));
            return {with(kt, lk)};
        }
        default: break;
    }
    return {};
}

inline void check_inputs(const TheoremCase& k) {
    if (is_u_form(k.id)) {
        if (k.x.modulus() == 0.0 || k.y.modulus() == 0.0) throw ZeroInputError("x and y must be nonzero");
        return;
    }
    // x = i xi^2 etc. must be nonzero for the underlying u-form theorem.
    if (k.xi == cplx{} || k.eta == cplx{}) throw ZeroInputError("xi and eta must be nonzero");
}

inline std::array<double, 2> margins_of(const TheoremCase& k) {
    const cplx xi = k.xi, eta = k.eta;
    switch (k.id) {
        case TheoremId::U_GENERAL:
        case TheoremId::U_HALF:
        case TheoremId::U_THREEHALVES: {
            const auto f = asymptotics::decay_factors(k.x, k.y);
            return {f.f_plus.real(), f.f_minus.real()};
        }
        case TheoremId::H2_0:
        case TheoremId::H2_1: return {(eta + I * xi).real(), (xi + I * eta).real()};
        case TheoremId::H1_0:
        case TheoremId::H1_1: return {(eta - I * xi).real(), (xi - I * eta).real()};
        case TheoremId::J0_ADD:
        case TheoremId::Y0_ADD:
        case TheoremId::J1_ADD:
        case TheoremId::Y1_ADD: return {xi.real() - std::abs(eta.imag()), eta.real() - std::abs(xi.imag())};
        case TheoremId::K0_ADD:
        case TheoremId::K1_ADD:
            return {((1.0 - I) * xi + (1.0 + I) * eta).real(), ((1.0 + I) * xi + (1.0 - I) * eta).real()};
    }
    return {};
}

}  // namespace detail

/// Convergence condition of the theorem, its two margins, and the decay model.
inline DomainDecision domain_check(const TheoremCase& k) {
    detail::check_inputs(k);
    DomainDecision d;
    d.margins = detail::margins_of(k);
    d.inside = d.margins[0] > 0.0 && d.margins[1] > 0.0;
    const cplx c = effective_c(k);
    const auto ts = detail::terms(k);
    bool first = true;
    for (const auto& t : ts) {
        TailModel m = asymptotics::tail_model(c, t.x, t.y);
        m.log_amplitude += t.log_kappa;
        if (first) {
            d.model = m;
            first = false;
        } else {
            d.model.alpha_plus = std::min(d.model.alpha_plus, m.alpha_plus);
            d.model.alpha_minus = std::min(d.model.alpha_minus, m.alpha_minus);
            d.model.log_amplitude = std::max(d.model.log_amplitude, m.log_amplitude);
        }
    }
    if (ts.size() > 1) d.model.log_amplitude += detail::kLn2;
    return d;
}

/// The u-general case underlying a corollary (the H2-type term for J and Y).
inline TheoremCase general_form(const TheoremCase& k) {
    detail::check_inputs(k);
    const auto ts = detail::terms(k);
    const auto& t = ts.back();
    return TheoremCase::u_form(TheoremId::U_GENERAL, effective_c(k), t.x, t.y, k.sigma);
}

/// Left-hand side including its prefactors, on the sector stated with the theorem.
inline cplx lhs(const TheoremCase& k) {
    using specfun::CylFamily;
    using specfun::CylKind;
    using specfun::cyl_fun;
    detail::check_inputs(k);
    switch (k.id) {
        case TheoremId::U_GENERAL:
        case TheoremId::U_HALF:
        case TheoremId::U_THREEHALVES: {
            const cplx s = k.x.to_principal() + k.y.to_principal();
            if (s.real() <= 0.0 && std::abs(s.imag()) <= 1e-14 * std::abs(s))
                throw SectorError("x + y lies on the cut");
            const auto z = BranchedComplex::principal(s);
            if (k.id == TheoremId::U_GENERAL) return specfun::gamma_hyp_u(k.c, 2.0 * k.c, z);
            if (k.id == TheoremId::U_HALF) return specfun::hyp_u(0.5, 1.0, z);
            return k.x.sqrt().to_principal() * k.y.sqrt().to_principal() * specfun::hyp_u(1.5, 3.0, z);
        }
        default: break;
    }
    const cplx w = detail::half_sum_sq(k);
    const cplx xe = k.xi * k.eta;
    auto h2_arg = [&] { return BranchedComplex(std::abs(w), std::arg(detail::I * w) - 0.5 * kPi); };
    auto h1_arg = [&] { return BranchedComplex(std::abs(w), std::arg(-detail::I * w) + 0.5 * kPi); };
    const auto wp = BranchedComplex::principal(w);
    switch (k.id) {
        case TheoremId::H2_0: return cyl_fun(CylKind(CylFamily::H2, 0), h2_arg());
        case TheoremId::H1_0: return cyl_fun(CylKind(CylFamily::H1, 0), h1_arg());
        case TheoremId::H2_1: return xe * cyl_fun(CylKind(CylFamily::H2, 1), h2_arg());
        case TheoremId::H1_1: return xe * cyl_fun(CylKind(CylFamily::H1, 1), h1_arg());
        case TheoremId::J0_ADD: return cyl_fun(CylKind(CylFamily::J, 0), wp);
        case TheoremId::Y0_ADD: return cyl_fun(CylKind(CylFamily::Y, 0), wp);
        case TheoremId::J1_ADD: return cyl_fun(CylKind(CylFamily::J, 1), wp);
        case TheoremId::Y1_ADD: return cyl_fun(CylKind(CylFamily::Y, 1), wp);
        case TheoremId::K0_ADD: return cyl_fun(CylKind(CylFamily::K, 0), BranchedComplex::principal(0.5 * w));
        case TheoremId::K1_ADD:
            return xe * cyl_fun(CylKind(CylFamily::K, 1), BranchedComplex::principal(0.5 * w));
        default: break;
    }
    throw DomainError("lhs: unknown theorem");
}

namespace detail {

// Gamma(1/4 - s) Gamma(1/4 + s) D_{2s-1/2}(z1) D_{-2s-1/2}(z2), or with 3/4 for order one.
inline LogScaled d_product(cplx s, const BranchedComplex& z1, const BranchedComplex& z2, bool order_one) {
    if (order_one) return specfun::pcf_d_gamma2(2.0 * s - 0.5, z1) * specfun::pcf_d_gamma2(-2.0 * s - 0.5, z2);
    return specfun::pcf_d_gamma1(2.0 * s - 0.5, z1) * specfun::pcf_d_gamma1(-2.0 * s - 0.5, z2);
}

inline cplx scaled_value(LogScaled v, cplx factor) {
    v.mantissa *= factor;
    return v.value();
}

}  // namespace detail

/// Integrand of the right-hand side at s, including the display's prefactor
/// (integrate with respect to s).
inline cplx rhs_integrand(const TheoremCase& k, cplx s) {
    using detail::I;
    const double sqrt2 = std::sqrt(2.0);
    const double pi2 = kPi * kPi;
    const bool one = is_order_one(k.id);
    switch (k.id) {
        case TheoremId::U_GENERAL: {
            const cplx c = k.c;
            LogScaled g = specfun::gamma_hyp_u_scaled(0.5 * c - s, c, k.x) * specfun::gamma_hyp_u_scaled(0.5 * c + s, c, k.y);
            return detail::scaled_value(g, 1.0 / (2.0 * kPi * I));
        }
        case TheoremId::U_HALF:
        case TheoremId::U_THREEHALVES: {
            const BranchedComplex zx(std::sqrt(2.0 * k.x.modulus()), 0.5 * k.x.argument());
            const BranchedComplex zy(std::sqrt(2.0 * k.y.modulus()), 0.5 * k.y.argument());
            LogScaled p = detail::d_product(s, zx, zy, one);
            p.log_scale += 0.5 * (k.x.to_principal() + k.y.to_principal());
            const double pre = one ? sqrt2 / std::pow(kPi, 1.5) : 1.0 / (sqrt2 * std::pow(kPi, 1.5));
            return detail::scaled_value(p, pre / I);
        }
        default: break;
    }
    const cplx xi = k.xi, eta = k.eta;
    const cplx sum_sq = xi * xi + eta * eta;
    auto plus = [&] {
        return detail::d_product(s, BranchedComplex::principal((1.0 + I) * xi), BranchedComplex::principal((1.0 + I) * eta), one);
    };
    auto minus = [&] {
        return detail::d_product(s, BranchedComplex::principal((1.0 - I) * xi), BranchedComplex::principal((1.0 - I) * eta), one);
    };
    switch (k.id) {
        case TheoremId::H2_0: return detail::scaled_value(plus(), sqrt2 / pi2);
        case TheoremId::H1_0: return detail::scaled_value(minus(), -sqrt2 / pi2);
        case TheoremId::H2_1: return detail::scaled_value(plus(), -2.0 * sqrt2 * sum_sq / (pi2 * I));
        case TheoremId::H1_1: return detail::scaled_value(minus(), -2.0 * sqrt2 * sum_sq / (pi2 * I));
        case TheoremId::J0_ADD: {
            const cplx f = 1.0 / (sqrt2 * pi2);
            return detail::scaled_value(plus(), f) - detail::scaled_value(minus(), f);
        }
        case TheoremId::Y0_ADD: {
            const cplx f = I / (sqrt2 * pi2);
            return detail::scaled_value(minus(), f) + detail::scaled_value(plus(), f);
        }
        case TheoremId::J1_ADD: {
            const cplx f = I * sqrt2 * sum_sq / (pi2 * xi * eta);
            return detail::scaled_value(minus(), f) + detail::scaled_value(plus(), f);
        }
        case TheoremId::Y1_ADD: {
            const cplx f = sqrt2 * sum_sq / (pi2 * xi * eta);
            return detail::scaled_value(minus(), f) - detail::scaled_value(plus(), f);
        }
        case TheoremId::K0_ADD:
        case TheoremId::K1_ADD: {
            LogScaled p = detail::d_product(s, BranchedComplex::principal(xi), BranchedComplex::principal(eta), one);
            const cplx f = one ? sqrt2 * sum_sq / (kPi * I) : 1.0 / (sqrt2 * kPi * I);
            return detail::scaled_value(p, f);
        }
        default: break;
    }
    throw DomainError("rhs_integrand: unknown theorem");
}

/// The right-hand side: the integrand along s = Re(sigma) + i t with ds = i dt,
/// truncated and integrated to absolute accuracy tol * |value|.
inline QuadratureResult evaluate_rhs(const TheoremCase& k, double tol) {
    check_strip(k);
    const DomainDecision d = domain_check(k);
    const double sigma = k.sigma.real();
    const TailModel qm = asymptotics::to_quadrature_variable(d.model);
    quadrature::RealIntegrand f = [&](double t) { return detail::I * rhs_integrand(k, cplx(sigma, t)); };

    double scale = 0.0;
    for (double t : {0.0, -0.5, 0.5}) scale = std::max(scale, std::abs(f(t)));
    if (!(scale > 0.0) || !std::isfinite(scale)) scale = std::exp(qm.log_amplitude);
    const auto pilot = quadrature::integrate_vertical_line(f, sigma, qm, 1e-5 * scale);
    const double target = std::max(std::abs(pilot.value), 1e-8 * scale);
    auto result = quadrature::integrate_vertical_line(f, sigma, qm, tol * target);
    result.evaluations += pilot.evaluations + 3;
    return result;
}

}  // namespace magnus::theorems
