#pragma once

// Integration along vertical lines s = sigma + i t. The integrand decays like
// exp(-alpha sqrt|t|); on |t| >= 1 the substitution t = +-tau^2 turns that into
// exp(-alpha tau) and the truncated range is handled by globally adaptive
// Gauss-Kronrod with dyadic breakpoints in tau.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "magnus/asymptotics.hpp"
#include "magnus/branched_complex.hpp"
#include "magnus/detail/gauss_kronrod.hpp"
#include "magnus/errors.hpp"

namespace magnus::quadrature {

using asymptotics::TailModel;

struct QuadratureResult {
    cplx value{};
    double abs_error_estimate = 0.0;
    double truncation_height = 0.0;
    std::size_t panels = 0;
    std::size_t evaluations = 0;
    bool converged = false;
};

using RealIntegrand = std::function<cplx(double)>;

inline constexpr std::size_t kMaxPanels = 4000;

/// Adaptive G10/K21 estimate of int_{t0}^{t1} f(t) dt to absolute tolerance tol.
inline QuadratureResult integrate_panel(const RealIntegrand& f, double t0, double t1, double tol) {
    if (!(t0 < t1)) throw DomainError("integrate_panel: requires t0 < t1");
    if (!(tol > 0.0)) throw DomainError("integrate_panel: requires tol > 0");
    const std::array<double, 2> bp = {t0, t1};
    auto r = magnus::detail::integrate_adaptive<cplx>(f, bp, tol, 0.0, kMaxPanels);
    QuadratureResult q;
    q.value = r.value;
    q.abs_error_estimate = r.error;
    q.truncation_height = std::max(std::abs(t0), std::abs(t1));
    q.panels = r.intervals;
    q.evaluations = r.evaluations;
    q.converged = r.converged;
    return q;
}

namespace detail {

struct Piece {
    cplx value{};
    double error = 0.0;
    double abs_value = 0.0;
    std::size_t panels = 0;
    std::size_t evaluations = 0;
};

// int_{-T}^{T} f(t) dt, split as [-1, 1] plus t = +-tau^2 on tau in [1, sqrt T].
inline Piece integrate_truncated(const RealIntegrand& f, double T, double tol) {
    const double R = std::sqrt(T);
    std::vector<double> bp;
    // tau from -R to R with the central part mapped back to t in [-1, 1]:
    // the variable v runs over [-R, R]; |v| <= 1 means t = v, else t = sign(v) v^2.
    auto t_of = [](double v) { return std::abs(v) <= 1.0 ? v : std::copysign(v * v, v); };
    auto g = [&](double v) -> cplx {
        const double jac = std::abs(v) <= 1.0 ? 1.0 : 2.0 * std::abs(v);
        return f(t_of(v)) * jac;
    };
    std::vector<double> right = {0.0, 0.5, 1.0};
    for (double tau = 2.0; tau < R; tau *= 2.0) right.push_back(tau);
    if (R > 1.0) right.push_back(R);
    for (auto it = right.rbegin(); it != right.rend(); ++it)
        if (*it > 0.0) bp.push_back(-*it);
    for (double v : right) bp.push_back(v);
    auto r = magnus::detail::integrate_adaptive<cplx>(g, bp, tol, 0.0, kMaxPanels);
    return {r.value, r.error, r.abs_value, r.intervals, r.evaluations};
}

}  // namespace detail

/// int_{-inf}^{inf} f(t) dt for an integrand with the decay of `model` (in the
/// variable t). T comes from the model with 10% of tol for the tail, and is
/// extended when samples at +-T exceed the model. The reported error is the
/// panel estimate plus the certified tail bound.
inline QuadratureResult integrate_vertical_line(const RealIntegrand& f, double sigma, const TailModel& model,
                                                double tol) {
    (void)sigma;  // f already carries the abscissa; kept for the call signature
    if (!(tol > 0.0)) throw DomainError("integrate_vertical_line: requires tol > 0");
    const double tail_budget = 0.1 * tol;
    double T = asymptotics::truncation_height(model, tail_budget);

    // Correct the model amplitude by the measured size of f near the cutoff.
    TailModel m = model;
    for (int iter = 0; iter < 30; ++iter) {
        const double sample = std::max(std::abs(f(T)) / std::exp(m.log_envelope(T)),
                                       std::abs(f(-T)) / std::exp(m.log_envelope(-T)));
        if (std::isfinite(sample) && sample > 1.0) m.log_amplitude += std::log(sample);
        double bound = asymptotics::tail_bound(m, T);
        if (bound <= tail_budget) break;
        T *= 1.5;
    }
    const double bound = asymptotics::tail_bound(m, T);

    auto piece = detail::integrate_truncated(f, T, 0.9 * tol);
    QuadratureResult q;
    q.value = piece.value;
    q.abs_error_estimate = piece.error + bound;
    q.truncation_height = T;
    q.panels = piece.panels;
    q.evaluations = piece.evaluations + 2;
    q.converged = q.abs_error_estimate <= tol && std::isfinite(std::abs(q.value));
    return q;
}

}  // namespace magnus::quadrature
