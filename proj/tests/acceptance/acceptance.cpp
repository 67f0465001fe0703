// Acceptance checks. Prints one PASS/FAIL line per criterion; exit status is
// nonzero when any selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "../unit/oracles.hpp"
#include "magnus/magnus.hpp"

using magnus::BranchedComplex;
using magnus::cplx;
using magnus::kPi;
using magnus::theorems::TheoremCase;
using magnus::theorems::TheoremId;
namespace th = magnus::theorems;
namespace vf = magnus::verifier;

namespace {

const cplx I(0.0, 1.0);

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail = what;
            pass = false;
        }
    }
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

TheoremCase u_case(TheoremId id, cplx c, cplx x, cplx y, double sigma = 0.0) {
    return TheoremCase::u_form(id, c, BranchedComplex::principal(x), BranchedComplex::principal(y), sigma);
}

const std::vector<std::pair<cplx, cplx>>& xy_pairs() {
    static const std::vector<std::pair<cplx, cplx>> p = {
        {1.0, 1.0},         {0.5, 2.0},           {3.0, 0.7},           {{1.0, 1.0}, {2.0, -0.5}},
        {{0.5, -0.4}, {1.5, 0.8}}, {2.0, 2.0},    {0.3, 0.3},           {{4.0, 1.0}, 1.0},
        {{1.0, -1.0}, {1.0, 1.0}}, {{2.0, 0.5}, {0.6, -0.2}},
    };
    return p;
}

const std::vector<std::pair<cplx, cplx>>& xi_eta_points() {
    static const std::vector<std::pair<cplx, cplx>> p = {
        {1.0, 1.0}, {0.5, 2.0}, {1.5, 0.8}, {{1.0, -0.3}, {1.0, 0.2}}, {{0.8, 0.2}, {1.2, -0.4}},
    };
    return p;
}

std::vector<TheoremCase> corollary_cases() {
    std::vector<TheoremCase> out;
    for (TheoremId id : th::kAllTheorems) {
        if (id == TheoremId::U_GENERAL) continue;
        if (th::is_u_form(id)) {
            for (std::size_t i = 0; i < 5; ++i) out.push_back(u_case(id, 0.5, xy_pairs()[i].first, xy_pairs()[i].second));
        } else {
            for (const auto& [xi, eta] : xi_eta_points()) out.push_back(TheoremCase::xi_eta(id, xi, eta));
        }
    }
    return out;
}

std::vector<TheoremCase> general_cases() {
    std::vector<TheoremCase> out;
    for (cplx c : {cplx(0.5), cplx(1.0), cplx(1.5), cplx(1.0, 0.3)})
        for (const auto& [x, y] : xy_pairs()) out.push_back(u_case(TheoremId::U_GENERAL, c, x, y));
    return out;
}

Outcome criterion1() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    int n = 0;
    for (cplx a : {cplx(0.5), cplx(1.0), cplx(2.0, 1.0)})
        for (cplx b : {cplx(0.5), cplx(1.0), cplx(1.5), cplx(3.0)})
            for (double r : {0.5, 2.0, 10.0})
                for (double th : {0.0, kPi / 3.0, -kPi / 3.0}) {
                    const cplx z = std::polar(r, th);
                    const double e = oracle::rel_err(magnus::specfun::hyp_u(a, b, BranchedComplex::principal(z)),
                                                     magnus::specfun::hyp_u_laplace_oracle(a, b, z));
                    worst = std::max(worst, e);
                    ++n;
                    o.require(e <= 1e-10, fmt("a=%g%+gi: rel error %.3g", a.real(), a.imag(), e));
                }
    const double dt = seconds_since(t0);
    o.require(dt < 10.0, fmt("runtime %.2f s", dt));
    if (o.pass) o.detail = fmt("%g points, worst rel error %.3g, %.2f s", n, worst, dt);
    return o;
}

Outcome criterion2() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    double worst_ratio = 0.0;
    for (cplx b : {cplx(0.5), cplx(1.0), cplx(1.5)})
        for (cplx zc : {cplx(0.5), cplx(1.0), cplx(1.0, 0.5)})
            for (double theta : {-kPi / 4.0, 0.0, kPi / 4.0}) {
                const auto z = BranchedComplex::principal(zc);
                double err[3];
                int i = 0;
                for (double m : {20.0, 40.0, 80.0}) {
                    const cplx u = std::polar(m, theta);
                    const cplx a = 0.25 * u * u + 0.5 * b;
                    const auto direct = magnus::specfun::gamma_hyp_u_scaled(a, b, z.squared());
                    const cplx est = magnus::asymptotics::lemma22_estimate(b, z, u);
                    err[i++] = std::abs(std::exp(std::log(est) - direct.log()) - 1.0);
                }
                const double r1 = err[1] / err[0], r2 = err[2] / err[1];
                worst_ratio = std::max({worst_ratio, r1, r2});
                o.require(r1 <= 0.6 && r2 <= 0.6,
                          fmt("b=%g z=%g theta=%g: error ratios exceed 0.6", b.real(), std::abs(zc), theta));
            }
    const double dt = seconds_since(t0);
    o.require(dt < 10.0, fmt("runtime %.2f s", dt));
    if (o.pass) o.detail = fmt("27 configurations, worst ratio %.3f, %.2f s", worst_ratio, dt);
    return o;
}

Outcome criterion3() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (const auto& k : general_cases()) {
        const auto d = th::domain_check(k);
        const auto r = vf::verify_case(k, 1e-10, 1e-8);
        o.require(d.inside, "sample outside the domain: " + vf::echo_inputs(k));
        o.require(r.status == vf::Status::Pass, "c=" + vf::format_complex(k.c) + " " + r.inputs + ": " +
                                                    std::string(vf::to_string(r.status)));
        if (std::isfinite(r.rel_error)) worst = std::max(worst, r.rel_error);
    }
    const double anchor = std::exp(1.0) * oracle::bessel_k0_series(1.0).real();
    const auto k = u_case(TheoremId::U_GENERAL, 0.5, 1.0, 1.0);
    const double e_lhs = std::abs(th::lhs(k) - anchor) / anchor;
    const double e_rhs = std::abs(th::evaluate_rhs(k, 1e-10).value - anchor) / anchor;
    o.require(std::abs(anchor - 1.1444630) < 1e-7, fmt("anchor oracle %.10f", anchor));
    o.require(e_lhs < 1e-12 && e_rhs < 1e-8, fmt("e K0(1) anchor: lhs %.3g rhs %.3g", e_lhs, e_rhs));
    const double dt = seconds_since(t0);
    o.require(dt < 60.0, fmt("runtime %.2f s", dt));
    if (o.pass) o.detail = fmt("40 cases, worst rel error %.3g; e K0(1) anchor rhs %.3g; %.2f s", worst, e_rhs, dt);
    return o;
}

Outcome criterion4() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    const auto cases = corollary_cases();
    for (const auto& k : cases) {
        const auto r = vf::verify_case(k, 1e-10, 1e-8);
        o.require(r.status == vf::Status::Pass,
                  r.theorem + " " + r.inputs + ": " + std::string(vf::to_string(r.status)) + " " +
                      vf::format_real(r.rel_error));
        if (std::isfinite(r.rel_error)) worst = std::max(worst, r.rel_error);
    }
    const double s2 = std::sqrt(2.0);
    const auto k0 = vf::verify_case(TheoremCase::xi_eta(TheoremId::K0_ADD, s2, s2));
    const auto j0 = vf::verify_case(TheoremCase::xi_eta(TheoremId::J0_ADD, 1.0, 1.0));
    const double k0_ref = oracle::bessel_k0_series(1.0).real();
    const double j0_ref = oracle::bessel_j0_series(1.0).real();
    o.require(std::abs(k0_ref - 0.4210244382) < 1e-10 && std::abs(j0_ref - 0.7651976866) < 1e-10, "anchor oracles");
    const double ek = std::abs(k0.rhs - k0_ref) / k0_ref, ej = std::abs(j0.rhs - j0_ref) / j0_ref;
    o.require(ek <= 1e-8 && ej <= 1e-8, fmt("anchors: k0 %.3g j0 %.3g", ek, ej));
    const double dt = seconds_since(t0);
    o.require(dt < 300.0, fmt("runtime %.2f s", dt));
    if (o.pass)
        o.detail = fmt("%g cases over 12 corollaries, worst rel error %.3g, %.2f s", double(cases.size()), worst, dt);
    return o;
}

Outcome criterion5() {
    Outcome o;
    double worst = 0.0;
    std::vector<TheoremCase> cases = {u_case(TheoremId::U_GENERAL, 1.0, 1.0, 1.0),
                                      u_case(TheoremId::U_GENERAL, cplx(1.0, 0.3), cplx(1.0, 1.0), cplx(2.0, -0.5))};
    for (TheoremId id : th::kAllTheorems) {
        if (id == TheoremId::U_GENERAL) continue;
        cases.push_back(th::is_u_form(id) ? u_case(id, 0.5, 1.0, 2.0)
                                          : TheoremCase::xi_eta(id, cplx(1.0, -0.3), cplx(1.0, 0.2)));
    }
    for (const auto& k : cases) {
        const double w = th::strip_half_width(k);
        const auto rep = vf::sigma_shift_test(k, {-0.8 * w, 0.0, 0.5 * w, 0.8 * w}, 1e-10);
        worst = std::max(worst, rep.max_rel_deviation);
        o.require(rep.max_rel_deviation <= 1e-8,
                  std::string(th::to_string(k.id)) + fmt(": deviation %.3g", rep.max_rel_deviation));
        for (double bad : {1.02 * w, -w, 2.0 * w}) {
            bool rejected = false;
            try {
                vf::sigma_shift_test(k, {0.0, bad}, 1e-10);
            } catch (const magnus::StripError&) {
                rejected = true;
            }
            o.require(rejected, std::string(th::to_string(k.id)) + fmt(": sigma %g accepted", bad));
        }
    }
    if (o.pass) o.detail = fmt("%g cases, strips 1/4, 1/2, 3/4; worst deviation %.3g; out-of-strip sigmas rejected",
                               double(cases.size()), worst);
    return o;
}

Outcome criterion6() {
    Outcome o;
    const auto k = TheoremCase::xi_eta(TheoremId::J0_ADD, I, I);
    const auto r = vf::verify_case(k);
    o.require(r.status == vf::Status::Divergent, "j0 at xi = eta = i: status " + std::string(vf::to_string(r.status)));
    const auto d = th::domain_check(k);
    o.require(std::abs(d.model.alpha_plus) < 1e-12 && std::abs(d.model.alpha_minus) < 1e-12,
              fmt("j0 at xi = eta = i: alpha+ = %.6g, alpha- = %.6g (required 0)", d.model.alpha_plus,
                  d.model.alpha_minus));
    bool rejected = false;
    try {
        th::domain_check(TheoremCase::xi_eta(TheoremId::J0_ADD, 0.0, 0.0));
    } catch (const magnus::ZeroInputError&) {
        rejected = true;
    }
    o.require(rejected, "xi = eta = 0 accepted");
    if (o.pass) o.detail = "divergent with alpha = 0; xi = eta = 0 rejected";
    return o;
}

Outcome criterion7() {
    Outcome o;
    std::mt19937_64 rng(20261019);
    std::uniform_real_distribution<double> re(0.4, 2.5), im(-0.35, 0.35), sre(-0.2, 0.2), sim(-40.0, 40.0);
    double worst = 0.0;
    int n = 0;
    while (n < 20) {
        const cplx xi(re(rng), im(rng)), eta(re(rng), im(rng));
        const auto j0 = TheoremCase::xi_eta(TheoremId::J0_ADD, xi, eta);
        if (!th::domain_check(j0).inside) continue;
        const cplx s(sre(rng), sim(rng));
        const cplx sum = th::rhs_integrand(TheoremCase::xi_eta(TheoremId::H1_0, xi, eta), s) +
                         th::rhs_integrand(TheoremCase::xi_eta(TheoremId::H2_0, xi, eta), s);
        const cplx twice = 2.0 * th::rhs_integrand(j0, s);
        const double e = std::abs(sum - twice) / std::abs(twice);
        worst = std::max(worst, e);
        o.require(e <= 1e-10, fmt("integrand mismatch %.3g", e));
        ++n;
    }
    double worst_prod = 0.0;
    int accepted = 0;
    auto check_product = [&](const BranchedComplex& x, const BranchedComplex& y) {
        const auto f = magnus::asymptotics::decay_factors(x, y);
        const cplx want = 2.0 * (x.to_principal() + y.to_principal());
        const double e = std::abs(f.f_plus * f.f_minus - want) / std::max(1.0, std::abs(want));
        worst_prod = std::max(worst_prod, e);
        o.require(e <= 1e-12, fmt("F+F- mismatch %.3g", e));
    };
    std::vector<TheoremCase> all = general_cases();
    for (const auto& k : corollary_cases()) all.push_back(k);
    for (const auto& k : all) {
        if (!th::domain_check(k).inside) continue;
        ++accepted;
        for (const auto& t : th::detail::terms(k)) check_product(t.x, t.y);
    }
    if (o.pass)
        o.detail = fmt("20 samples, worst integrand mismatch %.3g; F+F- = 2(x+y) on %g accepted cases, worst %.3g", worst,
                       accepted, worst_prod);
    return o;
}

// Least-squares slope of log|f(t)| - p log t against sqrt t, using the
// maximum of each bin so that oscillation zeros do not bias the fit.
double fitted_alpha(const std::function<cplx(double)>& f, double power, double sign, double r0, double r1) {
    const int bins = 40, per_bin = 12;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int b = 0; b < bins; ++b) {
        double best = -INFINITY, best_r = 0.0;
        for (int j = 0; j < per_bin; ++j) {
            const double r = r0 + (r1 - r0) * (b * per_bin + j + 0.5) / (bins * per_bin);
            const double t = r * r;
            const double v = std::log(std::abs(f(sign * t))) - power * std::log(t);
            if (v > best) {
                best = v;
                best_r = r;
            }
        }
        sx += best_r;
        sy += best;
        sxx += best_r * best_r;
        sxy += best_r * best;
    }
    const double n = bins;
    return -(n * sxy - sx * sy) / (n * sxx - sx * sx);
}

Outcome criterion8() {
    Outcome o;
    const double s2 = std::sqrt(2.0);
    const std::vector<TheoremCase> cases = {u_case(TheoremId::U_GENERAL, 0.5, 1.0, 1.0),
                                            TheoremCase::xi_eta(TheoremId::K0_ADD, s2, s2),
                                            TheoremCase::xi_eta(TheoremId::J0_ADD, 1.0, 1.0)};
    std::string summary;
    for (const auto& k : cases) {
        const auto d = th::domain_check(k);
        o.require(d.inside, "case not accepted");
        // the model variable t: s = i t / 2, ds = (i / 2) dt
        auto f = [&](double t) { return th::rhs_integrand(k, cplx(0.0, 0.5 * t)) * cplx(0.0, 0.5); };
        const double ap = fitted_alpha(f, d.model.power, 1.0, 15.0, 60.0);
        const double am = fitted_alpha(f, d.model.power, -1.0, 15.0, 60.0);
        const double ep = std::abs(ap / d.model.alpha_plus - 1.0), em = std::abs(am / d.model.alpha_minus - 1.0);
        o.require(ep <= 0.05 && em <= 0.05,
                  std::string(th::to_string(k.id)) + fmt(": fitted %.4f/%.4f vs model", ap, am) +
                      fmt(" %.4f/%.4f", d.model.alpha_plus, d.model.alpha_minus));
        summary += std::string(th::to_string(k.id)) + fmt(" %.4f/%.4f (model %.4f)", ap, am, d.model.alpha_plus) + "; ";
    }
    if (o.pass) o.detail = "fitted alpha+/alpha-: " + summary.substr(0, summary.size() - 2);
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                            criterion5, criterion6, criterion7, criterion8};
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            const int n = std::atoi(argv[++i]);
            if (n < 1 || n > int(criteria.size())) {
                std::fprintf(stderr, "criterion must be 1..%zu\n", criteria.size());
                return 2;
            }
            selected.push_back(n);
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]...\n", argv[0]);
            return 2;
        }
    }
    if (selected.empty())
        for (int n = 1; n <= int(criteria.size()); ++n) selected.push_back(n);
    bool all = true;
    for (int n : selected) {
        Outcome o;
        try {
            o = criteria[n - 1]();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s criterion %d: %s\n", o.pass ? "PASS" : "FAIL", n, o.detail.c_str());
        std::fflush(stdout);
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
