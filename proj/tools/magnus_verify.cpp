// magnus-verify: numerical checks of the integral addition theorems.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "magnus/magnus.hpp"

using magnus::BranchedComplex;
using magnus::cplx;
using magnus::theorems::TheoremCase;
using magnus::theorems::TheoremId;
namespace verifier = magnus::verifier;

namespace {

cplx parse_complex(const std::string& s) {
    const auto comma = s.find(',');
    try {
        if (comma == std::string::npos) return {std::stod(s), 0.0};
        return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("complex value", "expected 're,im' but got '" + s + "'");
    }
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(std::stod(item));
    return out;
}

struct CaseOptions {
    std::string theorem;
    std::string x = "1,0", y = "1,0", xi = "1,0", eta = "1,0", c = "0.5,0";
    std::optional<double> x_arg, y_arg;
    double sigma = 0.0;
    double tol = 1e-10;
    double threshold = 1e-8;
    std::string format = "json-lines";
    std::string out;
    bool deterministic = false;

    void add_to(CLI::App* app) {
        app->add_option("--theorem", theorem, "theorem id (u-general, u-half, ..., k1)")->required();
        app->add_option("--x", x, "x as re,im (u-form theorems)");
        app->add_option("--y", y, "y as re,im");
        app->add_option("--x-arg", x_arg, "argument of x on the log surface, |arg| <= 2 pi");
        app->add_option("--y-arg", y_arg, "argument of y on the log surface");
        app->add_option("--xi", xi, "xi as re,im");
        app->add_option("--eta", eta, "eta as re,im");
        app->add_option("--c", c, "c as re,im (u-general)");
        app->add_option("--sigma", sigma, "real part of the contour abscissa");
        app->add_option("--tol", tol, "quadrature tolerance (relative)");
        app->add_option("--threshold", threshold, "pass threshold on the relative error");
        app->add_option("--format", format, "json-lines or csv")->check(CLI::IsMember({"json-lines", "csv"}));
        app->add_option("--out", out, "output file (default stdout)");
        app->add_flag("--deterministic", deterministic, "write wall_time as 0");
    }

    TheoremId id() const {
        auto id = magnus::theorems::parse_theorem_id(theorem);
        if (!id) throw CLI::ValidationError("--theorem", "unknown theorem id '" + theorem + "'");
        return *id;
    }

    TheoremCase build() const {
        const TheoremId tid = id();
        if (magnus::theorems::is_u_form(tid)) {
            auto bx = BranchedComplex::principal(parse_complex(x));
            auto by = BranchedComplex::principal(parse_complex(y));
            if (x_arg) bx = BranchedComplex(bx.modulus(), *x_arg);
            if (y_arg) by = BranchedComplex(by.modulus(), *y_arg);
            return TheoremCase::u_form(tid, parse_complex(c), bx, by, sigma);
        }
        return TheoremCase::xi_eta(tid, parse_complex(xi), parse_complex(eta), sigma);
    }

    verifier::ReportFormat report_format() const {
        return format == "csv" ? verifier::ReportFormat::Csv : verifier::ReportFormat::JsonLines;
    }
};

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw std::runtime_error("cannot open " + path);
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

int report_records(const CaseOptions& o, const std::vector<TheoremCase>& cases,
                   const std::vector<verifier::VerificationRecord>& records) {
    Output out(o.out);
    verifier::emit_report(records, o.report_format(), out.stream(), {o.deterministic});
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto note = verifier::discrepancy_note(cases[i], records[i], o.tol, o.threshold);
        if (!note.empty()) std::cerr << note << '\n';
    }
    return verifier::all_acceptable(records) ? 0 : 1;
}

int run_asym_check(int lemma, const std::string& b_str, const std::string& z_str, const std::string& umods,
                   double theta) {
    using namespace magnus;
    const cplx b = parse_complex(b_str);
    const auto z = BranchedComplex::principal(parse_complex(z_str));
    const auto mods = parse_list(umods);
    const int order = lemma == 21 ? 2 : 1;
    std::printf("lemma,u_mod,theta,estimate,direct,error\n");
    std::vector<double> errs;
    for (double m : mods) {
        const cplx u = std::polar(m, theta);
        const cplx a = 0.25 * u * u + 0.5 * b;
        const LogScaled direct = specfun::gamma_hyp_u_scaled(a, b, z.squared());
        const cplx est = lemma == 21 ? asymptotics::lemma21_estimate(b, z, u).reconstructed
                                     : asymptotics::lemma22_estimate(b, z, u);
        const double err = std::abs(std::exp(std::log(est) - direct.log()) - 1.0);
        errs.push_back(err);
        std::printf("%d,%.17g,%.17g,%s,%s,%.17g\n", lemma, m, theta, verifier::format_complex(est).c_str(),
                    verifier::format_complex(direct.value()).c_str(), err);
    }
    bool ok = true;
    for (std::size_t i = 1; i < errs.size(); ++i) {
        const double expected = std::pow(mods[i - 1] / mods[i], order);
        if (!(errs[i] <= 1.2 * expected * errs[i - 1])) ok = false;
    }
    std::printf("rate-order,%d,%s\n", order, ok ? "pass" : "fail");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification of integral addition theorems for U, D, and cylinder functions"};
    app.require_subcommand(1);

    CaseOptions verify_opts;
    auto* verify = app.add_subcommand("verify", "verify one case");
    verify_opts.add_to(verify);

    CaseOptions scan_opts;
    std::string grid;
    auto* scan = app.add_subcommand("scan", "verify every point of a grid");
    scan_opts.add_to(scan);
    scan->add_option("--grid", grid, "name=lo:hi:n[:log]@lo:hi:n;... or name=other")->required();

    CaseOptions sigma_opts;
    std::string sigmas;
    auto* sigma = app.add_subcommand("sigma-test", "compare the right-hand side across contour abscissae");
    sigma_opts.add_to(sigma);
    sigma->add_option("--sigmas", sigmas, "comma-separated list of real sigmas")->required();

    CaseOptions probe_opts;
    auto* probe = app.add_subcommand("probe", "report decay model and integrand growth");
    probe_opts.add_to(probe);

    int lemma = 22;
    std::string asym_b = "0.5,0", asym_z = "1,0", umods = "20,40,80";
    double theta = 0.0;
    auto* asym = app.add_subcommand("asym-check", "error rate of the large-parameter estimates");
    asym->add_option("--lemma", lemma, "21 or 22")->check(CLI::IsMember({21, 22}));
    asym->add_option("--b", asym_b, "b as re,im");
    asym->add_option("--z", asym_z, "z as re,im");
    asym->add_option("--umods", umods, "comma-separated |u| values");
    asym->add_option("--theta", theta, "arg u");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            const auto k = verify_opts.build();
            return report_records(verify_opts, {k}, {verifier::verify_case(k, verify_opts.tol, verify_opts.threshold)});
        }
        if (*scan) {
            const auto base = scan_opts.build();
            const auto g = verifier::parse_grid(grid);
            const auto cases = verifier::expand_grid(base, g);
            const auto records = verifier::scan_grid(base, g, scan_opts.tol, scan_opts.threshold);
            return report_records(scan_opts, cases, records);
        }
        if (*sigma) {
            const auto k = sigma_opts.build();
            const auto rep = verifier::sigma_shift_test(k, parse_list(sigmas), sigma_opts.tol);
            Output out(sigma_opts.out);
            out.stream() << "sigma,rhs,abs_error_estimate\n";
            for (const auto& r : rep.rows)
                out.stream() << verifier::format_real(r.sigma) << ',' << verifier::format_complex(r.rhs) << ','
                             << verifier::format_real(r.abs_error_estimate) << '\n';
            out.stream() << "max_rel_deviation," << verifier::format_real(rep.max_rel_deviation) << ','
                         << (rep.pass ? "pass" : "fail") << '\n';
            return rep.pass ? 0 : 1;
        }
        if (*probe) {
            const auto p = verifier::divergence_probe(probe_opts.build());
            nlohmann::ordered_json j;
            j["theorem"] = p.theorem;
            j["inputs"] = p.inputs;
            j["margins"] = {p.margins[0], p.margins[1]};
            j["alpha_plus"] = p.alpha_plus;
            j["alpha_minus"] = p.alpha_minus;
            j["inside"] = p.inside;
            j["divergent"] = p.divergent;
            j["boundary"] = p.boundary;
            auto samples = nlohmann::ordered_json::array();
            for (const auto& [t, m] : p.samples) samples.push_back({t, m});
            j["samples"] = samples;
            j["non_decaying"] = p.non_decaying;
            Output out(probe_opts.out);
            out.stream() << j.dump() << '\n';
            return 0;
        }
        if (*asym) return run_asym_check(lemma, asym_b, asym_z, umods, theta);
    } catch (const magnus::StripError& e) {
        std::cerr << "strip violation: " << e.what() << '\n';
        return 2;
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
