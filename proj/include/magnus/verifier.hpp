#pragma once

// Case verification, grid scans, sigma-shift and divergence probes, and
// csv / json-lines reports.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "magnus/asymptotics.hpp"
#include "magnus/errors.hpp"
#include "magnus/theorems.hpp"

namespace magnus::verifier {

using theorems::TheoremCase;
using theorems::TheoremId;

enum class Status { Pass, Fail, OutsideDomain, Divergent, NumericFailure };

inline std::string_view to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::OutsideDomain: return "outside-domain";
        case Status::Divergent: return "divergent";
        case Status::NumericFailure: return "numeric-failure";
    }
    return "?";
}

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct VerificationRecord {
    std::string theorem;
    std::string inputs;
    cplx lhs{kNaN, kNaN};
    cplx rhs{kNaN, kNaN};
    double abs_error = kNaN;
    double rel_error = kNaN;
    std::array<double, 2> margins{kNaN, kNaN};
    double truncation_height = kNaN;
    std::size_t evaluations = 0;
    Status status = Status::NumericFailure;
    double wall_time = 0.0;
};

/// "re+imi" with 17 significant digits.
inline std::string format_complex(cplx z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

inline std::string format_real(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string echo_inputs(const TheoremCase& k) {
    std::string s;
    if (theorems::is_u_form(k.id)) {
        if (k.id == TheoremId::U_GENERAL) s += "c=" + format_complex(k.c) + ";";
        s += "x=" + format_real(k.x.modulus()) + "@" + format_real(k.x.argument());
        s += ";y=" + format_real(k.y.modulus()) + "@" + format_real(k.y.argument());
    } else {
        s += "xi=" + format_complex(k.xi) + ";eta=" + format_complex(k.eta);
    }
    s += ";sigma=" + format_complex(k.sigma);
    return s;
}

/// Verify one case. Every outcome is a status; nothing is thrown.
inline VerificationRecord verify_case(const TheoremCase& k, double tol = 1e-10, double threshold = 1e-8) {
    const auto start = std::chrono::steady_clock::now();
    VerificationRecord r;
    r.theorem = std::string(theorems::to_string(k.id));
    r.inputs = echo_inputs(k);
    auto finish = [&] {
        r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return r;
    };
    try {
        r.margins = theorems::detail::margins_of(k);
        theorems::check_strip(k);
        const auto d = theorems::domain_check(k);
        r.margins = d.margins;
        if (!d.inside) {
            r.status = d.divergent() ? Status::Divergent : Status::OutsideDomain;
            return finish();
        }
        r.lhs = theorems::lhs(k);
        const auto q = theorems::evaluate_rhs(k, tol);
        r.rhs = q.value;
        r.truncation_height = q.truncation_height;
        r.evaluations = q.evaluations;
        r.abs_error = std::abs(r.rhs - r.lhs);
        r.rel_error = std::abs(r.lhs) > 0.0 ? r.abs_error / std::abs(r.lhs) : r.abs_error;
        if (!q.converged || !std::isfinite(r.rel_error))
            r.status = Status::NumericFailure;
        else
            r.status = r.rel_error <= threshold ? Status::Pass : Status::Fail;
    } catch (const ZeroInputError&) {
        r.status = Status::OutsideDomain;
    } catch (const StripError&) {
        r.status = Status::OutsideDomain;
    } catch (const NoDecayError&) {
        r.status = Status::Divergent;
    } catch (const std::exception&) {
        r.status = Status::NumericFailure;
    }
    return finish();
}

/// Note for a failing corollary whose underlying u-general case passes.
inline std::string discrepancy_note(const TheoremCase& k, const VerificationRecord& r, double tol, double threshold) {
    if (r.status != Status::Fail || k.id == TheoremId::U_GENERAL) return {};
    try {
        const auto g = verify_case(theorems::general_form(k), tol, threshold);
        if (g.status == Status::Pass)
            return "possible transcription discrepancy: " + r.theorem + " fails at " + r.inputs +
                   " while the underlying u-general case passes";
    } catch (const std::exception&) {
    }
    return {};
}

// ---------------------------------------------------------------- grids

struct Range {
    double lo = 0.0;
    double hi = 0.0;
    int n = 1;
    bool log = false;

    std::vector<double> values() const {
        std::vector<double> v;
        if (n <= 1) return {lo};
        for (int i = 0; i < n; ++i) {
            const double f = double(i) / (n - 1);
            v.push_back(log ? lo * std::pow(hi / lo, f) : lo + (hi - lo) * f);
        }
        return v;
    }
};

struct GridAxis {
    std::string name;
    Range re;
    Range im;
    std::string tied_to;  // non-empty: copy of another parameter
};

struct GridSpec {
    std::vector<GridAxis> axes;
    std::size_t cap = 10000;

    std::size_t size() const {
        std::size_t n = 1;
        for (const auto& a : axes)
            if (a.tied_to.empty()) n *= std::size_t(std::max(1, a.re.n)) * std::size_t(std::max(1, a.im.n));
        return n;
    }
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

inline double parse_double(const std::string& s) {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad number: " + s);
    return v;
}

inline Range parse_range(const std::string& s) {
    const auto p = split(s, ':');
    Range r;
    if (p.size() == 1) {
        r.lo = r.hi = parse_double(p[0]);
        return r;
    }
    if (p.size() < 3 || p.size() > 4) throw std::invalid_argument("bad range: " + s);
    r.lo = parse_double(p[0]);
    r.hi = parse_double(p[1]);
    r.n = std::stoi(p[2]);
    if (r.n < 1) throw std::invalid_argument("range needs at least one point: " + s);
    if (p.size() == 4) {
        if (p[3] != "log") throw std::invalid_argument("unknown range flag: " + p[3]);
        if (!(r.lo > 0.0 && r.hi > 0.0)) throw std::invalid_argument("log range needs positive ends: " + s);
        r.log = true;
    }
    return r;
}

}  // namespace detail

/// Parse "name=<re-range>[@<im-range>];..." where a range is "lo:hi:n[:log]"
/// or a single value, and "name=other" ties a parameter to another one.
inline GridSpec parse_grid(const std::string& spec, std::size_t cap = 10000) {
    static const std::vector<std::string> kNames = {"x", "y", "xi", "eta", "c", "sigma"};
    GridSpec g;
    g.cap = cap;
    for (const auto& item : detail::split(spec, ';')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("grid item without '=': " + item);
        GridAxis a;
        a.name = item.substr(0, eq);
        const std::string rhs = item.substr(eq + 1);
        if (std::find(kNames.begin(), kNames.end(), a.name) == kNames.end())
            throw std::invalid_argument("unknown grid parameter: " + a.name);
        if (std::find(kNames.begin(), kNames.end(), rhs) != kNames.end()) {
            a.tied_to = rhs;
        } else {
            const auto at = rhs.find('@');
            a.re = detail::parse_range(rhs.substr(0, at));
            if (at != std::string::npos) a.im = detail::parse_range(rhs.substr(at + 1));
        }
        g.axes.push_back(a);
    }
    if (g.size() > g.cap) throw std::invalid_argument("grid exceeds the point cap");
    return g;
}

namespace detail {

inline void set_param(TheoremCase& k, const std::string& name, cplx v) {
    if (name == "x") k.x = BranchedComplex::principal(v);
    else if (name == "y") k.y = BranchedComplex::principal(v);
    else if (name == "xi") k.xi = v;
    else if (name == "eta") k.eta = v;
    else if (name == "c") k.c = v;
    else if (name == "sigma") k.sigma = v;
}

inline cplx get_param(const TheoremCase& k, const std::string& name) {
    if (name == "x") return k.x.to_principal();
    if (name == "y") return k.y.to_principal();
    if (name == "xi") return k.xi;
    if (name == "eta") return k.eta;
    if (name == "c") return k.c;
    return k.sigma;
}

}  // namespace detail

/// All grid points applied to a base case, last axis varying fastest.
inline std::vector<TheoremCase> expand_grid(const TheoremCase& base, const GridSpec& g) {
    if (g.size() > g.cap) throw std::invalid_argument("grid exceeds the point cap");
    std::vector<TheoremCase> out{base};
    for (const auto& a : g.axes) {
        if (!a.tied_to.empty()) continue;
        std::vector<TheoremCase> next;
        const auto re = a.re.values();
        const auto im = a.im.values();
        for (const auto& k : out)
            for (double r : re)
                for (double i : im) {
                    TheoremCase c = k;
                    detail::set_param(c, a.name, {r, i});
                    next.push_back(c);
                }
        out = std::move(next);
    }
    for (auto& k : out)
        for (const auto& a : g.axes)
            if (!a.tied_to.empty()) detail::set_param(k, a.name, detail::get_param(k, a.tied_to));
    return out;
}

/// Worker count from MAGNUS_WORKERS, else the hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("MAGNUS_WORKERS")) {
        const int n = std::atoi(env);
        if (n > 0) return unsigned(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Apply fn to every element, in parallel, keeping input order.
template <class In, class Out>
std::vector<Out> parallel_map(const std::vector<In>& items, const std::function<Out(const In&)>& fn,
                              unsigned workers) {
    std::vector<Out> out(items.size());
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) out[i] = fn(items[i]);
    };
    workers = std::max(1u, std::min<unsigned>(workers, unsigned(items.size())));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
    return out;
}

inline std::vector<VerificationRecord> scan_grid(const TheoremCase& base, const GridSpec& grid, double tol = 1e-10,
                                                 double threshold = 1e-8, unsigned workers = worker_count()) {
    const auto cases = expand_grid(base, grid);
    std::function<VerificationRecord(const TheoremCase&)> fn = [&](const TheoremCase& k) {
        return verify_case(k, tol, threshold);
    };
    return parallel_map(cases, fn, workers);
}

inline std::vector<VerificationRecord> scan_grid(TheoremId id, const GridSpec& grid, double tol = 1e-10,
                                                 double threshold = 1e-8, unsigned workers = worker_count()) {
    TheoremCase base = theorems::is_u_form(id) ? TheoremCase::u_form(id, 0.5, {1.0, 0.0}, {1.0, 0.0})
                                               : TheoremCase::xi_eta(id, 1.0, 1.0);
    return scan_grid(base, grid, tol, threshold, workers);
}

// ---------------------------------------------------------------- probes

struct SigmaShiftRow {
    double sigma = 0.0;
    cplx rhs{};
    double abs_error_estimate = 0.0;
};

struct SigmaShiftReport {
    std::vector<SigmaShiftRow> rows;
    double max_rel_deviation = 0.0;
    bool pass = false;
};

/// evaluate_rhs at each sigma; pass iff the pairwise relative deviation is <= 100 tol.
inline SigmaShiftReport sigma_shift_test(const TheoremCase& k, const std::vector<double>& sigmas, double tol = 1e-10) {
    for (double s : sigmas) {
        TheoremCase c = k;
        c.sigma = s;
        theorems::check_strip(c);
    }
    SigmaShiftReport rep;
    for (double s : sigmas) {
        TheoremCase c = k;
        c.sigma = s;
        const auto q = theorems::evaluate_rhs(c, tol);
        rep.rows.push_back({s, q.value, q.abs_error_estimate});
    }
    for (std::size_t i = 0; i < rep.rows.size(); ++i)
        for (std::size_t j = i + 1; j < rep.rows.size(); ++j) {
            const double scale = std::max(std::abs(rep.rows[i].rhs), std::abs(rep.rows[j].rhs));
            const double dev = std::abs(rep.rows[i].rhs - rep.rows[j].rhs) / (scale > 0.0 ? scale : 1.0);
            rep.max_rel_deviation = std::max(rep.max_rel_deviation, dev);
        }
    rep.pass = rep.max_rel_deviation <= 100.0 * tol;
    return rep;
}

struct ProbeReport {
    std::string theorem;
    std::string inputs;
    std::array<double, 2> margins{};
    double alpha_plus = 0.0;
    double alpha_minus = 0.0;
    bool inside = false;
    bool divergent = false;
    bool boundary = false;  // a margin is exactly zero
    std::vector<std::pair<double, double>> samples;  // (t, |integrand(sigma + i t)|)
    bool non_decaying = false;
};

/// Decay model of the case and, when it predicts no decay, samples of the
/// integrand magnitude at t = 1e2, 1e3, 1e4.
inline ProbeReport divergence_probe(const TheoremCase& k) {
    ProbeReport p;
    p.theorem = std::string(theorems::to_string(k.id));
    p.inputs = echo_inputs(k);
    try {
        const auto d = theorems::domain_check(k);
        p.margins = d.margins;
        p.alpha_plus = d.model.alpha_plus;
        p.alpha_minus = d.model.alpha_minus;
        p.inside = d.inside;
        p.divergent = d.divergent();
    } catch (const ZeroInputError&) {
        p.margins = theorems::detail::margins_of(k);
        p.alpha_plus = p.alpha_minus = kNaN;
    }
    p.boundary = p.margins[0] == 0.0 || p.margins[1] == 0.0;
    const bool decays = p.alpha_plus > 0.0 && p.alpha_minus > 0.0;
    if (!decays) {
        for (double t : {1e2, 1e3, 1e4}) {
            double m = kNaN;
            try {
                m = std::abs(theorems::rhs_integrand(k, cplx(k.sigma.real(), t)));
            } catch (const std::exception&) {
            }
            p.samples.emplace_back(t, m);
        }
        p.non_decaying = true;
        for (std::size_t i = 1; i < p.samples.size(); ++i)
            if (!(p.samples[i].second >= 0.5 * p.samples[i - 1].second)) p.non_decaying = false;
    }
    return p;
}

// ---------------------------------------------------------------- reports

enum class ReportFormat { JsonLines, Csv };

struct ReportOptions {
    bool deterministic = false;  // write wall_time as 0 so identical runs give identical bytes
};

inline void emit_report(const std::vector<VerificationRecord>& records, ReportFormat format, std::ostream& out,
                        ReportOptions opt = {}) {
    auto margins = [](const VerificationRecord& r) {
        return format_real(r.margins[0]) + ";" + format_real(r.margins[1]);
    };
    auto wall = [&](const VerificationRecord& r) { return opt.deterministic ? 0.0 : r.wall_time; };
    if (format == ReportFormat::Csv) {
        out << "theorem,inputs,lhs,rhs,abs_error,rel_error,margins,truncation_height,evaluations,status,wall_time\n";
        for (const auto& r : records) {
            out << r.theorem << ',' << r.inputs << ',' << format_complex(r.lhs) << ',' << format_complex(r.rhs) << ','
                << format_real(r.abs_error) << ',' << format_real(r.rel_error) << ',' << margins(r) << ','
                << format_real(r.truncation_height) << ',' << r.evaluations << ',' << to_string(r.status) << ','
                << format_real(wall(r)) << '\n';
        }
        return;
    }
    for (const auto& r : records) {
        nlohmann::ordered_json j;
        j["theorem"] = r.theorem;
        j["inputs"] = r.inputs;
        j["lhs"] = format_complex(r.lhs);
        j["rhs"] = format_complex(r.rhs);
        j["abs_error"] = format_real(r.abs_error);
        j["rel_error"] = format_real(r.rel_error);
        j["margins"] = margins(r);
        j["truncation_height"] = format_real(r.truncation_height);
        j["evaluations"] = r.evaluations;
        j["status"] = std::string(to_string(r.status));
        j["wall_time"] = format_real(wall(r));
        out << j.dump() << '\n';
    }
}

/// True when no record failed numerically or against the threshold.
inline bool all_acceptable(const std::vector<VerificationRecord>& records) {
    return std::all_of(records.begin(), records.end(), [](const auto& r) {
        return r.status != Status::Fail && r.status != Status::NumericFailure;
    });
}

}  // namespace magnus::verifier
