#include "eisenzero/zerofinder.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace eisenzero;

// All emitted numbers pass through a 15-significant-digit normalization so
// that reports are stable decimal documents.
double round15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return std::strtod(buf, nullptr);
}

std::string fmt15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

json complex_json(std::complex<double> z) {
    return json{{"re", round15(z.real())}, {"im", round15(z.imag())}};
}

double parse_double_checked(const std::string& text, const std::string& what) {
    if (text.empty()) throw std::invalid_argument(what + ": empty number");
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || !std::isfinite(v)) {
        throw std::invalid_argument(what + ": malformed number '" + text + "'");
    }
    return v;
}

// Accepts "a+bi", "a-bi", "bi", "i", "-i" and plain "a"; the plain form is
// rejected later because evaluation points must have positive height.
ComplexPoint parse_point(const std::string& text) {
    std::string s;
    for (const char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw std::invalid_argument("point literal is empty");

    double re = 0.0;
    double im = 0.0;
    if (s.back() == 'i' || s.back() == 'I') {
        const std::string body = s.substr(0, s.size() - 1);
        std::size_t split = std::string::npos;
        for (std::size_t i = body.size(); i-- > 1;) {
            const char c = body[i];
            if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
                split = i;
                break;
            }
        }
        std::string imag_text = body;
        if (split != std::string::npos) {
            re = parse_double_checked(body.substr(0, split), "point");
            imag_text = body.substr(split);
        }
        if (imag_text.empty() || imag_text == "+") {
            im = 1.0;
        } else if (imag_text == "-") {
            im = -1.0;
        } else {
            im = parse_double_checked(imag_text, "point");
        }
    } else {
        re = parse_double_checked(s, "point");
    }
    try {
        return ComplexPoint(re, im);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("point '" + text + "' must lie in the upper half-plane");
    }
}

TruncationPolicy policy_from_env() {
    TruncationPolicy p;
    if (const char* s = std::getenv("EISENZERO_U_MAX")) {
        const double v = parse_double_checked(s, "EISENZERO_U_MAX");
        if (v < 1.0 || v != std::floor(v) || v > 1e9) {
            throw std::invalid_argument("EISENZERO_U_MAX must be a positive integer");
        }
        p.lattice_u_max = static_cast<int>(v);
    }
    if (const char* s = std::getenv("EISENZERO_TOL")) {
        const double v = parse_double_checked(s, "EISENZERO_TOL");
        if (!(v > 0.0)) throw std::invalid_argument("EISENZERO_TOL must be positive");
        p.target_tail = v;
    }
    return p;
}

const char* line_series_name(LineSeries s) {
    return s == LineSeries::E0 ? locus_name(ZeroLocus::E0Line) : locus_name(ZeroLocus::EhalfLine);
}

struct EvalOptions {
    std::string series;
    std::string z_text;
    int k = 0;
    std::string expansion = "lattice";
    bool as_json = false;
    bool strict = false;
    int u_max = 0;
    double tol = 0.0;
};

int run_eval(const EvalOptions& opt) {
    const Weight w(opt.k);
    const ComplexPoint z = parse_point(opt.z_text);
    TruncationPolicy policy = policy_from_env();
    if (opt.u_max > 0) policy.lattice_u_max = opt.u_max;
    if (opt.tol > 0.0) policy.target_tail = opt.tol;

    EvalResult res;
    if (opt.expansion == "fourier") {
        if (opt.series != "e0") {
            throw std::invalid_argument("the fourier expansion is only available for series e0");
        }
        res = eval_E_0_fourier(z, w, policy);
    } else if (opt.series == "e0") {
        res = eval_E_0_lattice(z, w, policy);
    } else if (opt.series == "einf") {
        res = eval_E_inf(z, w, policy);
    } else {
        res = eval_E_half_lattice(z, w, policy);
    }

    if (opt.as_json) {
        const json out = {
            {"series", opt.series},
            {"expansion", opt.expansion},
            {"k", opt.k},
            {"z", complex_json(z.value())},
            {"value", complex_json(res.value)},
            {"tail_estimate", round15(res.tail_estimate)},
            {"terms_used", res.terms_used},
            {"certified", res.certified},
        };
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "series        " << opt.series << " (" << opt.expansion << ")\n"
                  << "k             " << opt.k << "\n"
                  << "z             " << fmt15(z.x) << " + " << fmt15(z.y) << "i\n"
                  << "value         " << fmt15(res.value.real()) << " + " << fmt15(res.value.imag())
                  << "i\n"
                  << "tail_estimate " << fmt15(res.tail_estimate) << "\n"
                  << "terms_used    " << res.terms_used << "\n"
                  << "certified     " << (res.certified ? "yes" : "no") << "\n";
    }
    if (opt.strict && !res.certified) {
        std::cerr << "error: truncation did not meet the accuracy target (strict mode)\n";
        return 3;
    }
    return 0;
}

struct ZerosOptions {
    int k = 0;
    bool as_json = false;
    std::string plot_path;
    int u_max = 0;
    double tol = 0.0;
};

json report_json(const ZeroReport& rep) {
    json zeros = json::array();
    for (const MappedZero& z : rep.zeros) {
        zeros.push_back({
            {"series", locus_name(z.locus)},
            {"y", round15(z.y)},
            {"finf_x", round15(z.finf_x)},
            {"finf_y", round15(z.finf_y)},
            {"circle_deviation", round15(z.circle_deviation)},
            {"residual", round15(z.residual)},
        });
    }
    json certs = json::array();
    for (const ZeroCertificate& c : rep.certificates) {
        certs.push_back({
            {"series", locus_name(c.locus)},
            {"y_lo", round15(c.y_lo)},
            {"y_hi", round15(c.y_hi)},
            {"sign_lo", c.sign_lo},
            {"sign_hi", c.sign_hi},
            {"margin_lo", round15(c.margin_lo)},
            {"margin_hi", round15(c.margin_hi)},
            {"refined_y", round15(c.refined_y)},
            {"residual", round15(c.residual)},
        });
    }
    json voided = json::array();
    for (const VoidedPoint& v : rep.voided) {
        voided.push_back({
            {"series", line_series_name(v.series)},
            {"y", round15(v.y)},
            {"approximant", round15(v.approximant)},
            {"remainder_bound", round15(v.remainder_bound)},
        });
    }
    return json{
        {"k", rep.k},
        {"count_found", rep.count_found},
        {"count_e0", rep.count_e0},
        {"count_ehalf", rep.count_ehalf},
        {"count_axis", rep.count_axis},
        {"valence_budget", rep.valence_budget},
        {"theorem_floor", rep.theorem_floor},
        {"p_zero_found", rep.p_zero_found},
        {"axis_min_value", round15(rep.axis_min_value)},
        {"axis_min_y", round15(rep.axis_min_y)},
        {"circle_max_deviation", round15(rep.circle_max_deviation)},
        {"zeros", zeros},
        {"certificates", certs},
        {"voided", voided},
    };
}

int run_zeros(const ZerosOptions& opt) {
    const Weight w(opt.k);
    TruncationPolicy policy = policy_from_env();
    if (opt.u_max > 0) policy.lattice_u_max = opt.u_max;
    if (opt.tol > 0.0) policy.target_tail = opt.tol;

    const ZeroReport rep = compile_report(w, policy);

    if (!opt.plot_path.empty()) {
        std::ofstream out(opt.plot_path);
        if (!out) throw std::invalid_argument("cannot open plot data file " + opt.plot_path);
        out << "series,y,finf_x,finf_y,residual\n";
        for (const MappedZero& z : rep.zeros) {
            out << locus_name(z.locus) << ',' << fmt15(z.y) << ',' << fmt15(z.finf_x) << ','
                << fmt15(z.finf_y) << ',' << fmt15(z.residual) << "\n";
        }
    }

    if (opt.as_json) {
        std::cout << report_json(rep).dump(2) << "\n";
        return 0;
    }

    std::cout << "k = " << rep.k << ": " << rep.count_found << " zero(es) certified ("
              << rep.count_e0 << " on the x = -1/2 line, " << rep.count_ehalf
              << " on the x = +1/2 line, " << rep.count_axis << " on the imaginary axis)\n";
    for (const MappedZero& z : rep.zeros) {
        std::cout << "  " << locus_name(z.locus) << "  y = " << fmt15(z.y) << "  image = ("
                  << fmt15(z.finf_x) << ", " << fmt15(z.finf_y)
                  << ")  circle_deviation = " << fmt15(z.circle_deviation)
                  << "  residual = " << fmt15(z.residual) << "\n";
    }
    if (!rep.p_zero_found) {
        std::cout << "  axis scan: no sign change; smallest scaled magnitude "
                  << fmt15(rep.axis_min_value) << " at y = " << fmt15(rep.axis_min_y) << "\n";
    }
    for (const VoidedPoint& v : rep.voided) {
        std::cout << "  voided " << line_series_name(v.series) << " point at y = " << fmt15(v.y)
                  << " (approximant " << fmt15(v.approximant) << ", remainder bound "
                  << fmt15(v.remainder_bound) << ")\n";
    }
    std::cout << "  counts: found " << rep.count_found << " <= budget " << rep.valence_budget
              << ", per-line floor " << rep.theorem_floor << "\n";
    return 0;
}

struct VerifyOptions {
    int k = 0;
    std::string suite = "all";
    int u_max = 0;
    double tol = 0.0;
};

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

// Deterministic low-discrepancy points in a box that stays well inside the
// convergence region of all three series.
std::vector<ComplexPoint> scatter_points(int count) {
    std::vector<ComplexPoint> pts;
    pts.reserve(static_cast<std::size_t>(count));
    double fx = 0.5;
    double fy = 0.25;
    for (int i = 0; i < count; ++i) {
        fx += 0.6180339887498949;
        fx -= std::floor(fx);
        fy += 0.7548776662466927;
        fy -= std::floor(fy);
        pts.emplace_back(-0.45 + 0.9 * fx, 0.55 + 0.85 * fy);
    }
    return pts;
}

void suite_relations(const Weight& w, const TruncationPolicy& policy,
                     std::vector<CheckResult>& out) {
    const auto pts = scatter_points(20);
    for (const Relation rel : {Relation::ZeroFromInf, Relation::HalfFromInf, Relation::HalfShift,
                               Relation::HalfFromZero}) {
        double worst = 0.0;
        for (const ComplexPoint& z : pts) {
            worst = std::max(worst, relation_residual(rel, z, w, policy));
        }
        out.push_back({std::string("relations/") + relation_formula(rel), worst, 1e-8,
                       worst < 1e-8});
    }
}

void suite_realness(const Weight& w, const TruncationPolicy& policy,
                    std::vector<CheckResult>& out) {
    const ApproxWindow win = approximation_window(w);
    double worst0 = 0.0;
    double worsth = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double y = win.y_min + (win.y_max - win.y_min) * i / 99.0;
        const std::complex<double> g0 =
            eighth_root_power(w.k) * eval_E_0_lattice(ComplexPoint(-0.5, y), w, policy).value;
        worst0 = std::max(worst0, std::abs(g0.imag()) / std::max(std::abs(g0), 1e-300));
        const std::complex<double> gh =
            eval_E_half_lattice(ComplexPoint(0.5, y), w, policy).value;
        worsth = std::max(worsth, std::abs(gh.imag()) / std::max(std::abs(gh), 1e-300));
    }
    out.push_back({"realness/E0_line", worst0, 1e-9, worst0 < 1e-9});
    out.push_back({"realness/Ehalf_line", worsth, 1e-9, worsth < 1e-9});
}

void suite_bounds(const Weight& w, const TruncationPolicy& policy, std::vector<CheckResult>& out) {
    for (const LineSeries series : {LineSeries::E0, LineSeries::Ehalf}) {
        double worst_ratio = 0.0;
        for (const SamplePoint& p : sample_points(w, series)) {
            const RemainderMeasurement rem = measured_remainder(series, p.y, w, policy);
            const TailBounds tb = tail_bounds(p.y, w);
            const double bound = series == LineSeries::E0 ? tb.j1 + tb.j2 : tb.n1 + tb.n2;
            worst_ratio = std::max(worst_ratio, rem.envelope / bound);
        }
        out.push_back({std::string("bounds/") + line_series_name(series) + " domination",
                       worst_ratio, 1.0, worst_ratio <= 1.0});
    }
}

void suite_coefficients(const Weight& w, const TruncationPolicy& policy,
                        std::vector<CheckResult>& out) {
    double worst = 0.0;
    for (const std::int64_t ell : {4, 9, 12, 18, 25, 27}) {
        const FourierCoefficient ladder = fourier_b(ell, w, policy);
        const std::complex<double> direct = fourier_b_direct(ell, w);
        worst = std::max(worst, std::abs(ladder.value - direct) / std::abs(direct));
    }
    out.push_back({"coefficients/ladder vs direct", worst, 1e-10, worst < 1e-10});
}

int run_verify(const VerifyOptions& opt) {
    const Weight w(opt.k);
    TruncationPolicy policy = policy_from_env();
    if (opt.u_max > 0) policy.lattice_u_max = opt.u_max;
    if (opt.tol > 0.0) policy.target_tail = opt.tol;

    std::vector<CheckResult> checks;
    if (opt.suite == "relations" || opt.suite == "all") suite_relations(w, policy, checks);
    if (opt.suite == "realness" || opt.suite == "all") suite_realness(w, policy, checks);
    if (opt.suite == "bounds" || opt.suite == "all") suite_bounds(w, policy, checks);
    if (opt.suite == "coefficients" || opt.suite == "all") suite_coefficients(w, policy, checks);

    const CheckResult* first_fail = nullptr;
    for (const CheckResult& c : checks) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "  measured=" << fmt15(c.measured)
                  << "  threshold=" << fmt15(c.threshold) << "\n";
        if (!c.pass && first_fail == nullptr) first_fail = &c;
    }
    if (first_fail != nullptr) {
        std::cout << "first failing check: " << first_fail->name << "\n";
        return 1;
    }
    std::cout << "all " << checks.size() << " checks passed for k = " << opt.k << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eisenzero: half-integral-weight Eisenstein series on Gamma0(4), their"
                 " trigonometric approximants, and certified zero location"};
    app.require_subcommand(1);

    EvalOptions eval_opt;
    CLI::App* eval = app.add_subcommand("eval", "evaluate one series at one point");
    eval->add_option("--series", eval_opt.series, "series to evaluate")
        ->required()
        ->check(CLI::IsMember({"e0", "einf", "ehalf"}));
    eval->add_option("--z", eval_opt.z_text, "evaluation point, e.g. -0.5+1.0i or 10i")
        ->required();
    eval->add_option("--k", eval_opt.k, "weight numerator, odd and >= 5")->required();
    eval->add_option("--expansion", eval_opt.expansion, "lattice or fourier")
        ->check(CLI::IsMember({"lattice", "fourier"}));
    eval->add_flag("--json", eval_opt.as_json, "emit a JSON record");
    eval->add_flag("--strict", eval_opt.strict, "exit 3 when the truncation is uncertified");
    eval->add_option("--u-max", eval_opt.u_max, "lattice family cutoff override");
    eval->add_option("--tol", eval_opt.tol, "truncation accuracy target override");

    ZerosOptions zeros_opt;
    CLI::App* zeros = app.add_subcommand("zeros", "locate and certify zeroes for one weight");
    zeros->add_option("--k", zeros_opt.k, "weight numerator, odd and >= 5")->required();
    zeros->add_flag("--json", zeros_opt.as_json, "emit the full report as JSON");
    zeros->add_option("--plot-data", zeros_opt.plot_path, "write mapped zeroes as CSV");
    zeros->add_option("--u-max", zeros_opt.u_max, "lattice family cutoff override");
    zeros->add_option("--tol", zeros_opt.tol, "truncation accuracy target override");

    VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand("verify", "run numerical consistency suites");
    verify->add_option("--k", verify_opt.k, "weight numerator, odd and >= 5")->required();
    verify->add_option("--suite", verify_opt.suite, "which suite to run")
        ->check(CLI::IsMember({"relations", "realness", "bounds", "coefficients", "all"}));
    verify->add_option("--u-max", verify_opt.u_max, "lattice family cutoff override");
    verify->add_option("--tol", verify_opt.tol, "truncation accuracy target override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) return run_eval(eval_opt);
        if (zeros->parsed()) return run_zeros(zeros_opt);
        return run_verify(verify_opt);
    } catch (const certification_error& e) {
        std::cerr << "certification failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
