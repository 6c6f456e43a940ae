#include "eisenzero/zerofinder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

namespace eisenzero {

namespace {

constexpr double kPi = 3.14159265358979323846;

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// Scaled real restriction along the imaginary axis. The q-expansion cutoff
// has to outlast the e^{2 pi y} rescaling, so it grows linearly with the
// weight regardless of the caller's policy.
double axis_value(double y, const Weight& w, const TruncationPolicy& policy, double* imag_rel) {
    TruncationPolicy axis = policy;
    int needed = static_cast<int>(std::ceil((w.half() - 1.0) / kPi)) + 20;
    axis.fourier_l_max = std::max(policy.fourier_l_max, needed);
    const EvalResult res = eval_E_0_fourier(ComplexPoint(0.0, y), w, axis);
    const std::complex<double> g = eighth_root_power(w.k) * res.value;
    if (imag_rel != nullptr) {
        *imag_rel = std::abs(g.imag()) / std::max(std::abs(g), 1e-300);
    }
    return g.real() * std::exp(2.0 * kPi * y - w.half() * std::log(2.0));
}

double approximant_value(LineSeries series, double y, const Weight& w) {
    return series == LineSeries::E0 ? m0(y, w) : m_half(y, w);
}

double closed_remainder_bound(LineSeries series, double y, const Weight& w) {
    const TailBounds tb = tail_bounds(y, w);
    return series == LineSeries::E0 ? tb.j1 + tb.j2 : tb.n1 + tb.n2;
}

std::string describe_point(ZeroLocus locus, double y) {
    std::ostringstream msg;
    msg.precision(17);
    msg << locus_name(locus) << " at y = " << y;
    return msg.str();
}

}  // namespace

const char* locus_name(ZeroLocus locus) {
    switch (locus) {
        case ZeroLocus::E0Line: return "E0_line";
        case ZeroLocus::EhalfLine: return "Ehalf_line";
        case ZeroLocus::PAxis: return "P_axis";
    }
    return "unknown";
}

std::vector<SamplePoint> sample_points(const Weight& w, LineSeries series) {
    const ApproxWindow win = approximation_window(w);
    const double angle_lo = std::atan(2.0 * win.y_min);
    const double angle_hi = std::atan(2.0 * win.y_max);
    const double k = static_cast<double>(w.k);

    // Extrema of 2 cos(k angle / 2 + phase) sit at angle = 2 pi n / k plus a
    // series-dependent offset; the sign at the n-th extremum alternates from
    // a base sign fixed by k mod 8.
    double offset = 0.0;
    int base_sign = 1;
    if (series == LineSeries::Ehalf) {
        offset = 0.0;
        base_sign = 1;
    } else if (w.mod4() == 1) {
        offset = kPi / (2.0 * k);
        base_sign = (w.mod8() == 1) ? 1 : -1;
    } else {
        offset = -kPi / (2.0 * k);
        base_sign = (w.mod8() == 7) ? 1 : -1;
    }

    std::vector<SamplePoint> out;
    const int n_first =
        static_cast<int>(std::ceil((angle_lo - offset) * k / (2.0 * kPi) - 1e-12));
    for (int n = n_first;; ++n) {
        const double angle = 2.0 * kPi * static_cast<double>(n) / k + offset;
        if (angle < angle_lo - 1e-12) continue;
        if (angle > angle_hi + 1e-12) break;
        SamplePoint p;
        p.n = n;
        p.angle = angle;
        p.y = 0.5 * std::tan(angle);
        p.predicted_sign = (n % 2 == 0) ? base_sign : -base_sign;
        p.is_window_edge = false;
        out.push_back(p);
    }
    return out;
}

LineScan bracket_zeros(const Weight& w, LineSeries series, const TruncationPolicy& policy) {
    const ApproxWindow win = approximation_window(w);
    const ZeroLocus locus = series == LineSeries::E0 ? ZeroLocus::E0Line : ZeroLocus::EhalfLine;

    LineScan scan;
    scan.points = sample_points(w, series);

    const auto near_sample = [&scan](double y) {
        for (const SamplePoint& p : scan.points) {
            if (std::abs(p.y - y) < 1e-9) return true;
        }
        return false;
    };
    for (const double edge : {win.y_min, win.y_max}) {
        if (near_sample(edge)) continue;
        SamplePoint p;
        p.n = -1;
        p.angle = std::atan(2.0 * edge);
        p.y = edge;
        p.predicted_sign = 0;
        p.is_window_edge = true;
        scan.points.push_back(p);
    }
    std::sort(scan.points.begin(), scan.points.end(),
              [](const SamplePoint& a, const SamplePoint& b) { return a.y < b.y; });

    // Certified sign and margin per point; sign 0 marks a voided point.
    std::vector<std::pair<int, double>> status;
    status.reserve(scan.points.size());
    for (SamplePoint& p : scan.points) {
        const double m = approximant_value(series, p.y, w);
        // The measured envelope carries the evaluator's dropped-terms bound,
        // so it stays a valid remainder bound even when it missed the strict
        // accuracy target; the closed form covers it when the measurement is
        // too loose.
        const RemainderMeasurement rem = measured_remainder(series, p.y, w, policy);
        const double bound = std::min(closed_remainder_bound(series, p.y, w), rem.envelope);
        const double margin = std::abs(m) - bound;
        if (!(margin > 0.0)) {
            scan.voided.push_back({series, p.y, m, bound});
            status.emplace_back(0, margin);
            continue;
        }
        const int sign = sign_of(m);
        if (rem.envelope < std::abs(m) && sign_of(m + rem.value) != sign) {
            throw certification_error("remainder measurement contradicts the certified sign at " +
                                      describe_point(locus, p.y));
        }
        if (p.is_window_edge) {
            p.predicted_sign = sign;
        } else if (sign != p.predicted_sign) {
            throw certification_error("approximant sign disagrees with its extremum parity at " +
                                      describe_point(locus, p.y));
        }
        status.emplace_back(sign, margin);
    }

    int prev = -1;
    for (std::size_t i = 0; i < scan.points.size(); ++i) {
        if (status[i].first == 0) continue;
        if (prev >= 0 && status[static_cast<std::size_t>(prev)].first != status[i].first) {
            ZeroCertificate cert;
            cert.locus = locus;
            cert.y_lo = scan.points[static_cast<std::size_t>(prev)].y;
            cert.y_hi = scan.points[i].y;
            cert.sign_lo = status[static_cast<std::size_t>(prev)].first;
            cert.sign_hi = status[i].first;
            cert.margin_lo = status[static_cast<std::size_t>(prev)].second;
            cert.margin_hi = status[i].second;
            scan.brackets.push_back(cert);
        }
        prev = static_cast<int>(i);
    }
    return scan;
}

double line_value(ZeroLocus locus, double y, const Weight& w, const TruncationPolicy& policy) {
    switch (locus) {
        case ZeroLocus::E0Line: {
            const EvalResult res = eval_E_0_lattice(ComplexPoint(-0.5, y), w, policy);
            const double scale = std::pow(line_polar(y).r, w.half());
            return (eighth_root_power(w.k) * res.value).real() * scale;
        }
        case ZeroLocus::EhalfLine: {
            const EvalResult res = eval_E_half_lattice(ComplexPoint(0.5, y), w, policy);
            const double scale = std::pow(line_polar(y).r, w.half());
            return res.value.real() * scale;
        }
        case ZeroLocus::PAxis:
            return axis_value(y, w, policy, nullptr);
    }
    throw std::logic_error("line_value: unhandled locus");
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double tol) {
    if (!(lo < hi)) throw std::invalid_argument("bisect: interval is empty");
    if (!(tol > 0.0)) throw std::invalid_argument("bisect: tolerance must be positive");
    double f_lo = f(lo);
    const double f_hi = f(hi);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if (sign_of(f_lo) == sign_of(f_hi)) {
        throw std::invalid_argument("bisect: endpoints carry the same sign");
    }
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = f(mid);
        if (f_mid == 0.0) return mid;
        if (sign_of(f_mid) == sign_of(f_lo)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

ZeroCertificate refine_zero(ZeroCertificate cert, const Weight& w,
                            const TruncationPolicy& policy, double tol) {
    const auto f = [&](double y) { return line_value(cert.locus, y, w, policy); };
    const double f_lo = f(cert.y_lo);
    const double f_hi = f(cert.y_hi);
    if (sign_of(f_lo) != cert.sign_lo || sign_of(f_hi) != cert.sign_hi) {
        throw certification_error("bracket endpoint sign flipped under direct evaluation for " +
                                  describe_point(cert.locus, cert.y_lo));
    }
    cert.refined_y = bisect(f, cert.y_lo, cert.y_hi, tol);
    cert.residual = std::abs(f(cert.refined_y));
    return cert;
}

AxisScan find_P_zero(const Weight& w, const TruncationPolicy& policy) {
    AxisScan scan;
    scan.min_value = std::numeric_limits<double>::infinity();
    scan.min_value_y = 1.0;

    double prev_y = 0.0;
    double prev_v = 0.0;
    for (int i = 0; i <= 220; ++i) {
        const double y = 1.0 + 0.05 * static_cast<double>(i);
        double imag_rel = 0.0;
        const double v = axis_value(y, w, policy, &imag_rel);
        scan.max_imag_rel = std::max(scan.max_imag_rel, imag_rel);
        ++scan.points_scanned;
        const double mag = std::abs(v);
        if (mag < scan.min_value) {
            scan.min_value = mag;
            scan.min_value_y = y;
        }
        if (i > 0 && !scan.zero && sign_of(prev_v) != 0 && sign_of(v) != 0 &&
            sign_of(prev_v) != sign_of(v)) {
            ZeroCertificate cert;
            cert.locus = ZeroLocus::PAxis;
            cert.y_lo = prev_y;
            cert.y_hi = y;
            cert.sign_lo = sign_of(prev_v);
            cert.sign_hi = sign_of(v);
            cert.margin_lo = std::abs(prev_v);
            cert.margin_hi = mag;
            scan.zero = refine_zero(cert, w, policy);
        }
        prev_y = y;
        prev_v = v;
    }
    return scan;
}

int valence_budget(const Weight& w) { return w.k / 4; }

int theorem_floor(const Weight& w) {
    const double k = static_cast<double>(w.k);
    const double raw = std::ceil(k / 8.0) - std::ceil(std::sqrt(k * std::log(k)));
    return raw > 0.0 ? static_cast<int>(raw) : 0;
}

ZeroReport compile_report(const Weight& w, const TruncationPolicy& policy) {
    ZeroReport report;
    report.k = w.k;
    report.valence_budget = valence_budget(w);
    report.theorem_floor = theorem_floor(w);

    const LineScan scan0 = bracket_zeros(w, LineSeries::E0, policy);
    const LineScan scanh = bracket_zeros(w, LineSeries::Ehalf, policy);
    report.voided = scan0.voided;
    report.voided.insert(report.voided.end(), scanh.voided.begin(), scanh.voided.end());

    for (const ZeroCertificate& cert : scan0.brackets) {
        report.certificates.push_back(refine_zero(cert, w, policy));
    }
    for (const ZeroCertificate& cert : scanh.brackets) {
        report.certificates.push_back(refine_zero(cert, w, policy));
    }

    const AxisScan axis = find_P_zero(w, policy);
    report.p_zero_found = axis.zero.has_value();
    report.axis_min_value = axis.min_value;
    report.axis_min_y = axis.min_value_y;
    if (axis.zero) report.certificates.push_back(*axis.zero);

    for (const ZeroCertificate& cert : report.certificates) {
        ComplexPoint img(0.0, 1.0);
        switch (cert.locus) {
            case ZeroLocus::E0Line:
                img = map_to_F0(ComplexPoint(-0.5, cert.refined_y));
                break;
            case ZeroLocus::EhalfLine:
                img = map_from_Fhalf(ComplexPoint(0.5, cert.refined_y));
                break;
            case ZeroLocus::PAxis:
                img = map_to_F0(ComplexPoint(0.0, cert.refined_y));
                break;
        }
        bool duplicate = false;
        for (const MappedZero& seen : report.zeros) {
            if (std::hypot(seen.finf_x - img.x, seen.finf_y - img.y) < 1e-8) {
                duplicate = true;
                break;
            }
        }
        if (duplicate) continue;

        MappedZero mz;
        mz.locus = cert.locus;
        mz.y = cert.refined_y;
        mz.finf_x = img.x;
        mz.finf_y = img.y;
        mz.circle_deviation = std::abs(std::hypot(img.x - 0.25, img.y) - 0.25);
        mz.residual = cert.residual;
        report.zeros.push_back(mz);

        switch (cert.locus) {
            case ZeroLocus::E0Line:
                ++report.count_e0;
                report.circle_max_deviation =
                    std::max(report.circle_max_deviation, mz.circle_deviation);
                break;
            case ZeroLocus::EhalfLine:
                ++report.count_ehalf;
                report.circle_max_deviation =
                    std::max(report.circle_max_deviation, mz.circle_deviation);
                break;
            case ZeroLocus::PAxis:
                ++report.count_axis;
                break;
        }
    }
    report.count_found = report.count_e0 + report.count_ehalf + report.count_axis;

    if (report.count_found > report.valence_budget) {
        std::ostringstream msg;
        msg << "found " << report.count_found << " zeroes for k = " << w.k
            << " but the valence bound admits at most " << report.valence_budget;
        throw certification_error(msg.str());
    }
    return report;
}

}  // namespace eisenzero
