#include "eisenzero/approx.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eisenzero {

namespace {

constexpr double pi = std::numbers::pi;

}  // namespace

PolarCoordinates line_polar(double y) {
    return {std::hypot(0.5, y), std::atan(2.0 * y)};
}

ApproxWindow approximation_window(const Weight& w) {
    const double k = static_cast<double>(w.k);
    return {0.5, std::sqrt(k / (2.0 * std::log(k)))};
}

double m0(double y, const Weight& w) {
    const double delta = std::atan(2.0 * y);
    return 2.0 * std::cos(static_cast<double>(w.k) * (2.0 * delta - pi) / 4.0);
}

double m_half(double y, const Weight& w) {
    const double theta = std::atan(2.0 * y);
    return 2.0 * std::cos(static_cast<double>(w.k) * theta / 2.0);
}

std::complex<double> m0_direct(double y, const Weight& w) {
    const std::complex<double> z{-0.5, y};
    const double r = std::hypot(0.5, y);
    const double kh = w.half();
    return eighth_root_power(w.k) * std::pow(r, kh) *
           (std::pow(z, -kh) + std::pow(z + 1.0, -kh));
}

std::complex<double> m_half_direct(double y, const Weight& w) {
    const std::complex<double> z{0.5, y};
    const double r = std::hypot(0.5, y);
    const double kh = w.half();
    const std::complex<double> g18 = unit_phase_pow(gauss_phase(1, 8), w.k);
    const std::complex<double> g38 = unit_phase_pow(gauss_phase(3, 8), w.k);
    return eighth_root_power(-w.k) * std::pow(r, kh) *
           (g18 * std::pow(z, -kh) + g38 * std::pow(z - 1.0, -kh));
}

TailBounds tail_bounds(double y, const Weight& w) {
    const ApproxWindow win = approximation_window(w);
    if (y < win.y_min - 1e-12 || y > win.y_max + 1e-12)
        throw std::domain_error("tail bounds requested outside the validity window");
    const double k = static_cast<double>(w.k);
    const double q = 0.25 + y * y;
    const double j1 = 16.0 * q * std::pow(q / (2.0 + q), (k - 4.0) / 4.0);
    const double j2 = 10.0 * std::pow(8.0 / 81.0, k / 4.0) * (3.0 * y / std::sqrt(k));
    return {j1, j2, j1, j2};
}

RemainderMeasurement measured_remainder(LineSeries series, double y, const Weight& w,
                                        const TruncationPolicy& policy) {
    const double scale = std::pow(std::hypot(0.5, y), w.half());
    EvalResult rest;
    std::complex<double> rot{1.0, 0.0};
    if (series == LineSeries::E0) {
        rest = eval_E_0_lattice_rest(ComplexPoint(-0.5, y), w, policy);
        rot = eighth_root_power(w.k);
    } else {
        rest = eval_E_half_lattice_rest(ComplexPoint(0.5, y), w, policy);
    }
    const std::complex<double> rem = rot * rest.value * scale;
    RemainderMeasurement out;
    out.value = rem.real();
    out.imag_rel = std::abs(rem.imag()) / std::max(std::abs(rem), 1e-300);
    out.envelope = std::abs(rem) + rest.tail_estimate * scale;
    out.certified = rest.certified;
    return out;
}

}  // namespace eisenzero
