#pragma once

#include "eisenzero/series.hpp"

namespace eisenzero {

// Polar data of z = +-1/2 + i y: the common modulus of the two dominant
// denominators and the angle with tan(angle) = 2y.
struct PolarCoordinates {
    double r;
    double angle;
};

PolarCoordinates line_polar(double y);

// Validity window [1/2, sqrt(k / (2 log k))] of the approximant bounds.
struct ApproxWindow {
    double y_min;
    double y_max;
};

ApproxWindow approximation_window(const Weight& w);

// Closed trigonometric forms of the scaled two-term approximants.
double m0(double y, const Weight& w);      // 2 cos(k (2 atan(2y) - pi) / 4)
double m_half(double y, const Weight& w);  // 2 cos(k atan(2y) / 2)

// The same approximants assembled from the two dominant lattice terms with
// their actual coefficient phases; agreement with the closed forms is the
// correctness check of the phase bookkeeping.
std::complex<double> m0_direct(double y, const Weight& w);
std::complex<double> m_half_direct(double y, const Weight& w);

// Closed-form remainder bounds: j1/j2 cover the E_0 line (same-family and
// higher-family parts), n1/n2 the E_half line. Valid only inside the window.
struct TailBounds {
    double j1;
    double j2;
    double n1;
    double n2;
};

TailBounds tail_bounds(double y, const Weight& w);

enum class LineSeries { E0, Ehalf };

struct RemainderMeasurement {
    double value;     // real part of the scaled remainder
    double imag_rel;  // |imaginary part| relative to the remainder magnitude
    double envelope;  // |remainder| plus the evaluator tail bound, both scaled
    bool certified;   // the underlying truncated sum met its tail target
};

// Scaled series minus its two dominant terms on the relevant vertical line,
// summed directly with the dominant pair excluded so no cancellation noise
// enters the measurement.
RemainderMeasurement measured_remainder(LineSeries series, double y, const Weight& w,
                                        const TruncationPolicy& policy = {});

}  // namespace eisenzero
