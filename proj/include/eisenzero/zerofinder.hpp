#pragma once

#include "eisenzero/approx.hpp"
#include "eisenzero/domains.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace eisenzero {

// A certification invariant failed: an endpoint sign did not survive direct
// evaluation, a bisection crossed an inconsistent sign, or the final count
// exceeded the valence budget.
struct certification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ZeroLocus { E0Line, EhalfLine, PAxis };

const char* locus_name(ZeroLocus locus);

struct SamplePoint {
    int n = 0;                 // index of the approximant extremum, -1 for window-edge anchors
    double angle = 0.0;        // atan(2y)
    double y = 0.0;            // tan(angle) / 2
    int predicted_sign = 0;    // sign of the approximant, 0 until certified for anchors
    bool is_window_edge = false;
};

// Extrema of the relevant approximant whose angle falls inside the validity
// window, ascending in n (hence in y).
std::vector<SamplePoint> sample_points(const Weight& w, LineSeries series);

struct ZeroCertificate {
    ZeroLocus locus = ZeroLocus::E0Line;
    double y_lo = 0.0;
    double y_hi = 0.0;
    int sign_lo = 0;
    int sign_hi = 0;
    double margin_lo = 0.0;  // |approximant| minus the remainder bound at y_lo
    double margin_hi = 0.0;
    double refined_y = 0.0;  // 0 until refine_zero has run
    double residual = 0.0;   // |scaled series| at refined_y
};

struct VoidedPoint {
    LineSeries series = LineSeries::E0;
    double y = 0.0;
    double approximant = 0.0;
    double remainder_bound = 0.0;  // best available bound; at least |approximant|
};

struct LineScan {
    std::vector<SamplePoint> points;       // samples plus window-edge anchors
    std::vector<ZeroCertificate> brackets; // unrefined, ascending y
    std::vector<VoidedPoint> voided;       // points whose sign could not be certified
};

// Certify the sign of the scaled series at every sample point and anchor,
// then pair adjacent certified points of opposite sign into brackets.
LineScan bracket_zeros(const Weight& w, LineSeries series, const TruncationPolicy& policy = {});

// Scaled real restriction whose sign the certificates track.
double line_value(ZeroLocus locus, double y, const Weight& w, const TruncationPolicy& policy = {});

// Bisect the certified bracket down to the tolerance; records refined_y and
// the residual. Throws certification_error on any sign anomaly.
ZeroCertificate refine_zero(ZeroCertificate cert, const Weight& w,
                            const TruncationPolicy& policy = {}, double tol = 1e-10);

// Plain bisection on a sign change of f over [lo, hi].
double bisect(const std::function<double(double)>& f, double lo, double hi, double tol);

struct AxisScan {
    std::optional<ZeroCertificate> zero;  // refined if found
    double min_value = 0.0;               // smallest scanned magnitude of the scaled series
    double min_value_y = 0.0;
    double max_imag_rel = 0.0;            // realness diagnostic across the scan
    int points_scanned = 0;
};

// Scan the scaled Fourier restriction along the imaginary axis over
// y in [1, 12] with step 0.05 and bisect any sign change found.
AxisScan find_P_zero(const Weight& w, const TruncationPolicy& policy = {});

struct MappedZero {
    ZeroLocus locus = ZeroLocus::E0Line;
    double y = 0.0;       // coordinate on its locus
    double finf_x = 0.0;  // image in the cusp-infinity fundamental domain
    double finf_y = 0.0;
    double circle_deviation = 0.0;  // | |z - 1/4| - 1/4 | of the image
    double residual = 0.0;
};

struct ZeroReport {
    int k = 0;
    std::vector<ZeroCertificate> certificates;  // ordered by (locus, y)
    std::vector<MappedZero> zeros;              // deduplicated images
    std::vector<VoidedPoint> voided;
    bool p_zero_found = false;
    double axis_min_value = 0.0;
    double axis_min_y = 0.0;
    double circle_max_deviation = 0.0;  // over line zeroes only
    int count_e0 = 0;
    int count_ehalf = 0;
    int count_axis = 0;
    int count_found = 0;
    int valence_budget = 0;
    int theorem_floor = 0;
};

int valence_budget(const Weight& w);  // floor(k/4)

// max(0, ceil(k/8) - ceil(sqrt(k log k))): the guaranteed per-line count at
// unit constant; small weights clamp to zero.
int theorem_floor(const Weight& w);

// Full pipeline: both line scans, refinement, the axis scan, mapping to the
// cusp-infinity domain, deduplication, and count audits.
ZeroReport compile_report(const Weight& w, const TruncationPolicy& policy = {});

}  // namespace eisenzero
