#pragma once

#include "eisenzero/arithmetic.hpp"

#include <complex>
#include <cstdint>

namespace eisenzero {

// Half-integral weight k/2 carried by an odd integer k >= 5.
struct Weight {
    int k;
    explicit Weight(int k_in);
    double half() const { return 0.5 * static_cast<double>(k); }
    int mod4() const { return k % 4; }
    int mod8() const { return k % 8; }
};

// Point of the open upper half-plane.
struct ComplexPoint {
    double x;
    double y;
    ComplexPoint(double x_in, double y_in);
    std::complex<double> value() const { return {x, y}; }
};

// Cutoffs for the lattice and Fourier evaluators. A zero lattice_v_max or
// fourier_l_max is resolved adaptively from target_tail at evaluation time;
// a positive lattice_v_max is the literal symmetric window |v| <= v_max.
struct TruncationPolicy {
    int lattice_u_max = 50;
    int lattice_v_max = 0;
    int fourier_l_max = 0;
    std::int64_t coeff_n0_max = 100000;
    double target_tail = 1e-12;
};

struct EvalResult {
    std::complex<double> value;
    double tail_estimate = 0.0;   // upper bound on the total modulus of dropped terms
    std::int64_t terms_used = 0;
    bool certified = false;       // tail_estimate <= target_tail * (leading term scale)
};

struct FourierCoefficient {
    std::int64_t ell = 0;
    std::complex<double> value;
    int lambda = 0;       // (k - 1) / 2
    double chi_at_p = 0;  // character value of the last coprime ladder step, 0 if none applied
    double tail = 0.0;    // bound on the dropped part of the squarefree stage, scaled like value
};

// w^{k/2} with the principal branch of the logarithm.
std::complex<double> half_power(std::complex<double> w, double half_exponent);
std::complex<double> half_power(std::complex<double> w, const Weight& w8);

EvalResult eval_E_inf(const ComplexPoint& z, const Weight& w, const TruncationPolicy& policy = {});
EvalResult eval_E_0_lattice(const ComplexPoint& z, const Weight& w, const TruncationPolicy& policy = {});
EvalResult eval_E_half_lattice(const ComplexPoint& z, const Weight& w, const TruncationPolicy& policy = {});

// Lattice sums with the two dominant terms removed: u = 1, v in {0, 1} for
// E_0 and d = 1, c in {0, -1} for E_half. Used to measure remainders without
// cancellation against the leading pair.
EvalResult eval_E_0_lattice_rest(const ComplexPoint& z, const Weight& w, const TruncationPolicy& policy = {});
EvalResult eval_E_half_lattice_rest(const ComplexPoint& z, const Weight& w, const TruncationPolicy& policy = {});

FourierCoefficient fourier_b(std::int64_t ell, const Weight& w, const TruncationPolicy& policy = {});

// Direct double sum over odd moduli n <= n_max; slow oracle for fourier_b.
std::complex<double> fourier_b_direct(std::int64_t ell, const Weight& w, std::int64_t n_max = 1001);

EvalResult eval_E_0_fourier(const ComplexPoint& z, const Weight& w, const TruncationPolicy& policy = {});

// Number of q-expansion terms eval_E_0_fourier keeps at height y when the
// policy does not pin fourier_l_max; sized so the dropped part falls below
// target_tail relative to the 2^{k/2} prefactor.
int fourier_default_l_max(const Weight& w, double y, double target_tail = 1e-12);

namespace ref {

// Serial reference evaluators with the same contracts as the main ones.
EvalResult eval_E_inf(const ComplexPoint& z, const Weight& w, const TruncationPolicy& policy = {});
EvalResult eval_E_0_lattice(const ComplexPoint& z, const Weight& w, const TruncationPolicy& policy = {});
EvalResult eval_E_half_lattice(const ComplexPoint& z, const Weight& w, const TruncationPolicy& policy = {});

}  // namespace ref

}  // namespace eisenzero
