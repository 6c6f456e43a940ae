#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace eisenzero {

// Raised when a unit-modulus normalization is requested for a vanishing
// Gauss sum, e.g. g(1/2) = 0.
struct gauss_zero_error : std::domain_error {
    gauss_zero_error(std::int64_t m, std::int64_t n);
};

// Jacobi symbol (a|n) for odd positive n, extended to all integers a by
// periodicity in a mod n. Returns 0 exactly when gcd(a, n) > 1.
int jacobi(std::int64_t a, std::int64_t n);

// 1 for u = 1 (mod 4), i for u = 3 (mod 4). Requires odd positive u.
std::complex<double> epsilon(std::int64_t u);

// epsilon(u)^k without repeated multiplication; exact eighth roots of unity.
std::complex<double> epsilon_pow(std::int64_t u, int k);

// g(m, n) = sum over a mod n of exp(2 pi i a^2 m / n), by direct summation.
std::complex<double> gauss_sum(std::int64_t m, std::int64_t n);

// G(m, n) = g(m, n) / |g(m, n)|. Throws gauss_zero_error when g vanishes.
std::complex<double> gauss_phase(std::int64_t m, std::int64_t n);

// unit^k for a modulus-1 phase, computed through the argument so the result
// stays exactly on the unit circle.
std::complex<double> unit_phase_pow(std::complex<double> unit, int k);

// exp(i pi k / 4), reduced mod 8 before evaluation.
std::complex<double> eighth_root_power(int k);

int moebius(std::int64_t n);

struct SquarefreeDecomposition {
    std::int64_t original = 1;
    std::int64_t squarefree_part = 1;
    // (p, v) pairs with p^{2v} stripped from the original, p increasing.
    std::vector<std::pair<std::int64_t, int>> prime_square_ladder;
};

SquarefreeDecomposition squarefree_decompose(std::int64_t n);

}  // namespace eisenzero
