#include "eisenzero/arithmetic.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace eisenzero {

namespace {

constexpr std::int64_t range_limit = std::int64_t{1} << 31;

void check_range(std::int64_t v, const char* what) {
    if (v > range_limit || v < -range_limit)
        throw std::invalid_argument(std::string(what) + " exceeds the supported 2^31 range");
}

}  // namespace

gauss_zero_error::gauss_zero_error(std::int64_t m, std::int64_t n)
    : std::domain_error("gauss sum g(" + std::to_string(m) + "/" + std::to_string(n) +
                        ") vanishes; no unit phase") {}

int jacobi(std::int64_t a, std::int64_t n) {
    check_range(a, "jacobi numerator");
    check_range(n, "jacobi modulus");
    if (n <= 0 || n % 2 == 0)
        throw std::invalid_argument("jacobi modulus must be odd and positive");
    a %= n;
    if (a < 0) a += n;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            std::int64_t r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

std::complex<double> epsilon(std::int64_t u) {
    check_range(u, "epsilon argument");
    if (u <= 0 || u % 2 == 0)
        throw std::invalid_argument("epsilon argument must be odd and positive");
    return u % 4 == 1 ? std::complex<double>{1.0, 0.0} : std::complex<double>{0.0, 1.0};
}

std::complex<double> epsilon_pow(std::int64_t u, int k) {
    check_range(u, "epsilon argument");
    if (u <= 0 || u % 2 == 0)
        throw std::invalid_argument("epsilon argument must be odd and positive");
    if (u % 4 == 1) return {1.0, 0.0};
    switch (((k % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

std::complex<double> gauss_sum(std::int64_t m, std::int64_t n) {
    check_range(m, "gauss sum numerator");
    check_range(n, "gauss sum modulus");
    if (n < 1) throw std::invalid_argument("gauss sum modulus must be positive");
    std::int64_t mm = m % n;
    if (mm < 0) mm += n;
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    std::complex<double> s{0.0, 0.0};
    for (std::int64_t a = 0; a < n; ++a) {
        auto sq = static_cast<std::int64_t>(static_cast<__int128>(a) * a % n);
        auto r = static_cast<std::int64_t>(static_cast<__int128>(sq) * mm % n);
        s += std::polar(1.0, step * static_cast<double>(r));
    }
    return s;
}

std::complex<double> gauss_phase(std::int64_t m, std::int64_t n) {
    const std::complex<double> g = gauss_sum(m, n);
    const double mag = std::abs(g);
    if (mag <= 1e-9 * std::max(1.0, std::sqrt(static_cast<double>(n))))
        throw gauss_zero_error(m, n);
    return g / mag;
}

std::complex<double> unit_phase_pow(std::complex<double> unit, int k) {
    return std::polar(1.0, static_cast<double>(k) * std::atan2(unit.imag(), unit.real()));
}

std::complex<double> eighth_root_power(int k) {
    const int r = ((k % 8) + 8) % 8;
    return std::polar(1.0, std::numbers::pi * static_cast<double>(r) / 4.0);
}

int moebius(std::int64_t n) {
    check_range(n, "moebius argument");
    if (n < 1) throw std::invalid_argument("moebius argument must be positive");
    int result = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

SquarefreeDecomposition squarefree_decompose(std::int64_t n) {
    check_range(n, "squarefree decomposition argument");
    if (n < 1) throw std::invalid_argument("squarefree decomposition argument must be positive");
    SquarefreeDecomposition d;
    d.original = n;
    std::int64_t rest = n;
    for (std::int64_t p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        int e = 0;
        std::int64_t t = rest;
        while (t % p == 0) {
            t /= p;
            ++e;
        }
        const int v = e / 2;
        if (v > 0) {
            d.prime_square_ladder.emplace_back(p, v);
            for (int i = 0; i < 2 * v; ++i) rest /= p;
        }
    }
    d.squarefree_part = rest;
    return d;
}

}  // namespace eisenzero
