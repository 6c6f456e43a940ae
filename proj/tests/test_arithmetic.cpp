#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eisenzero/arithmetic.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

using namespace eisenzero;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<int> moebius_sieve(int n) {
    std::vector<int> spf(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 2; i <= n; ++i) {
        if (spf[static_cast<std::size_t>(i)] != 0) continue;
        for (int j = i; j <= n; j += i) {
            if (spf[static_cast<std::size_t>(j)] == 0) spf[static_cast<std::size_t>(j)] = i;
        }
    }
    std::vector<int> mu(static_cast<std::size_t>(n) + 1, 0);
    mu[1] = 1;
    for (int i = 2; i <= n; ++i) {
        const int p = spf[static_cast<std::size_t>(i)];
        const int rest = i / p;
        mu[static_cast<std::size_t>(i)] = rest % p == 0 ? 0 : -mu[static_cast<std::size_t>(rest)];
    }
    return mu;
}

}  // namespace

TEST_CASE("jacobi symbol on a table of known values") {
    struct Row {
        std::int64_t a;
        std::int64_t n;
        int expected;
    };
    const Row rows[] = {
        {0, 1, 1},    {5, 1, 1},     {-7, 1, 1},   {1, 3, 1},    {2, 3, -1},  {2, 5, -1},
        {2, 7, 1},    {2, 17, 1},    {-1, 3, -1},  {-1, 5, 1},   {-1, 7, -1}, {-1, 11, -1},
        {-1, 13, 1},  {3, 5, -1},    {5, 7, -1},   {7, 15, -1},  {5, 21, 1},  {-2, 5, -1},
        {-3, 7, 1},   {4, 15, 1},    {9, 35, 1},   {0, 3, 0},    {3, 9, 0},   {15, 25, 0},
        {14, 21, 0},  {22, 33, 0},   {30, 105, 0}, {2, 9, 1},    {10, 21, -1},
    };
    for (const Row& r : rows) {
        CAPTURE(r.a);
        CAPTURE(r.n);
        CHECK(jacobi(r.a, r.n) == r.expected);
    }
}

TEST_CASE("jacobi symbol is periodic and multiplicative in both arguments") {
    for (std::int64_t n = 1; n <= 99; n += 2) {
        for (std::int64_t a = -50; a <= 50; ++a) {
            CAPTURE(a);
            CAPTURE(n);
            CHECK(jacobi(a, n) == jacobi(a + n, n));
            CHECK(jacobi(a, n) == jacobi(a - 3 * n, n));
            for (std::int64_t b = -6; b <= 6; ++b) {
                CHECK(jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n));
            }
        }
    }
    for (std::int64_t m = 1; m <= 99; m += 2) {
        for (std::int64_t n = 1; n <= 99; n += 2) {
            for (std::int64_t a : {-7, -2, 3, 10, 49}) {
                CHECK(jacobi(a, m * n) == jacobi(a, m) * jacobi(a, n));
            }
        }
    }
}

TEST_CASE("jacobi symbol of a square is the coprimality indicator") {
    for (std::int64_t a = 1; a <= 40; ++a) {
        for (std::int64_t n = 1; n <= 99; n += 2) {
            const int expected = std::gcd(a, n) == 1 ? 1 : 0;
            CHECK(jacobi(a * a, n) == expected);
        }
    }
}

TEST_CASE("epsilon is the fourth-root normalizer of odd residues") {
    CHECK(epsilon(1) == std::complex<double>(1.0, 0.0));
    CHECK(epsilon(3) == std::complex<double>(0.0, 1.0));
    CHECK(epsilon(5) == std::complex<double>(1.0, 0.0));
    CHECK(epsilon(7) == std::complex<double>(0.0, 1.0));
    for (std::int64_t u = 1; u <= 999; u += 2) {
        const std::complex<double> e = epsilon(u);
        const std::complex<double> sq = e * e;
        CHECK(sq.real() == doctest::Approx(jacobi(-1, u)).epsilon(1e-15));
        CHECK(sq.imag() == doctest::Approx(0.0).epsilon(1e-15));
    }
}

TEST_CASE("epsilon powers cycle with period four") {
    for (std::int64_t u = 1; u <= 99; u += 2) {
        for (int k = -9; k <= 9; ++k) {
            std::complex<double> slow{1.0, 0.0};
            const std::complex<double> e = epsilon(u);
            for (int i = 0; i < std::abs(k); ++i) slow *= k >= 0 ? e : 1.0 / e;
            const std::complex<double> fast = epsilon_pow(u, k);
            CHECK(std::abs(fast - slow) < 1e-14);
        }
    }
}

TEST_CASE("quadratic Gauss sums match closed forms") {
    CHECK(std::abs(gauss_sum(1, 1) - std::complex<double>(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(gauss_sum(1, 4) - std::complex<double>(2.0, 2.0)) < 1e-12);
    CHECK(std::abs(gauss_sum(1, 3) - std::complex<double>(0.0, std::sqrt(3.0))) < 1e-12);
    CHECK(std::abs(gauss_sum(1, 5) - std::complex<double>(std::sqrt(5.0), 0.0)) < 1e-12);
    CHECK(std::abs(gauss_sum(1, 2)) < 1e-12);
    CHECK(std::abs(gauss_sum(3, 2)) < 1e-12);
}

TEST_CASE("odd-modulus Gauss sums have modulus sqrt(n) and split by epsilon") {
    for (std::int64_t n = 1; n <= 199; n += 2) {
        for (std::int64_t m : {1, 2, 3, 5, 7, 11}) {
            if (std::gcd(m, n) != 1) continue;
            const std::complex<double> g = gauss_sum(m, n);
            CHECK(std::abs(g) == doctest::Approx(std::sqrt(static_cast<double>(n))).epsilon(1e-10));
            const std::complex<double> expected =
                static_cast<double>(jacobi(m, n)) * epsilon(n) * std::sqrt(static_cast<double>(n));
            CHECK(std::abs(g - expected) < 1e-8 * std::sqrt(static_cast<double>(n)));
        }
    }
}

TEST_CASE("Gauss phase is unit modulus or a reported vanishing") {
    const std::complex<double> p = gauss_phase(1, 4);
    CHECK(std::abs(p - std::polar(1.0, kPi / 4.0)) < 1e-12);
    CHECK(std::abs(std::abs(gauss_phase(3, 8)) - 1.0) < 1e-14);
    CHECK_THROWS_AS(gauss_phase(1, 2), gauss_zero_error);
    CHECK_THROWS_AS(gauss_phase(5, 2), gauss_zero_error);
}

TEST_CASE("unit phase powers stay on the circle") {
    const std::complex<double> u = std::polar(1.0, 0.37);
    for (int k = -15; k <= 15; ++k) {
        const std::complex<double> v = unit_phase_pow(u, k);
        CHECK(std::abs(std::abs(v) - 1.0) < 1e-15);
        CHECK(std::abs(v - std::polar(1.0, 0.37 * k)) < 1e-12);
    }
}

TEST_CASE("eighth roots of unity") {
    CHECK(std::abs(eighth_root_power(0) - std::complex<double>(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(eighth_root_power(8) - std::complex<double>(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(eighth_root_power(4) - std::complex<double>(-1.0, 0.0)) < 1e-15);
    CHECK(std::abs(eighth_root_power(1) - std::polar(1.0, kPi / 4.0)) < 1e-15);
    for (int k = -20; k <= 20; ++k) {
        CHECK(std::abs(eighth_root_power(k) * eighth_root_power(-k) -
                       std::complex<double>(1.0, 0.0)) < 1e-14);
        CHECK(std::abs(eighth_root_power(k) - std::polar(1.0, kPi * k / 4.0)) < 1e-13);
    }
}

TEST_CASE("moebius function on a table and against a sieve") {
    const int expected[] = {1,  -1, -1, 0, -1, 1,  -1, 0, 0, 1,  -1, 0, -1, 1, 1,
                            0,  -1, 0,  -1, 0, 1,  1,  -1, 0, 0, 1,  0,  0, -1, -1};
    for (int n = 1; n <= 30; ++n) {
        CAPTURE(n);
        CHECK(moebius(n) == expected[n - 1]);
    }
    const std::vector<int> sieve = moebius_sieve(10000);
    for (int n = 1; n <= 10000; ++n) {
        CHECK(moebius(n) == sieve[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("moebius sums over divisors collapse to the identity indicator") {
    for (std::int64_t n = 1; n <= 2000; ++n) {
        int sum = 0;
        for (std::int64_t d = 1; d * d <= n; ++d) {
            if (n % d != 0) continue;
            sum += moebius(d);
            if (d != n / d) sum += moebius(n / d);
        }
        CHECK(sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("squarefree decomposition splits off prime squares") {
    {
        const auto d = squarefree_decompose(1);
        CHECK(d.squarefree_part == 1);
        CHECK(d.prime_square_ladder.empty());
    }
    {
        const auto d = squarefree_decompose(12);
        CHECK(d.squarefree_part == 3);
        REQUIRE(d.prime_square_ladder.size() == 1);
        CHECK(d.prime_square_ladder[0] == std::pair<std::int64_t, int>{2, 1});
    }
    {
        const auto d = squarefree_decompose(27);
        CHECK(d.squarefree_part == 3);
        REQUIRE(d.prime_square_ladder.size() == 1);
        CHECK(d.prime_square_ladder[0] == std::pair<std::int64_t, int>{3, 1});
    }
    {
        const auto d = squarefree_decompose(441);
        CHECK(d.squarefree_part == 1);
        REQUIRE(d.prime_square_ladder.size() == 2);
        CHECK(d.prime_square_ladder[0] == std::pair<std::int64_t, int>{3, 1});
        CHECK(d.prime_square_ladder[1] == std::pair<std::int64_t, int>{7, 1});
    }
    {
        const auto d = squarefree_decompose(720);
        CHECK(d.squarefree_part == 5);
        REQUIRE(d.prime_square_ladder.size() == 2);
        CHECK(d.prime_square_ladder[0] == std::pair<std::int64_t, int>{2, 2});
        CHECK(d.prime_square_ladder[1] == std::pair<std::int64_t, int>{3, 1});
    }
}

TEST_CASE("squarefree decomposition recomposes and has squarefree core") {
    for (std::int64_t n = 1; n <= 2000; ++n) {
        const auto d = squarefree_decompose(n);
        CHECK(d.original == n);
        CHECK(moebius(d.squarefree_part) != 0);
        std::int64_t rebuilt = d.squarefree_part;
        for (const auto& [p, v] : d.prime_square_ladder) {
            for (int i = 0; i < 2 * v; ++i) rebuilt *= p;
        }
        CHECK(rebuilt == n);
    }
}
