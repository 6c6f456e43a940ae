#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eisenzero/approx.hpp"

#include <cmath>
#include <complex>

using namespace eisenzero;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("polar line coordinates") {
    const PolarCoordinates p = line_polar(0.5);
    CHECK(p.r == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(p.angle == doctest::Approx(kPi / 4.0).epsilon(1e-15));
    const PolarCoordinates q = line_polar(1.2);
    CHECK(q.r == doctest::Approx(std::hypot(0.5, 1.2)).epsilon(1e-15));
    CHECK(std::tan(q.angle) == doctest::Approx(2.4).epsilon(1e-14));
}

TEST_CASE("validity window endpoints") {
    const ApproxWindow w15 = approximation_window(Weight(15));
    CHECK(w15.y_min == 0.5);
    CHECK(w15.y_max == doctest::Approx(1.66418757897552).epsilon(1e-13));
    const ApproxWindow w101 = approximation_window(Weight(101));
    CHECK(w101.y_min == 0.5);
    CHECK(w101.y_max == doctest::Approx(3.30791366263455).epsilon(1e-13));
    CHECK(w101.y_max == doctest::Approx(std::sqrt(101.0 / (2.0 * std::log(101.0)))).epsilon(1e-15));
}

TEST_CASE("closed approximant forms at frozen points") {
    CHECK(m0(0.5, Weight(15)) == doctest::Approx(1.84775906502257).epsilon(1e-13));
    CHECK(m0(0.5, Weight(15)) == doctest::Approx(2.0 * std::cos(kPi / 8.0)).epsilon(1e-15));
    CHECK(m0(0.5, Weight(5)) == doctest::Approx(-0.765366864730179).epsilon(1e-13));
    const double ytop = approximation_window(Weight(15)).y_max;
    CHECK(m_half(ytop, Weight(15)) == doctest::Approx(-1.97211125496241).epsilon(1e-12));
    CHECK(m0(ytop, Weight(15)) == doctest::Approx(-1.15914541601561).epsilon(1e-12));
}

TEST_CASE("closed forms match the two-term lattice assembly") {
    for (const int k : {5, 15, 101, 103}) {
        const Weight w(k);
        const ApproxWindow win = approximation_window(w);
        for (int i = 0; i <= 12; ++i) {
            const double y = win.y_min + (win.y_max - win.y_min) * i / 12.0;
            CAPTURE(k);
            CAPTURE(y);
            const std::complex<double> d0 = m0_direct(y, w);
            CHECK(std::abs(d0.real() - m0(y, w)) < 1e-12);
            CHECK(std::abs(d0.imag()) < 1e-12);
            const std::complex<double> dh = m_half_direct(y, w);
            CHECK(std::abs(dh.real() - m_half(y, w)) < 1e-12);
            CHECK(std::abs(dh.imag()) < 1e-12);
        }
    }
}

TEST_CASE("the half-line approximant takes extreme values on its sample grid") {
    const Weight w(101);
    for (int n = 13; n <= 22; ++n) {
        const double theta = 2.0 * kPi * n / 101.0;
        const double y = 0.5 * std::tan(theta);
        const double expected = n % 2 == 0 ? 2.0 : -2.0;
        CHECK(m_half(y, w) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("tail bounds at frozen points and window enforcement") {
    const Weight w15(15);
    {
        const TailBounds tb = tail_bounds(0.5, w15);
        CHECK(tb.j1 == doctest::Approx(0.0957023219981581).epsilon(1e-12));
        CHECK(tb.j2 == doctest::Approx(0.000657376628900756).epsilon(1e-12));
        CHECK(tb.n1 == tb.j1);
        CHECK(tb.n2 == tb.j2);
    }
    {
        const TailBounds tb = tail_bounds(1.12301838695211, w15);
        CHECK(tb.j1 == doctest::Approx(2.37986628900441).epsilon(1e-12));
        CHECK(tb.j2 == doctest::Approx(0.00147649208281628).epsilon(1e-12));
    }
    {
        const TailBounds tb = tail_bounds(2.0, Weight(101));
        CHECK(tb.j1 == doctest::Approx(0.00589997329404051).epsilon(1e-10));
        CHECK(tb.j2 < 1e-24);
        CHECK(tb.j2 > 0.0);
    }
    CHECK_THROWS_AS(tail_bounds(0.4, w15), std::domain_error);
    CHECK_THROWS_AS(tail_bounds(1.7, w15), std::domain_error);
    CHECK_NOTHROW(tail_bounds(0.5 - 1e-13, w15));
    CHECK_NOTHROW(tail_bounds(approximation_window(w15).y_max + 1e-13, w15));
}

TEST_CASE("measured remainders reproduce frozen values at k = 101") {
    const Weight w(101);
    const RemainderMeasurement r0 = measured_remainder(LineSeries::E0, 2.0, w);
    CHECK(r0.value == doctest::Approx(5.552508013106916e-05).epsilon(1e-6));
    CHECK(r0.imag_rel < 1e-9);
    CHECK(r0.certified);
    CHECK(r0.envelope >= std::abs(r0.value));
    const RemainderMeasurement rh = measured_remainder(LineSeries::Ehalf, 2.0, w);
    CHECK(rh.value == doctest::Approx(-3.436108937604487e-05).epsilon(1e-6));
    CHECK(rh.imag_rel < 1e-9);
    CHECK(rh.certified);
    CHECK(rh.envelope >= std::abs(rh.value));
}

TEST_CASE("measured remainders stay below the closed bounds across the window") {
    const Weight w(101);
    const ApproxWindow win = approximation_window(w);
    for (int i = 0; i <= 10; ++i) {
        const double y = win.y_min + (win.y_max - win.y_min) * i / 10.0;
        const TailBounds tb = tail_bounds(y, w);
        CAPTURE(y);
        const RemainderMeasurement r0 = measured_remainder(LineSeries::E0, y, w);
        CHECK(r0.envelope <= tb.j1 + tb.j2);
        const RemainderMeasurement rh = measured_remainder(LineSeries::Ehalf, y, w);
        CHECK(rh.envelope <= tb.n1 + tb.n2);
    }
}
