#include "eisenzero/domains.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace eisenzero {

namespace {

double dist2(const ComplexPoint& z, double cx, double cy) {
    const double dx = z.x - cx;
    const double dy = z.y - cy;
    return dx * dx + dy * dy;
}

std::complex<double> inverse_i_pow(int k) {
    // i^{-k} for odd k.
    return ((k % 4) + 4) % 4 == 1 ? std::complex<double>{0.0, -1.0} : std::complex<double>{0.0, 1.0};
}

}  // namespace

const char* region_name(Region r) {
    switch (r) {
        case Region::Y: return "Y";
        case Region::P: return "P";
        case Region::O: return "O";
        case Region::G: return "G";
        case Region::B: return "B";
        default: return "N";
    }
}

bool region_contains(Region r, const ComplexPoint& z) {
    constexpr double third = 1.0 / 3.0;
    switch (r) {
        case Region::Y:
            return std::abs(z.x) <= 0.5 && dist2(z, 0.0, 0.0) >= 1.0;
        case Region::P:
            return dist2(z, 0.0, 0.0) < 1.0 && dist2(z, -1.0, 0.0) >= 1.0 && dist2(z, 1.0, 0.0) >= 1.0;
        case Region::O:
            return z.x >= -0.5 && dist2(z, -1.0, 0.0) < 1.0 && dist2(z, -third, 0.0) >= third * third;
        case Region::G:
            return z.x <= 0.5 && dist2(z, third, 0.0) >= third * third && dist2(z, 1.0, 0.0) < 1.0;
        case Region::B:
            return dist2(z, third, 0.0) < third * third && dist2(z, 0.2, 0.0) >= 0.04 &&
                   dist2(z, 2.0 * third, 0.0) >= third * third;
        default:  // N
            return z.x <= 0.5 && dist2(z, 2.0 * third, 0.0) < third * third &&
                   dist2(z, 0.375, 0.0) >= 0.015625;
    }
}

std::optional<Region> classify_region(const ComplexPoint& z) {
    std::optional<Region> found;
    for (const Region r : {Region::Y, Region::P, Region::O, Region::G, Region::B, Region::N}) {
        if (!region_contains(r, z)) continue;
        if (found)
            throw std::logic_error(std::string("region predicates overlap at the tested point: ") +
                                   region_name(*found) + " and " + region_name(r));
        found = r;
    }
    return found;
}

std::complex<double> MoebiusMap::apply(std::complex<double> z) const {
    const std::complex<double> num = static_cast<double>(a) * z + static_cast<double>(b);
    const std::complex<double> den = static_cast<double>(c) * z + static_cast<double>(d);
    return num / den + shift;
}

ComplexPoint MoebiusMap::apply(const ComplexPoint& z) const {
    const std::complex<double> w = apply(z.value());
    return {w.real(), w.imag()};
}

MoebiusMap MoebiusMap::compose(const MoebiusMap& inner) const {
    if (inner.shift != 0.0)
        throw std::invalid_argument("composition expects a shift-free inner map");
    MoebiusMap out;
    out.a = a * inner.a + b * inner.c;
    out.b = a * inner.b + b * inner.d;
    out.c = c * inner.a + d * inner.c;
    out.d = c * inner.b + d * inner.d;
    out.shift = shift;
    return out;
}

MoebiusMap f0_map() {
    return {0, -1, 4, 0, 0.0};
}

MoebiusMap fhalf_map() {
    const MoebiusMap s{0, -1, 1, 0, 0.0};
    const MoebiusMap t{1, 1, 0, 1, 0.0};
    MoebiusMap m = s.compose(t).compose(t).compose(s);
    m.a = -m.a;
    m.b = -m.b;
    m.c = -m.c;
    m.d = -m.d;
    m.shift = 0.5;
    return m;
}

MoebiusMap fhalf_map_inverse() {
    // (w - 1/2)/(2w) written with integer entries as (2w - 1)/(4w).
    return {2, -1, 4, 0, 0.0};
}

ComplexPoint map_to_F0(const ComplexPoint& z) {
    return f0_map().apply(z);
}

ComplexPoint map_from_F0(const ComplexPoint& w) {
    return f0_map().apply(w);
}

ComplexPoint map_to_Fhalf(const ComplexPoint& z) {
    return fhalf_map().apply(z);
}

ComplexPoint map_from_Fhalf(const ComplexPoint& w) {
    return fhalf_map_inverse().apply(w);
}

const char* relation_formula(Relation rel) {
    switch (rel) {
        case Relation::ZeroFromInf: return "E0(-1/(4z)) = (4z)^{k/2} i^{-k} Einf(z)";
        case Relation::HalfFromInf: return "Ehalf(z+1/2) = 2^{k/2} (2z+1)^{-k/2} Einf(z/(2z+1))";
        case Relation::HalfShift: return "Ehalf(z) = i^{-k} Ehalf(z+1)";
        default: return "Ehalf(z) = (2z+1)^{-k/2} E0(z/(2z+1))";
    }
}

double relation_residual(Relation rel, const ComplexPoint& z, const Weight& w,
                         const TruncationPolicy& policy) {
    const std::complex<double> zz = z.value();
    std::complex<double> lhs, rhs;
    switch (rel) {
        case Relation::ZeroFromInf: {
            lhs = eval_E_0_lattice(map_to_F0(z), w, policy).value;
            rhs = half_power(4.0 * zz, w) * inverse_i_pow(w.k) * eval_E_inf(z, w, policy).value;
            break;
        }
        case Relation::HalfFromInf: {
            lhs = eval_E_half_lattice(ComplexPoint(z.x + 0.5, z.y), w, policy).value;
            const std::complex<double> image = zz / (2.0 * zz + 1.0);
            rhs = std::exp2(w.half()) / half_power(2.0 * zz + 1.0, w) *
                  eval_E_inf(ComplexPoint(image.real(), image.imag()), w, policy).value;
            break;
        }
        case Relation::HalfShift: {
            lhs = eval_E_half_lattice(z, w, policy).value;
            rhs = inverse_i_pow(w.k) * eval_E_half_lattice(ComplexPoint(z.x + 1.0, z.y), w, policy).value;
            break;
        }
        default: {
            lhs = eval_E_half_lattice(z, w, policy).value;
            const std::complex<double> image = zz / (2.0 * zz + 1.0);
            rhs = eval_E_0_lattice(ComplexPoint(image.real(), image.imag()), w, policy).value /
                  half_power(2.0 * zz + 1.0, w);
            break;
        }
    }
    const double denom = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    return std::abs(lhs - rhs) / denom;
}

}  // namespace eisenzero
