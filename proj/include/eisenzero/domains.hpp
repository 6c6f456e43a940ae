#pragma once

#include "eisenzero/series.hpp"

#include <optional>

namespace eisenzero {

// The six pieces covering the fundamental domain attached to the cusp at
// infinity; Y is the classical keyhole piece, the others are disk slivers.
enum class Region { Y, P, O, G, B, N };

const char* region_name(Region r);

bool region_contains(Region r, const ComplexPoint& z);

// The unique piece containing z, or nothing when z lies outside all six.
// The pieces are pairwise disjoint; a double match signals broken predicates.
std::optional<Region> classify_region(const ComplexPoint& z);

// Fractional linear map z -> (a z + b) / (c z + d) followed by a real shift.
struct MoebiusMap {
    std::int64_t a = 1, b = 0, c = 0, d = 1;
    double shift = 0.0;

    std::complex<double> apply(std::complex<double> z) const;
    ComplexPoint apply(const ComplexPoint& z) const;

    // this after inner; the inner map must be shift-free.
    MoebiusMap compose(const MoebiusMap& inner) const;
};

// z -> -1/(4z); self-inverse; carries the cusp-0 coordinate line x = -1/2
// onto the circle |z - 1/4| = 1/4.
MoebiusMap f0_map();

// z -> z/(1 - 2z) + 1/2, assembled from S and T generators with a global
// sign; carries the cusp-1/2 coordinate line x = 1/2 onto the same circle.
MoebiusMap fhalf_map();

// w -> (w - 1/2)/(2w), inverse of fhalf_map.
MoebiusMap fhalf_map_inverse();

ComplexPoint map_to_F0(const ComplexPoint& z);
ComplexPoint map_from_F0(const ComplexPoint& w);
ComplexPoint map_to_Fhalf(const ComplexPoint& z);
ComplexPoint map_from_Fhalf(const ComplexPoint& w);

// The four automorphy identities tying the three series together.
enum class Relation {
    ZeroFromInf,   // E_0(-1/(4z)) = (4z)^{k/2} i^{-k} E_inf(z)
    HalfFromInf,   // E_half(z + 1/2) = 2^{k/2} (2z+1)^{-k/2} E_inf(z/(2z+1))
    HalfShift,     // E_half(z) = i^{-k} E_half(z + 1)
    HalfFromZero,  // E_half(z) = (2z+1)^{-k/2} E_0(z/(2z+1))
};

const char* relation_formula(Relation rel);

// Relative residual |lhs - rhs| / max(|lhs|, |rhs|) of the identity at z.
double relation_residual(Relation rel, const ComplexPoint& z, const Weight& w,
                         const TruncationPolicy& policy = {});

}  // namespace eisenzero
