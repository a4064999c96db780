#pragma once

#include <cstdint>
#include <vector>

#include "dtri/measure.hpp"
#include "dtri/triangulation.hpp"

namespace dtri {

// A simple polygon whose triangulations factor into q independent convex
// quadrilaterals (staircase tube of q chambers): exactly 2^q triangulations.
PolygonPtr gen_spiral(int q);

struct KiteGadget {
    Diagonal horizontal;  // the longer diagonal of the kite (atom value v)
    Diagonal vertical;    // the shorter diagonal (atom 0)
    std::int64_t value = 0;
};

struct KitesInstance {
    PolygonPtr polygon;
    // Integral edge measure: atom v_i on the i-th kite's longer diagonal, 0
    // elsewhere, so excess(T) is the subset sum of the chosen kites.
    DecomposableMeasure excess;
    std::vector<KiteGadget> kites;
};

// A tower of m kite chambers joined by forced junctions: kite i offers a
// binary choice between its two diagonals with length difference 2*v_i
// (coordinates carry the x2 integrality scaling).
KitesInstance gen_kites(const std::vector<std::int64_t>& values);

// Regular n-gon rounded to the integer grid at the given scale. Exact
// co-circularity survives rounding only in special cases (n = 4);
// degenerate roundings raise RoundingCollision.
PolygonPtr gen_convex_regular(int n, std::int64_t scale);

// Seed-deterministic random simple polygon via 2-opt uncrossing of a random
// point tour.
PolygonPtr gen_random_simple(int n, std::uint64_t seed);

enum class GeneratorKind { Spiral, Kites, ConvexRegular, RandomSimple };

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::ConvexRegular;
    int n = 0;                         // convex-regular / random-simple
    int q = 0;                         // spiral
    std::vector<std::int64_t> values;  // kites
    std::uint64_t seed = 0;
    std::int64_t scale = 1;
};

// Dispatch to the matching generator (the kite excess table is available via
// gen_kites directly).
PolygonPtr generate(const GeneratorSpec& spec);

}  // namespace dtri
