#pragma once

#include <vector>

#include "dtri/triangulation.hpp"

namespace dtri {

// True iff every internal diagonal passes the non-strict in-circle legality
// test against its two adjacent triangles.
bool is_locally_delaunay(const Triangulation& t);

// A (constrained) Delaunay triangulation of the polygon, reached by edge-flip
// legalization with exact predicates from the canonical-first triangulation.
Triangulation delaunay_triangulation(const PolygonPtr& poly);

// One maximal group of co-circular triangles: the vertex cycle is a convex
// sub-polygon inscribed in the common circle; its internal diagonals are
// freely interchangeable across Delaunay triangulations.
struct CocircularSet {
    std::vector<int> cycle;             // vertex indices, CCW
    std::vector<Diagonal> internal;     // internal diagonals of the reference DT
};

struct CocircularDecomposition {
    Triangulation reference;            // the Delaunay triangulation used for detection
    std::vector<Diagonal> forced;       // diagonals outside every co-circular set
    std::vector<CocircularSet> sets;    // each with >= 4 cycle vertices
};

// Locally-Delaunay components: uniquely forced diagonals plus the maximal
// co-circular convex sub-polygons. Detection is by exact in-circle ties over
// adjacent triangle pairs, grouped by union-find.
CocircularDecomposition cocircular_decomposition(const PolygonPtr& poly);

// Number of distinct Delaunay triangulations (product of per-set Catalan
// counts), capped at `cap` to avoid overflow.
std::int64_t count_delaunay_triangulations(const CocircularDecomposition& dec,
                                           std::int64_t cap = 2'000'000'000);

}  // namespace dtri
