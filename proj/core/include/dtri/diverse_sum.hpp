#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dtri/bct.hpp"
#include "dtri/delaunay.hpp"
#include "dtri/triangulation.hpp"

namespace dtri {

struct DntInstance {
    PolygonPtr polygon;
    DecomposableMeasure sigma;
    double alpha = 1.0;
    int k = 2;
    std::optional<double> eps;  // enables the FPTAS-backed path for real sigma, alpha > 1
};

// Integral edge measure counting how many history triangulations contain each
// diagonal.
DecomposableMeasure frequency_weight(const PolygonPtr& poly,
                                     std::span<const Triangulation> history);

// A triangulation not in `history` minimizing the frequency weight over the
// nice set {T : sigma(T) <= alpha * sigma_star}: the farthest triangulation
// by total symmetric difference. Uses (|history|+1)-best enumeration.
Triangulation farthest_insertion_step(const DntInstance& inst,
                                      const std::vector<Triangulation>& history,
                                      double sigma_star_value);

// Farthest-insertion greedy; 1/2-approximate Sum diversity over nice k-sets.
DiverseSolution greedy_sum_dnt(const DntInstance& inst);

// Local-search swapping on top of an initial solution; factor
// beta = max(1/2, 1 - 2/(k+1)). Bounded rounds, strict improvements only.
DiverseSolution local_search_swap(const DntInstance& inst, const DiverseSolution& initial);

// alpha = 1 fast path: farthest steps are k-best minimum triangulations under
// the lexicographic (quality, frequency) weight; outputs are exactly
// sigma-optimal. Requires a sum-combiner sigma.
DiverseSolution diverse_optimal_quality(const DntInstance& inst);

// k pairwise edge-disjoint triangulations of a convex polygon, 2 <= k <= n/2,
// by zigzag construction with a rotation fallback for odd n.
DiverseSolution convex_disjoint(const PolygonPtr& poly, int k);

// (1-eps)-approximate Sum-DT on convex polygons: disjoint construction for
// k <= n/2, greedy+swap for k >= 2/eps, exhaustive search in between.
DiverseSolution convex_sum_dt_ptas(const PolygonPtr& poly, int k, double eps);

// k distinct Delaunay triangulations with (1-eps)-approximate Sum diversity,
// via the co-circular factored representation.
DiverseSolution diverse_delaunay(const PolygonPtr& poly, int k, double eps);

}  // namespace dtri
