#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dtri/bct.hpp"
#include "dtri/triangulation.hpp"

namespace dtri {

struct MctConstraint {
    DecomposableMeasure measure;  // integral, nonnegative, sum-combiner
    std::int64_t bound = 0;
};

struct MctInstance {
    PolygonPtr polygon;
    DecomposableMeasure objective;  // integral, sum-combiner
    std::vector<MctConstraint> constraints;
};

// Objective-minimum triangulation satisfying every constraint; DP over
// budget vectors generalizing the integer-quality BCT recurrence. With no
// constraints this is the plain minimum-weight triangulation; with one it is
// identical (value and witness) to solve_bct_integer_quality.
Triangulation solve_mct(const MctInstance& inst);

// The decision version of farthest insertion under MinSD: a triangulation T
// with min_j |T delta T_j| >= 2(n-3) - 2r, or nullopt if none exists. Scans
// pivots in index order, solving one MCT per pivot.
std::optional<Triangulation> decision_farthest(const PolygonPtr& poly,
                                               const std::vector<Triangulation>& history, int r,
                                               std::int64_t cell_guard = kCellGuard);

// Farthest insertion under MinSD with the ascending-r driver; MinSD at least
// half the optimum.
DiverseSolution min_dt(const PolygonPtr& poly, int k);

}  // namespace dtri
