#pragma once

#include <cstdint>
#include <vector>

#include "dtri/bct.hpp"
#include "dtri/triangulation.hpp"

namespace dtri {

struct EnumerationResult {
    std::vector<Triangulation> triangulations;  // canonical order
    std::int64_t count = 0;
};

inline constexpr std::int64_t kEnumLimit = 2'000'000;
inline constexpr std::int64_t kCombinationGuard = 10'000'000;

// All triangulations by recursive ear-split over chains. Aborts with
// ResourceLimit past `limit`.
EnumerationResult enumerate_all(const PolygonPtr& poly, std::int64_t limit = kEnumLimit);

// Independent cross-check: maximal non-crossing diagonal sets by backtracking
// over the diagonal universe. Returns the count only; intended for n <= 9.
std::int64_t count_by_backtracking(const Polygon& poly);

std::int64_t catalan(int n);

// Exhaustive ground truth for the solvers, small n only.
KBestList oracle_bct(const BctInstance& inst);
DiverseSolution oracle_sum_dnt(const PolygonPtr& poly, const DecomposableMeasure& sigma,
                               double alpha, int k,
                               std::int64_t combination_guard = kCombinationGuard);
DiverseSolution oracle_min_dt(const PolygonPtr& poly, int k,
                              std::int64_t combination_guard = kCombinationGuard);

}  // namespace dtri
