#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "dtri/measure.hpp"
#include "dtri/triangulation.hpp"

namespace dtri {

enum class Sense { Minimize, Maximize };
enum class ConstraintSense { AtMost, AtLeast };

// One bi-criteria instance: optimize `weight` subject to `quality` bounded
// by B, asking for the k best distinct triangulations.
struct BctInstance {
    PolygonPtr polygon;
    DecomposableMeasure weight;
    DecomposableMeasure quality;
    double bound = 0.0;
    Sense sense = Sense::Minimize;
    ConstraintSense constraint_sense = ConstraintSense::AtMost;
    int k = 1;
};

// Sorted k-tuple of objective values padded with +inf; one witness per finite
// value, pairwise distinct.
struct KBestList {
    std::vector<double> values;            // length k, nondecreasing in the optimize direction
    std::vector<Triangulation> witnesses;  // witnesses[i] matches values[i]; only finite entries

    std::size_t finite_count() const { return witnesses.size(); }
};

// Cell guard for pseudo-polynomial tables: (M+1) * n^2 cells.
inline constexpr std::int64_t kCellGuard = 100'000'000;

// Case 1 DP: weight integral with w(T) in [0, W]; both measures sum-combining
// or not, any mix of edge/triangle bases. Returns the k weight-best
// triangulations with quality(T) within the bound.
KBestList solve_bct_integer_weight(const BctInstance& inst, std::int64_t W);

// Case 2 DP: quality integral, bound integral >= 0.
KBestList solve_bct_integer_quality(const BctInstance& inst);

// Min/max-combiner variants; M bounds the integral measure's atom values.
// Dispatches to the same class-partition engine.
KBestList solve_bct_minmax(const BctInstance& inst, std::int64_t M);

// FPTAS: scales the (real-valued) quality to integers and runs the Case 2 DP.
// Each returned T satisfies quality(T) <= (1+eps)*B and weight(T) no worse
// than any triangulation meeting the original bound.
KBestList solve_bct_fptas(const BctInstance& inst, double eps);

// Routes to the appropriate exact DP (integral weight / integral quality),
// or the FPTAS when `eps` is set and the quality is real-valued.
KBestList solve_bct(const BctInstance& inst, std::optional<double> eps = std::nullopt);

// Exact optimum of sigma over all triangulations (chain DP, k=1).
double sigma_star(const PolygonPtr& poly, const DecomposableMeasure& sigma);
Triangulation sigma_star_witness(const PolygonPtr& poly, const DecomposableMeasure& sigma);

// Lexicographic two-component value used by the alpha=1 Sum-DNT fast path:
// (quality, frequency) compared lexicographically, summed componentwise.
struct LexValue {
    double primary = 0.0;
    std::int64_t secondary = 0;
};

// k-best minimum triangulations under a lexicographic (quality, frequency)
// additive weight; quality from `sigma` (sum-combiner), frequency counting
// diagonal occurrences in `history` (per triangle side when sigma is
// triangle-based). Used by diverse_optimal_quality.
std::vector<Triangulation> k_best_lexicographic(const PolygonPtr& poly,
                                                const DecomposableMeasure& sigma,
                                                const std::vector<Triangulation>& history, int k);

}  // namespace dtri
