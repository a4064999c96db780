#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dtri/geometry.hpp"
#include "dtri/measure.hpp"

namespace dtri {

// A triangulation of a simple polygon: the canonical sorted set of its n-3
// pairwise non-crossing diagonals. Value type; cheap to copy.
class Triangulation {
public:
    // Validates count, diagonal validity, and pairwise non-crossing.
    static Triangulation make(PolygonPtr poly, std::vector<Diagonal> diagonals);

    const PolygonPtr& polygon() const { return poly_; }
    const std::vector<Diagonal>& diagonals() const { return diags_; }
    bool contains(const Diagonal& d) const;

    // The n-2 triangles, canonical order.
    std::vector<Triangle> triangles() const;

    // Canonical comparison: lexicographic on the sorted diagonal list.
    friend bool operator==(const Triangulation& a, const Triangulation& b) {
        return a.diags_ == b.diags_ && *a.poly_ == *b.poly_;
    }
    friend bool operator<(const Triangulation& a, const Triangulation& b) {
        return a.diags_ < b.diags_;
    }

private:
    Triangulation(PolygonPtr poly, std::vector<Diagonal> diags)
        : poly_(std::move(poly)), diags_(std::move(diags)) {}

    PolygonPtr poly_;
    std::vector<Diagonal> diags_;
};

// |T1 delta T2| over diagonal sets. Throws PolygonMismatch.
std::int64_t symmetric_difference(const Triangulation& t1, const Triangulation& t2);

// Sum (resp. min) of pairwise symmetric differences; needs >= 2 inputs on the
// same polygon.
std::int64_t sum_diversity(std::span<const Triangulation> ts);
std::int64_t min_diversity(std::span<const Triangulation> ts);

// Combiner-fold of the measure's atom over T's diagonals or triangles.
// Empty edge fold (n=3): sum -> 0, min -> +inf, max -> 0.
double evaluate_measure(const DecomposableMeasure& m, const Triangulation& t);

struct Certificate {
    bool alpha_bound_checked = false;
    std::int64_t beta_num = 1;
    std::int64_t beta_den = 2;
    std::optional<int> r_used;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct DiverseSolution {
    std::vector<Triangulation> triangulations;
    std::int64_t sum_sd = 0;
    std::int64_t min_sd = 0;
    Certificate certificate;
};

// Fills sum_sd/min_sd from the triangulation list.
DiverseSolution make_solution(std::vector<Triangulation> ts, Certificate cert = {});

// Approximation factor beta = max(1/2, 1 - 2/(k+1)) as a rational.
inline std::pair<std::int64_t, std::int64_t> beta_factor(int k) {
    if (k <= 3) return {1, 2};
    return {k - 1, k + 1};
}

}  // namespace dtri
