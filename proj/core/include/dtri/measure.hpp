#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dtri/geometry.hpp"

namespace dtri {

enum class MeasureBase { Edge, Triangle };
enum class Combiner { Sum, Min, Max };

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Comparison tolerance for real-valued measure arithmetic (never used in
// combinatorial predicates).
inline constexpr double kValueTol = 1e-9;

inline double combiner_identity(Combiner c) {
    switch (c) {
        case Combiner::Sum: return 0.0;
        case Combiner::Min: return std::numeric_limits<double>::infinity();
        case Combiner::Max: return 0.0;
    }
    return 0.0;
}

inline double combine(Combiner c, double a, double b) {
    switch (c) {
        case Combiner::Sum: return a + b;
        case Combiner::Min: return a < b ? a : b;
        case Combiner::Max: return a > b ? a : b;
    }
    return 0.0;
}

inline std::int64_t combine_int(Combiner c, std::int64_t a, std::int64_t b) {
    switch (c) {
        case Combiner::Sum: return a + b;
        case Combiner::Min: return a < b ? a : b;
        case Combiner::Max: return a > b ? a : b;
    }
    return 0;
}

// A quality/weight measure that folds a per-diagonal or per-triangle atom
// with sum, min or max. Atoms of built-in measures are total; table measures
// throw MeasureDomainError on a missing atom.
class DecomposableMeasure {
public:
    // Defaults to const0.
    DecomposableMeasure()
        : DecomposableMeasure(Kind::Const0, "const0", MeasureBase::Edge, Combiner::Sum, true) {}

    static DecomposableMeasure euclidean();
    static DecomposableMeasure max_edge();
    static DecomposableMeasure min_edge();
    static DecomposableMeasure min_angle();
    static DecomposableMeasure max_angle();
    static DecomposableMeasure const0();

    static DecomposableMeasure edge_table(std::string name, Combiner comb,
                                          std::map<Diagonal, double> atoms,
                                          bool integral, bool total_default_zero = false);
    static DecomposableMeasure triangle_table(std::string name, Combiner comb,
                                              std::map<Triangle, double> atoms,
                                              bool integral, bool total_default_zero = false);

    // Registered built-in by name; "table:<path>" is resolved by the io module.
    static DecomposableMeasure builtin(const std::string& name);

    const std::string& name() const { return name_; }
    MeasureBase base() const { return base_; }
    Combiner combiner() const { return comb_; }
    bool integral() const { return integral_; }

    double atom(const Polygon& poly, const Diagonal& d) const;
    double atom(const Polygon& poly, const Triangle& t) const;
    std::int64_t atom_int(const Polygon& poly, const Diagonal& d) const;
    std::int64_t atom_int(const Polygon& poly, const Triangle& t) const;

private:
    enum class Kind { Euclidean, MaxEdge, MinEdge, MinAngle, MaxAngle, Const0, EdgeTable, TriTable };

    DecomposableMeasure(Kind k, std::string name, MeasureBase base, Combiner comb, bool integral)
        : kind_(k), name_(std::move(name)), base_(base), comb_(comb), integral_(integral) {}

    double edge_value(const Polygon& poly, const Diagonal& d) const;
    double tri_value(const Polygon& poly, const Triangle& t) const;

    Kind kind_;
    std::string name_;
    MeasureBase base_;
    Combiner comb_;
    bool integral_;
    bool default_zero_ = false;
    std::shared_ptr<const std::map<Diagonal, double>> edge_atoms_;
    std::shared_ptr<const std::map<Triangle, double>> tri_atoms_;
};

}  // namespace dtri
