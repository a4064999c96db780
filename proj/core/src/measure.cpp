#include "dtri/measure.hpp"

#include <utility>

namespace dtri {

DecomposableMeasure DecomposableMeasure::euclidean() {
    return {Kind::Euclidean, "euclidean", MeasureBase::Edge, Combiner::Sum, false};
}

DecomposableMeasure DecomposableMeasure::max_edge() {
    return {Kind::MaxEdge, "max-edge", MeasureBase::Edge, Combiner::Max, false};
}

DecomposableMeasure DecomposableMeasure::min_edge() {
    return {Kind::MinEdge, "min-edge", MeasureBase::Edge, Combiner::Min, false};
}

DecomposableMeasure DecomposableMeasure::min_angle() {
    return {Kind::MinAngle, "min-angle", MeasureBase::Triangle, Combiner::Min, false};
}

DecomposableMeasure DecomposableMeasure::max_angle() {
    return {Kind::MaxAngle, "max-angle", MeasureBase::Triangle, Combiner::Max, false};
}

DecomposableMeasure DecomposableMeasure::const0() {
    return {Kind::Const0, "const0", MeasureBase::Edge, Combiner::Sum, true};
}

DecomposableMeasure DecomposableMeasure::edge_table(std::string name, Combiner comb,
                                                    std::map<Diagonal, double> atoms,
                                                    bool integral, bool total_default_zero) {
    DecomposableMeasure m{Kind::EdgeTable, std::move(name), MeasureBase::Edge, comb, integral};
    m.edge_atoms_ = std::make_shared<const std::map<Diagonal, double>>(std::move(atoms));
    m.default_zero_ = total_default_zero;
    return m;
}

DecomposableMeasure DecomposableMeasure::triangle_table(std::string name, Combiner comb,
                                                        std::map<Triangle, double> atoms,
                                                        bool integral, bool total_default_zero) {
    DecomposableMeasure m{Kind::TriTable, std::move(name), MeasureBase::Triangle, comb, integral};
    m.tri_atoms_ = std::make_shared<const std::map<Triangle, double>>(std::move(atoms));
    m.default_zero_ = total_default_zero;
    return m;
}

DecomposableMeasure DecomposableMeasure::builtin(const std::string& name) {
    if (name == "euclidean") return euclidean();
    if (name == "max-edge") return max_edge();
    if (name == "min-edge") return min_edge();
    if (name == "min-angle") return min_angle();
    if (name == "max-angle") return max_angle();
    if (name == "const0") return const0();
    throw InputError("unknown measure: " + name);
}

double DecomposableMeasure::edge_value(const Polygon& poly, const Diagonal& d) const {
    switch (kind_) {
        case Kind::Euclidean:
        case Kind::MaxEdge:
        case Kind::MinEdge:
            return poly.edge_length(d);
        case Kind::Const0:
            return 0.0;
        case Kind::EdgeTable: {
            auto it = edge_atoms_->find(d);
            if (it == edge_atoms_->end()) {
                if (default_zero_) return 0.0;
                throw MeasureDomainError("measure '" + name_ + "' has no atom for diagonal (" +
                                         std::to_string(d.i) + "," + std::to_string(d.j) + ")");
            }
            return it->second;
        }
        default:
            throw MeasureDomainError("measure '" + name_ + "' is not edge-based");
    }
}

double DecomposableMeasure::tri_value(const Polygon& poly, const Triangle& t) const {
    switch (kind_) {
        case Kind::MinAngle:
            return poly.smallest_angle(t);
        case Kind::MaxAngle:
            return poly.largest_angle(t);
        case Kind::TriTable: {
            auto it = tri_atoms_->find(t);
            if (it == tri_atoms_->end()) {
                if (default_zero_) return 0.0;
                throw MeasureDomainError("measure '" + name_ + "' has no atom for triangle (" +
                                         std::to_string(t.a) + "," + std::to_string(t.b) + "," +
                                         std::to_string(t.c) + ")");
            }
            return it->second;
        }
        default:
            throw MeasureDomainError("measure '" + name_ + "' is not triangle-based");
    }
}

double DecomposableMeasure::atom(const Polygon& poly, const Diagonal& d) const {
    if (base_ != MeasureBase::Edge)
        throw MeasureDomainError("measure '" + name_ + "' is triangle-based");
    double v = edge_value(poly, d);
    if (v < 0) throw MeasureDomainError("measure '" + name_ + "' has a negative atom");
    return v;
}

double DecomposableMeasure::atom(const Polygon& poly, const Triangle& t) const {
    if (base_ != MeasureBase::Triangle)
        throw MeasureDomainError("measure '" + name_ + "' is edge-based");
    double v = tri_value(poly, t);
    if (v < 0) throw MeasureDomainError("measure '" + name_ + "' has a negative atom");
    return v;
}

std::int64_t DecomposableMeasure::atom_int(const Polygon& poly, const Diagonal& d) const {
    if (!integral_)
        throw MeasureDomainError("measure '" + name_ + "' is not integral");
    return static_cast<std::int64_t>(std::llround(atom(poly, d)));
}

std::int64_t DecomposableMeasure::atom_int(const Polygon& poly, const Triangle& t) const {
    if (!integral_)
        throw MeasureDomainError("measure '" + name_ + "' is not integral");
    return static_cast<std::int64_t>(std::llround(atom(poly, t)));
}

}  // namespace dtri
