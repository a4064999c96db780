#include "dtri/triangulation.hpp"

#include <algorithm>
#include <string>

namespace dtri {

namespace {

// Strict interleaving i < c < j < d (after normalization) means the chords
// (i,j) and (c,d) cross in any simple polygon where both are valid diagonals.
bool chords_cross(const Diagonal& a, const Diagonal& b) {
    return (a.i < b.i && b.i < a.j && a.j < b.j) || (b.i < a.i && a.i < b.j && b.j < a.j);
}

}  // namespace

Triangulation Triangulation::make(PolygonPtr poly, std::vector<Diagonal> diagonals) {
    const int n = poly->n();
    std::sort(diagonals.begin(), diagonals.end());
    diagonals.erase(std::unique(diagonals.begin(), diagonals.end()), diagonals.end());
    if (static_cast<int>(diagonals.size()) != n - 3)
        throw WrongCount("expected " + std::to_string(n - 3) + " diagonals, got " +
                         std::to_string(diagonals.size()));
    for (const Diagonal& d : diagonals)
        if (!poly->is_valid_diagonal(d.i, d.j))
            throw InvalidDiagonal("(" + std::to_string(d.i) + "," + std::to_string(d.j) +
                                  ") is not a valid diagonal");
    for (std::size_t x = 0; x < diagonals.size(); ++x)
        for (std::size_t y = x + 1; y < diagonals.size(); ++y)
            if (chords_cross(diagonals[x], diagonals[y]))
                throw CrossingDiagonals("diagonals (" + std::to_string(diagonals[x].i) + "," +
                                        std::to_string(diagonals[x].j) + ") and (" +
                                        std::to_string(diagonals[y].i) + "," +
                                        std::to_string(diagonals[y].j) + ") cross");
    return Triangulation(std::move(poly), std::move(diagonals));
}

bool Triangulation::contains(const Diagonal& d) const {
    return std::binary_search(diags_.begin(), diags_.end(), d);
}

std::vector<Triangle> Triangulation::triangles() const {
    const int n = poly_->n();
    std::vector<Triangle> out;
    out.reserve(n - 2);
    auto present = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        return poly_->is_boundary_edge(a, b) || contains(Diagonal(a, b));
    };
    // Recursive chain split: the face on chord (i,j) has a unique apex.
    auto rec = [&](auto&& self, int i, int j) -> void {
        if (j - i < 2) return;
        for (int m = i + 1; m < j; ++m) {
            if (present(i, m) && present(m, j)) {
                out.emplace_back(i, m, j);
                self(self, i, m);
                self(self, m, j);
                return;
            }
        }
        throw InternalError("triangulation has no apex on chord (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
    };
    rec(rec, 0, n - 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t symmetric_difference(const Triangulation& t1, const Triangulation& t2) {
    if (!(*t1.polygon() == *t2.polygon()))
        throw PolygonMismatch("triangulations belong to different polygons");
    const auto& a = t1.diagonals();
    const auto& b = t2.diagonals();
    std::size_t x = 0, y = 0, common = 0;
    while (x < a.size() && y < b.size()) {
        if (a[x] == b[y]) {
            ++common;
            ++x;
            ++y;
        } else if (a[x] < b[y]) {
            ++x;
        } else {
            ++y;
        }
    }
    return static_cast<std::int64_t>(a.size() + b.size() - 2 * common);
}

std::int64_t sum_diversity(std::span<const Triangulation> ts) {
    if (ts.size() < 2) throw TooFew("diversity needs at least 2 triangulations");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j) s += symmetric_difference(ts[i], ts[j]);
    return s;
}

std::int64_t min_diversity(std::span<const Triangulation> ts) {
    if (ts.size() < 2) throw TooFew("diversity needs at least 2 triangulations");
    std::int64_t m = -1;
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
            std::int64_t d = symmetric_difference(ts[i], ts[j]);
            if (m < 0 || d < m) m = d;
        }
    return m;
}

double evaluate_measure(const DecomposableMeasure& m, const Triangulation& t) {
    const Polygon& poly = *t.polygon();
    double acc = combiner_identity(m.combiner());
    if (m.base() == MeasureBase::Edge) {
        for (const Diagonal& d : t.diagonals()) acc = combine(m.combiner(), acc, m.atom(poly, d));
    } else {
        for (const Triangle& tr : t.triangles()) acc = combine(m.combiner(), acc, m.atom(poly, tr));
    }
    return acc;
}

DiverseSolution make_solution(std::vector<Triangulation> ts, Certificate cert) {
    DiverseSolution sol;
    sol.sum_sd = ts.size() >= 2 ? sum_diversity(ts) : 0;
    sol.min_sd = ts.size() >= 2 ? min_diversity(ts) : 0;
    sol.triangulations = std::move(ts);
    sol.certificate = cert;
    return sol;
}

}  // namespace dtri
