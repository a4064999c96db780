#include "dtri/diverse_min.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "dp_common.hpp"
#include "dtri/oracle.hpp"

namespace dtri {

namespace {

using detail::DiagSet;
using detail::canon_less;

// Single-best chain DP over exact budget vectors: cell (i,j) keeps, per
// vector of exact constraint values, the objective-minimum triangulation of
// the sub-chain with canonical tie-break.
class VectorDp {
public:
    VectorDp(const PolygonPtr& poly, const MctInstance& inst) : poly_(poly), inst_(inst) {
        const Polygon& p = *poly_;
        n_ = p.n();
        for (const auto& c : inst_.constraints) {
            if (!c.measure.integral() || c.measure.combiner() != Combiner::Sum)
                throw InputError("MCT constraints must be integral sum-combiner measures");
            if (c.bound < 0) throw Infeasible(0, "negative constraint bound");
            radix_.push_back(c.bound + 1);
        }
        if (!inst_.objective.integral() || inst_.objective.combiner() != Combiner::Sum)
            throw InputError("MCT objective must be an integral sum-combiner measure");
        classes_ = 1;
        for (std::int64_t r : radix_) {
            if (classes_ > kCellGuard / r) throw ResourceLimit("MCT budget-vector table too large");
            classes_ *= r;
        }
        if (classes_ * n_ * n_ > kCellGuard)
            throw ResourceLimit("MCT table of " + std::to_string(classes_) + " x " +
                                std::to_string(n_) + "^2 cells exceeds the guard");
        const auto& universe = p.diagonal_universe();
        words_ = universe.size() / 64 + 1;
        diag_bit_.assign(static_cast<std::size_t>(n_) * n_, -1);
        for (std::size_t b = 0; b < universe.size(); ++b)
            diag_bit_[universe[b].i * n_ + universe[b].j] = static_cast<int>(b);
        run();
    }

    // Best entry over all classes of the root cell.
    std::optional<Triangulation> best() const {
        const Cell& top = cells_[0 * n_ + (n_ - 1)];
        const Entry* win = nullptr;
        for (const Entry& e : top.entries)
            if (e.valid && (!win || better(e, *win))) win = &e;
        if (!win) return std::nullopt;
        return Triangulation::make(poly_,
                                   detail::diagset_to_list(win->set, poly_->diagonal_universe()));
    }

private:
    struct Entry {
        bool valid = false;
        std::int64_t obj = 0;
        DiagSet set;
    };

    struct Cell {
        std::vector<Entry> entries;  // indexed by flat class
        std::vector<std::int64_t> occ;
    };

    static bool better_raw(std::int64_t obj_a, const DiagSet& a, std::int64_t obj_b,
                           const DiagSet& b) {
        if (obj_a != obj_b) return obj_a < obj_b;
        return canon_less(a, b);
    }

    static bool better(const Entry& a, const Entry& b) {
        return better_raw(a.obj, a.set, b.obj, b.set);
    }

    // Per-constraint and objective contributions of the elements a split at m
    // introduces (new diagonals and, for triangle-based measures, the
    // triangle itself).
    struct Contribution {
        std::vector<std::int64_t> cons;
        std::int64_t obj = 0;
        DiagSet dnew;
    };

    Contribution contribution(int i, int m, int j) {
        const Polygon& p = *poly_;
        Contribution c;
        c.cons.assign(radix_.size(), 0);
        c.dnew.resize(words_);
        auto add_edge = [&](int a, int b) {
            c.dnew.set(diag_bit_[a * n_ + b]);
            Diagonal d(a, b);
            for (std::size_t q = 0; q < radix_.size(); ++q)
                if (inst_.constraints[q].measure.base() == MeasureBase::Edge)
                    c.cons[q] += inst_.constraints[q].measure.atom_int(p, d);
            if (inst_.objective.base() == MeasureBase::Edge)
                c.obj += inst_.objective.atom_int(p, d);
        };
        if (m > i + 1) add_edge(i, m);
        if (j > m + 1) add_edge(m, j);
        Triangle t(i, m, j);
        for (std::size_t q = 0; q < radix_.size(); ++q)
            if (inst_.constraints[q].measure.base() == MeasureBase::Triangle)
                c.cons[q] += inst_.constraints[q].measure.atom_int(p, t);
        if (inst_.objective.base() == MeasureBase::Triangle)
            c.obj += inst_.objective.atom_int(p, t);
        return c;
    }

    void run() {
        const Polygon& p = *poly_;
        SplitTable splits(p);
        cells_.assign(static_cast<std::size_t>(n_) * n_, Cell{});
        for (int len = 1; len < n_; ++len) {
            for (int i = 0; i + len < n_; ++i) {
                int j = i + len;
                if (!p.is_chord_or_edge(i, j)) continue;
                Cell& dst = cells_[static_cast<std::size_t>(i) * n_ + j];
                dst.entries.assign(classes_, Entry{});
                if (len == 1) {
                    Entry& e = dst.entries[0];
                    e.valid = true;
                    e.obj = 0;
                    e.set.resize(words_);
                    dst.occ.push_back(0);
                    continue;
                }
                for (int m = i + 1; m < j; ++m) {
                    if (!splits.ok(i, m, j)) continue;
                    Contribution c = contribution(i, m, j);
                    bool overflow = false;
                    for (std::size_t q = 0; q < radix_.size(); ++q)
                        if (c.cons[q] >= radix_[q]) overflow = true;
                    if (overflow) continue;
                    const Cell& left = cells_[static_cast<std::size_t>(i) * n_ + m];
                    const Cell& right = cells_[static_cast<std::size_t>(m) * n_ + j];
                    for (std::int64_t c1 : left.occ) {
                        for (std::int64_t c2 : right.occ) {
                            std::int64_t target = combine_class(c1, c2, c.cons);
                            if (target < 0) continue;
                            const Entry& a = left.entries[c1];
                            const Entry& b = right.entries[c2];
                            std::int64_t obj = a.obj + b.obj + c.obj;
                            Entry& slot = dst.entries[target];
                            if (slot.valid && slot.obj < obj) continue;
                            DiagSet merged = a.set;
                            merged.merge(b.set);
                            merged.merge(c.dnew);
                            if (!slot.valid) {
                                dst.occ.push_back(target);
                                slot.valid = true;
                            } else if (!better_raw(obj, merged, slot.obj, slot.set)) {
                                continue;
                            }
                            slot.obj = obj;
                            slot.set = std::move(merged);
                        }
                    }
                }
            }
        }
    }

    // Component-wise sum in mixed radix; -1 when any component overflows its
    // bound.
    std::int64_t combine_class(std::int64_t c1, std::int64_t c2,
                               const std::vector<std::int64_t>& extra) {
        std::int64_t out = 0, mult = 1;
        for (std::size_t q = 0; q < radix_.size(); ++q) {
            std::int64_t d1 = c1 % radix_[q];
            std::int64_t d2 = c2 % radix_[q];
            c1 /= radix_[q];
            c2 /= radix_[q];
            std::int64_t s = d1 + d2 + extra[q];
            if (s >= radix_[q]) return -1;
            out += s * mult;
            mult *= radix_[q];
        }
        return out;
    }

    PolygonPtr poly_;
    const MctInstance& inst_;
    int n_ = 0;
    std::int64_t classes_ = 1;
    std::size_t words_ = 0;
    std::vector<std::int64_t> radix_;
    std::vector<int> diag_bit_;
    std::vector<Cell> cells_;
};

}  // namespace

Triangulation solve_mct(const MctInstance& inst) {
    VectorDp dp(inst.polygon, inst);
    auto best = dp.best();
    if (!best) throw Infeasible(0, "no triangulation satisfies the constraints");
    return *best;
}

namespace {

DecomposableMeasure overlap_measure(const PolygonPtr& poly, const Triangulation& t,
                                    const std::string& name) {
    std::map<Diagonal, double> atoms;
    for (const Diagonal& d : t.diagonals()) atoms[d] = 1.0;
    (void)poly;
    return DecomposableMeasure::edge_table(name, Combiner::Sum, std::move(atoms), true,
                                           /*total_default_zero=*/true);
}

}  // namespace

std::optional<Triangulation> decision_farthest(const PolygonPtr& poly,
                                               const std::vector<Triangulation>& history, int r,
                                               std::int64_t cell_guard) {
    const int n = poly->n();
    if (r < 0 || r > n - 3) throw InputError("r must lie in [0, n-3]");
    const int k = static_cast<int>(history.size());
    if (k == 0) throw InputError("decision_farthest needs a nonempty history");
    std::int64_t cells = static_cast<std::int64_t>(n) * n;
    for (int q = 0; q < k - 1; ++q) {
        if (cells > cell_guard / (r + 1))
            throw ResourceLimit("decision_farthest table exceeds the cell guard");
        cells *= r + 1;
    }

    for (int pivot = 0; pivot < k; ++pivot) {
        MctInstance inst;
        inst.polygon = poly;
        inst.objective = overlap_measure(poly, history[pivot], "overlap-pivot");
        for (int j = 0; j < k; ++j) {
            if (j == pivot) continue;
            inst.constraints.push_back(
                {overlap_measure(poly, history[j], "overlap-" + std::to_string(j)), r});
        }
        try {
            Triangulation t = solve_mct(inst);
            if (evaluate_measure(inst.objective, t) <= static_cast<double>(r) + kValueTol)
                return t;
        } catch (const Infeasible&) {
            // try the next pivot
        }
    }
    return std::nullopt;
}

DiverseSolution min_dt(const PolygonPtr& poly, int k) {
    if (k < 2) throw InputError("k must be at least 2");
    const int n = poly->n();
    {
        // Feasibility pre-check: need at least k triangulations.
        std::int64_t count;
        if (poly->is_convex()) {
            count = catalan(n - 2);
        } else {
            try {
                count = enumerate_all(poly, std::max<std::int64_t>(k, 4096)).count;
            } catch (const ResourceLimit&) {
                count = kEnumLimit;  // more than any reasonable k
            }
        }
        if (count < k)
            throw Infeasible(count, "polygon has less than " + std::to_string(k) +
                                        " triangulations");
    }

    BctInstance seed;
    seed.polygon = poly;
    seed.weight = DecomposableMeasure::const0();
    seed.quality = DecomposableMeasure::const0();
    seed.k = 1;
    std::vector<Triangulation> history = {solve_bct_integer_weight(seed, 0).witnesses.at(0)};

    std::optional<int> r_used;
    while (static_cast<int>(history.size()) < k) {
        bool appended = false;
        for (int r = 0; r <= n - 3 && !appended; ++r) {
            auto t = decision_farthest(poly, history, r);
            if (!t) continue;
            if (!std::any_of(history.begin(), history.end(),
                             [&](const Triangulation& h) { return h == *t; })) {
                history.push_back(*t);
                r_used = std::max(r_used.value_or(0), r);
                appended = true;
                break;
            }
            // A history duplicate can only win once the bound is vacuous
            // (r = n-3); any distinct triangulation is then equally far.
            BctInstance any;
            any.polygon = poly;
            any.weight = DecomposableMeasure::const0();
            any.quality = DecomposableMeasure::const0();
            any.k = static_cast<int>(history.size()) + 1;
            KBestList kb = solve_bct_integer_weight(any, 0);
            for (const Triangulation& cand : kb.witnesses) {
                if (std::any_of(history.begin(), history.end(),
                                [&](const Triangulation& h) { return h == cand; }))
                    continue;
                history.push_back(cand);
                r_used = std::max(r_used.value_or(0), r);
                appended = true;
                break;
            }
        }
        if (!appended)
            throw Infeasible(static_cast<std::int64_t>(history.size()),
                             "could not extend the collection to " + std::to_string(k) +
                                 " distinct triangulations");
    }
    Certificate cert;
    cert.beta_num = 1;
    cert.beta_den = 2;
    cert.r_used = r_used;
    return make_solution(std::move(history), cert);
}

}  // namespace dtri
