#include "dtri/bct.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include "dp_common.hpp"

namespace dtri {

namespace {

using detail::DiagSet;
using detail::canon_less;
using detail::kIntInf;
using detail::value_combine;
using detail::value_identity;
using detail::value_less;

struct Entry {
    LexValue v;
    DiagSet set;
};

struct EntryLess {
    Sense sense;

    bool operator()(const Entry& a, const Entry& b) const {
        bool lt = sense == Sense::Minimize ? value_less(a.v, b.v) : value_less(b.v, a.v);
        if (lt) return true;
        bool gt = sense == Sense::Minimize ? value_less(b.v, a.v) : value_less(a.v, b.v);
        if (gt) return false;
        return canon_less(a.set, b.set);
    }
};

// Sorted pool of at most k entries.
struct Pool {
    std::vector<Entry> e;

    bool insert(Entry entry, int k, const EntryLess& less) {
        if (static_cast<int>(e.size()) == k && !less(entry, e.back())) return false;
        auto it = std::upper_bound(e.begin(), e.end(), entry, less);
        e.insert(it, std::move(entry));
        if (static_cast<int>(e.size()) > k) e.pop_back();
        return true;
    }
};

struct BudgetSide {
    MeasureBase base = MeasureBase::Edge;
    Combiner comb = Combiner::Sum;
    std::function<std::int64_t(int, int)> edge_atom;       // diagonal (i,j), i<j
    std::function<std::int64_t(int, int, int)> tri_atom;   // triangle (i,m,j)
    std::int64_t cap = 0;                                  // classes 0..cap (+inf sentinel for Min)
};

struct TrackedSide {
    MeasureBase base = MeasureBase::Edge;
    Combiner comb = Combiner::Sum;
    std::function<LexValue(int, int)> edge_atom;
    std::function<LexValue(int, int, int)> tri_atom;
};

std::int64_t budget_fold(Combiner c, std::int64_t a, std::int64_t b) {
    if (a == kIntInf) return b;
    if (b == kIntInf) return a;
    return combine_int(c, a, b);
}

std::int64_t budget_fold_identity(Combiner c) {
    return c == Combiner::Min ? kIntInf : 0;
}

class ChainDp {
public:
    ChainDp(const Polygon& poly, const SplitTable& splits, BudgetSide budget, TrackedSide tracked,
            int k, Sense sense)
        : poly_(poly),
          splits_(splits),
          budget_(std::move(budget)),
          tracked_(std::move(tracked)),
          k_(k),
          less_{sense} {
        n_ = poly_.n();
        // Class layout: 0..cap, plus a sentinel class for Min's empty fold.
        classes_ = budget_.cap + 1 + (budget_.comb == Combiner::Min ? 1 : 0);
        if (classes_ * static_cast<std::int64_t>(n_) * n_ > kCellGuard)
            throw ResourceLimit("DP table of " + std::to_string(classes_) + " x " +
                                std::to_string(n_) + "^2 cells exceeds the guard");
        const auto& universe = poly_.diagonal_universe();
        words_ = universe.size() / 64 + 1;
        diag_bit_.assign(static_cast<std::size_t>(n_) * n_, -1);
        for (std::size_t b = 0; b < universe.size(); ++b)
            diag_bit_[universe[b].i * n_ + universe[b].j] = static_cast<int>(b);
        cells_.resize(static_cast<std::size_t>(n_) * n_);
        run();
    }

    // Occupied classes of the root cell, with pooled entries.
    const std::vector<std::pair<std::int64_t, const std::vector<Entry>*>>& root() const {
        return root_view_;
    }

    std::int64_t sentinel_class() const { return budget_.cap + 1; }
    std::int64_t decode_class(std::int64_t c) const {
        return (budget_.comb == Combiner::Min && c == sentinel_class()) ? kIntInf : c;
    }

    Triangulation materialize(const Entry& e, const PolygonPtr& poly) const {
        return Triangulation::make(poly, detail::diagset_to_list(e.set, poly_.diagonal_universe()));
    }

private:
    struct Cell {
        std::vector<Pool> pools;          // by class
        std::vector<std::int64_t> occ;    // occupied classes
    };

    Cell& cell(int i, int j) { return cells_[static_cast<std::size_t>(i) * n_ + j]; }

    std::int64_t encode(std::int64_t v) const {
        if (budget_.comb == Combiner::Min && v == kIntInf) return budget_.cap + 1;
        return v;
    }

    void add(Cell& c, std::int64_t cls, Entry entry) {
        Pool& pool = c.pools[cls];
        bool was_empty = pool.e.empty();
        pool.insert(std::move(entry), k_, less_);
        if (was_empty && !pool.e.empty()) c.occ.push_back(cls);
    }

    void run() {
        for (int len = 1; len < n_; ++len) {
            for (int i = 0; i + len < n_; ++i) {
                int j = i + len;
                if (!poly_.is_chord_or_edge(i, j)) continue;
                Cell& dst = cell(i, j);
                dst.pools.assign(classes_, Pool{});
                if (len == 1) {
                    Entry base;
                    base.v = value_identity(tracked_.comb);
                    base.set.resize(words_);
                    add(dst, encode(budget_fold_identity(budget_.comb)), std::move(base));
                    continue;
                }
                for (int m = i + 1; m < j; ++m) {
                    if (!splits_.ok(i, m, j)) continue;
                    combine_split(dst, i, m, j);
                }
            }
        }
        Cell& top = cell(0, n_ - 1);
        std::sort(top.occ.begin(), top.occ.end());
        for (std::int64_t c : top.occ) root_view_.emplace_back(c, &top.pools[c].e);
    }

    void combine_split(Cell& dst, int i, int m, int j) {
        // Contributions of the elements this split introduces.
        std::int64_t eb = budget_fold_identity(budget_.comb);
        LexValue et = value_identity(tracked_.comb);
        DiagSet dnew;
        dnew.resize(words_);
        auto add_diag = [&](int a, int b) {
            dnew.set(diag_bit_[a * n_ + b]);
            if (budget_.base == MeasureBase::Edge)
                eb = budget_fold(budget_.comb, eb, budget_.edge_atom(a, b));
            if (tracked_.base == MeasureBase::Edge)
                et = value_combine(tracked_.comb, et, tracked_.edge_atom(a, b));
        };
        if (m > i + 1) add_diag(i, m);
        if (j > m + 1) add_diag(m, j);
        if (budget_.base == MeasureBase::Triangle)
            eb = budget_fold(budget_.comb, eb, budget_.tri_atom(i, m, j));
        if (tracked_.base == MeasureBase::Triangle)
            et = value_combine(tracked_.comb, et, tracked_.tri_atom(i, m, j));

        Cell& left = cell(i, m);
        Cell& right = cell(m, j);
        for (std::int64_t c1 : left.occ) {
            for (std::int64_t c2 : right.occ) {
                std::int64_t target;
                if (budget_.comb == Combiner::Sum) {
                    target = c1 + c2 + eb;
                    if (target > budget_.cap) continue;
                } else {
                    std::int64_t v =
                        budget_fold(budget_.comb, budget_fold(budget_.comb, decode_class(c1),
                                                              decode_class(c2)),
                                    eb);
                    if (v != kIntInf && v > budget_.cap)
                        throw InternalError("budget atom exceeds declared cap");
                    target = encode(v);
                }
                merge_pools(dst, target, left.pools[c1].e, right.pools[c2].e, et, dnew);
            }
        }
    }

    void merge_pools(Cell& dst, std::int64_t target, const std::vector<Entry>& p1,
                     const std::vector<Entry>& p2, const LexValue& et, const DiagSet& dnew) {
        Pool& pool = dst.pools[target];
        bool was_empty = pool.e.empty();
        for (const Entry& a : p1) {
            // Pools are value-sorted; once the best partner fails, later rows
            // fail as well (only value ordering is used for this pruning).
            if (static_cast<int>(pool.e.size()) == k_) {
                LexValue best = value_combine(tracked_.comb, value_combine(tracked_.comb, a.v, p2.front().v), et);
                bool worse = less_.sense == Sense::Minimize ? value_less(pool.e.back().v, best)
                                                            : value_less(best, pool.e.back().v);
                if (worse) break;
            }
            for (const Entry& b : p2) {
                LexValue cv = value_combine(tracked_.comb, value_combine(tracked_.comb, a.v, b.v), et);
                if (static_cast<int>(pool.e.size()) == k_) {
                    bool worse = less_.sense == Sense::Minimize ? value_less(pool.e.back().v, cv)
                                                                : value_less(cv, pool.e.back().v);
                    if (worse) break;
                }
                Entry cand;
                cand.v = cv;
                cand.set = a.set;
                cand.set.merge(b.set);
                cand.set.merge(dnew);
                pool.insert(std::move(cand), k_, less_);
            }
        }
        if (was_empty && !pool.e.empty()) dst.occ.push_back(target);
    }

    const Polygon& poly_;
    const SplitTable& splits_;
    BudgetSide budget_;
    TrackedSide tracked_;
    int k_;
    EntryLess less_;
    int n_ = 0;
    std::int64_t classes_ = 0;
    std::size_t words_ = 0;
    std::vector<int> diag_bit_;
    std::vector<Cell> cells_;
    std::vector<std::pair<std::int64_t, const std::vector<Entry>*>> root_view_;
};

BudgetSide budget_from_measure(const Polygon& poly, const DecomposableMeasure& m,
                               std::int64_t cap) {
    BudgetSide b;
    b.base = m.base();
    b.comb = m.combiner();
    b.cap = cap;
    if (b.base == MeasureBase::Edge)
        b.edge_atom = [&poly, m](int i, int j) { return m.atom_int(poly, Diagonal(i, j)); };
    else
        b.tri_atom = [&poly, m](int i, int mm, int j) {
            return m.atom_int(poly, Triangle(i, mm, j));
        };
    return b;
}

TrackedSide tracked_from_measure(const Polygon& poly, const DecomposableMeasure& m) {
    TrackedSide t;
    t.base = m.base();
    t.comb = m.combiner();
    if (t.base == MeasureBase::Edge)
        t.edge_atom = [&poly, m](int i, int j) {
            return LexValue{m.atom(poly, Diagonal(i, j)), 0};
        };
    else
        t.tri_atom = [&poly, m](int i, int mm, int j) {
            return LexValue{m.atom(poly, Triangle(i, mm, j)), 0};
        };
    return t;
}

bool bound_ok(double q, const BctInstance& inst) {
    return inst.constraint_sense == ConstraintSense::AtMost ? q <= inst.bound + kValueTol
                                                            : q >= inst.bound - kValueTol;
}

KBestList finish(const BctInstance& inst, ChainDp& dp, bool budget_is_weight,
                 std::optional<std::int64_t> quality_class_bound) {
    struct Picked {
        LexValue objective;
        const Entry* e;
    };
    std::vector<Picked> picked;

    if (budget_is_weight) {
        // Objective = class value; scan ascending (descending when maximizing),
        // keep entries whose tracked quality meets the bound.
        auto view = dp.root();
        if (inst.sense == Sense::Maximize) std::reverse(view.begin(), view.end());
        for (const auto& [cls, entries] : view) {
            std::int64_t dec = dp.decode_class(cls);
            double w = dec == kIntInf ? kInf : static_cast<double>(dec);
            for (const Entry& e : *entries) {
                if (!bound_ok(e.v.primary, inst)) continue;
                picked.push_back({LexValue{w, 0}, &e});
                if (static_cast<int>(picked.size()) == inst.k) break;
            }
            if (static_cast<int>(picked.size()) == inst.k) break;
        }
    } else {
        // Objective = tracked value; feasibility is a class-range filter.
        std::vector<Picked> all;
        for (const auto& [cls, entries] : dp.root()) {
            std::int64_t q = dp.decode_class(cls);
            bool ok = inst.constraint_sense == ConstraintSense::AtMost
                          ? q <= *quality_class_bound
                          : (q == kIntInf || q >= *quality_class_bound);
            if (!ok) continue;
            for (const Entry& e : *entries) all.push_back({e.v, &e});
        }
        std::sort(all.begin(), all.end(), [&](const Picked& a, const Picked& b) {
            bool lt = inst.sense == Sense::Minimize ? value_less(a.objective, b.objective)
                                                    : value_less(b.objective, a.objective);
            if (lt) return true;
            bool gt = inst.sense == Sense::Minimize ? value_less(b.objective, a.objective)
                                                    : value_less(a.objective, b.objective);
            if (gt) return false;
            return canon_less(a.e->set, b.e->set);
        });
        for (const Picked& p : all) {
            picked.push_back(p);
            if (static_cast<int>(picked.size()) == inst.k) break;
        }
    }

    if (static_cast<int>(picked.size()) < inst.k)
        throw Infeasible(static_cast<std::int64_t>(picked.size()),
                         "polygon has less than " + std::to_string(inst.k) +
                             " nice triangulations (found " + std::to_string(picked.size()) + ")");

    // Present sorted by objective then canonical order.
    std::stable_sort(picked.begin(), picked.end(), [&](const Picked& a, const Picked& b) {
        bool lt = inst.sense == Sense::Minimize ? value_less(a.objective, b.objective)
                                                : value_less(b.objective, a.objective);
        if (lt) return true;
        bool gt = inst.sense == Sense::Minimize ? value_less(b.objective, a.objective)
                                                : value_less(a.objective, b.objective);
        if (gt) return false;
        return canon_less(a.e->set, b.e->set);
    });
    KBestList out;
    out.values.assign(inst.k, kInf);
    for (std::size_t i = 0; i < picked.size(); ++i) {
        out.values[i] = picked[i].objective.primary;
        out.witnesses.push_back(dp.materialize(*picked[i].e, inst.polygon));
    }
    return out;
}

std::int64_t max_achievable_int(const Polygon& poly, const DecomposableMeasure& m) {
    std::vector<std::int64_t> atoms;
    const int n = poly.n();
    if (m.base() == MeasureBase::Edge) {
        for (const Diagonal& d : poly.diagonal_universe()) atoms.push_back(m.atom_int(poly, d));
    } else {
        for (int i = 0; i < n; ++i)
            for (int mm = i + 1; mm < n; ++mm)
                for (int j = mm + 1; j < n; ++j)
                    if (poly.is_chord_or_edge(i, mm) && poly.is_chord_or_edge(mm, j) &&
                        poly.is_chord_or_edge(i, j))
                        atoms.push_back(m.atom_int(poly, Triangle(i, mm, j)));
    }
    if (atoms.empty()) return 0;
    std::sort(atoms.rbegin(), atoms.rend());
    if (m.combiner() != Combiner::Sum) return std::max<std::int64_t>(atoms.front(), 0);
    std::int64_t cap = 0;
    const int take = m.base() == MeasureBase::Edge ? n - 3 : n - 2;
    for (int i = 0; i < take && i < static_cast<int>(atoms.size()); ++i)
        cap += std::max<std::int64_t>(atoms[i], 0);
    return cap;
}

// In the weight-indexed DP, pools hold the k entries most likely to satisfy
// the quality bound: smallest quality under an at-most constraint.
Sense pool_sense(ConstraintSense cs) {
    return cs == ConstraintSense::AtMost ? Sense::Minimize : Sense::Maximize;
}

}  // namespace

KBestList solve_bct_integer_weight(const BctInstance& inst, std::int64_t W) {
    const Polygon& poly = *inst.polygon;
    if (inst.k < 1) throw InputError("k must be at least 1");
    if (!inst.weight.integral())
        throw InputError("solve_bct_integer_weight needs an integral weight measure");
    SplitTable splits(poly);
    ChainDp dp(poly, splits, budget_from_measure(poly, inst.weight, W),
               tracked_from_measure(poly, inst.quality), inst.k,
               pool_sense(inst.constraint_sense));
    return finish(inst, dp, /*budget_is_weight=*/true, std::nullopt);
}

KBestList solve_bct_integer_quality(const BctInstance& inst) {
    const Polygon& poly = *inst.polygon;
    if (inst.k < 1) throw InputError("k must be at least 1");
    if (!inst.quality.integral())
        throw InputError("solve_bct_integer_quality needs an integral quality measure");
    std::int64_t bound = static_cast<std::int64_t>(std::floor(inst.bound + kValueTol));
    if (inst.constraint_sense == ConstraintSense::AtLeast)
        bound = static_cast<std::int64_t>(std::ceil(inst.bound - kValueTol));
    if (bound < 0 && inst.constraint_sense == ConstraintSense::AtMost)
        throw Infeasible(0, "negative bound over a nonnegative measure");
    std::int64_t cap = bound;
    if (inst.constraint_sense == ConstraintSense::AtLeast ||
        inst.quality.combiner() != Combiner::Sum)
        cap = std::max(bound, max_achievable_int(poly, inst.quality));
    SplitTable splits(poly);
    ChainDp dp(poly, splits, budget_from_measure(poly, inst.quality, cap),
               tracked_from_measure(poly, inst.weight), inst.k, inst.sense);
    return finish(inst, dp, /*budget_is_weight=*/false, bound);
}

KBestList solve_bct_minmax(const BctInstance& inst, std::int64_t M) {
    if (inst.weight.combiner() == Combiner::Sum && inst.quality.combiner() == Combiner::Sum)
        throw InputError("solve_bct_minmax expects a min/max combiner on at least one measure");
    if (inst.weight.integral()) return solve_bct_integer_weight(inst, M);
    if (!inst.quality.integral())
        throw InputError("solve_bct_minmax needs one integral measure");
    return solve_bct_integer_quality(inst);
}

KBestList solve_bct_fptas(const BctInstance& inst, double eps) {
    if (eps <= 0) throw InputError("epsilon must be positive");
    if (inst.constraint_sense != ConstraintSense::AtMost)
        throw InputError("the FPTAS handles at-most quality bounds");
    const Polygon& poly = *inst.polygon;
    const int n = poly.n();
    const double B = inst.bound;
    if (B < 0) throw Infeasible(0, "negative bound over a nonnegative measure");

    BctInstance scaled = inst;
    if (B <= kValueTol) {
        // Hard constraint: only zero-atom elements are allowed.
        auto indicator = [&](double v) { return v > kValueTol ? 1.0 : 0.0; };
        if (inst.quality.base() == MeasureBase::Edge) {
            std::map<Diagonal, double> atoms;
            for (const Diagonal& d : poly.diagonal_universe())
                atoms[d] = indicator(inst.quality.atom(poly, d));
            scaled.quality = DecomposableMeasure::edge_table(
                "scaled:" + inst.quality.name(), inst.quality.combiner(), std::move(atoms), true);
        } else {
            std::map<Triangle, double> atoms;
            for (int i = 0; i < n; ++i)
                for (int m = i + 1; m < n; ++m)
                    for (int j = m + 1; j < n; ++j)
                        if (poly.is_chord_or_edge(i, m) && poly.is_chord_or_edge(m, j) &&
                            poly.is_chord_or_edge(i, j))
                            atoms[Triangle(i, m, j)] =
                                indicator(inst.quality.atom(poly, Triangle(i, m, j)));
            scaled.quality = DecomposableMeasure::triangle_table(
                "scaled:" + inst.quality.name(), inst.quality.combiner(), std::move(atoms), true);
        }
        scaled.bound = 0;
        return solve_bct_integer_quality(scaled);
    }

    const double factor = static_cast<double>(n - 2) / (eps * B);
    auto scale = [&](double v) { return std::floor(factor * v); };
    if (inst.quality.base() == MeasureBase::Edge) {
        std::map<Diagonal, double> atoms;
        for (const Diagonal& d : poly.diagonal_universe())
            atoms[d] = scale(inst.quality.atom(poly, d));
        scaled.quality = DecomposableMeasure::edge_table(
            "scaled:" + inst.quality.name(), inst.quality.combiner(), std::move(atoms), true);
    } else {
        std::map<Triangle, double> atoms;
        for (int i = 0; i < n; ++i)
            for (int m = i + 1; m < n; ++m)
                for (int j = m + 1; j < n; ++j)
                    if (poly.is_chord_or_edge(i, m) && poly.is_chord_or_edge(m, j) &&
                        poly.is_chord_or_edge(i, j))
                        atoms[Triangle(i, m, j)] = scale(inst.quality.atom(poly, Triangle(i, m, j)));
        scaled.quality = DecomposableMeasure::triangle_table(
            "scaled:" + inst.quality.name(), inst.quality.combiner(), std::move(atoms), true);
    }
    scaled.bound = std::floor(static_cast<double>(n - 2) / eps);
    return solve_bct_integer_quality(scaled);
}

KBestList solve_bct(const BctInstance& inst, std::optional<double> eps) {
    if (inst.weight.integral())
        return solve_bct_integer_weight(inst, max_achievable_int(*inst.polygon, inst.weight));
    if (inst.quality.integral()) return solve_bct_integer_quality(inst);
    if (eps) return solve_bct_fptas(inst, *eps);
    throw InputError("no exact pseudo-polynomial route: neither measure is integral "
                     "(pass epsilon for the FPTAS)");
}

namespace {

// Unconstrained optimum of sigma: quality const0 is integral, so the Case 2
// engine tracks sigma as the objective over a single class.
KBestList sigma_star_list(const PolygonPtr& poly, const DecomposableMeasure& sigma, int k) {
    BctInstance inst;
    inst.polygon = poly;
    inst.weight = sigma;
    inst.quality = DecomposableMeasure::const0();
    inst.bound = 0;
    inst.k = k;
    return solve_bct_integer_quality(inst);
}

}  // namespace

double sigma_star(const PolygonPtr& poly, const DecomposableMeasure& sigma) {
    return sigma_star_list(poly, sigma, 1).values[0];
}

Triangulation sigma_star_witness(const PolygonPtr& poly, const DecomposableMeasure& sigma) {
    return sigma_star_list(poly, sigma, 1).witnesses.at(0);
}

std::vector<Triangulation> k_best_lexicographic(const PolygonPtr& poly,
                                                const DecomposableMeasure& sigma,
                                                const std::vector<Triangulation>& history, int k) {
    const Polygon& p = *poly;
    if (sigma.combiner() != Combiner::Sum)
        throw InputError("the lexicographic fast path needs a sum-combiner quality");
    const int n = p.n();
    std::vector<std::int64_t> freq(static_cast<std::size_t>(n) * n, 0);
    for (const Triangulation& t : history)
        for (const Diagonal& d : t.diagonals()) freq[d.i * n + d.j]++;
    auto edge_freq = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        if (b == a + 1 || (a == 0 && b == n - 1)) return std::int64_t{0};
        return freq[a * n + b];
    };

    TrackedSide tracked;
    tracked.base = sigma.base();
    tracked.comb = Combiner::Sum;
    if (sigma.base() == MeasureBase::Edge)
        tracked.edge_atom = [&p, sigma, edge_freq](int i, int j) {
            return LexValue{sigma.atom(p, Diagonal(i, j)), edge_freq(i, j)};
        };
    else
        tracked.tri_atom = [&p, sigma, edge_freq](int i, int m, int j) {
            return LexValue{sigma.atom(p, Triangle(i, m, j)),
                            edge_freq(i, m) + edge_freq(m, j) + edge_freq(i, j)};
        };

    BudgetSide budget;
    budget.base = MeasureBase::Edge;
    budget.comb = Combiner::Sum;
    budget.edge_atom = [](int, int) { return std::int64_t{0}; };
    budget.cap = 0;

    SplitTable splits(p);
    ChainDp dp(p, splits, std::move(budget), std::move(tracked), k, Sense::Minimize);
    std::vector<Triangulation> out;
    for (const auto& [cls, entries] : dp.root())
        for (const Entry& e : *entries) {
            out.push_back(dp.materialize(e, poly));
            if (static_cast<int>(out.size()) == k) break;
        }
    return out;
}

}  // namespace dtri
