#include "dtri/oracle.hpp"

#include <algorithm>
#include <string>

namespace dtri {

namespace {

void enumerate_chain(const Polygon& poly, const SplitTable& splits, int i, int j,
                     std::vector<Diagonal>& acc, std::vector<std::vector<Diagonal>>& out,
                     std::int64_t limit) {
    if (j - i < 2) {
        if (j - i == 1) out.push_back(acc);
        return;
    }
    for (int m = i + 1; m < j; ++m) {
        if (!splits.ok(i, m, j)) continue;
        std::size_t mark = acc.size();
        if (m > i + 1) acc.emplace_back(i, m);
        if (j > m + 1) acc.emplace_back(m, j);
        // Cartesian product of the two sub-chains, left expanded first.
        std::vector<std::vector<Diagonal>> lefts;
        {
            std::vector<Diagonal> tmp;
            enumerate_chain(poly, splits, i, m, tmp, lefts, limit);
        }
        for (auto& left : lefts) {
            std::vector<Diagonal> acc2 = acc;
            acc2.insert(acc2.end(), left.begin(), left.end());
            enumerate_chain(poly, splits, m, j, acc2, out, limit);
            if (static_cast<std::int64_t>(out.size()) > limit)
                throw ResourceLimit("triangulation enumeration exceeded limit " +
                                    std::to_string(limit));
        }
        acc.resize(mark);
    }
}

}  // namespace

EnumerationResult enumerate_all(const PolygonPtr& poly, std::int64_t limit) {
    SplitTable splits(*poly);
    std::vector<std::vector<Diagonal>> sets;
    std::vector<Diagonal> acc;
    if (poly->n() == 3) {
        sets.push_back({});
    } else {
        enumerate_chain(*poly, splits, 0, poly->n() - 1, acc, sets, limit);
    }
    EnumerationResult res;
    res.triangulations.reserve(sets.size());
    for (auto& s : sets) res.triangulations.push_back(Triangulation::make(poly, std::move(s)));
    std::sort(res.triangulations.begin(), res.triangulations.end());
    for (std::size_t i = 1; i < res.triangulations.size(); ++i)
        if (res.triangulations[i - 1] == res.triangulations[i])
            throw InternalError("duplicate triangulation in enumeration");
    res.count = static_cast<std::int64_t>(res.triangulations.size());
    return res;
}

std::int64_t count_by_backtracking(const Polygon& poly) {
    const auto& universe = poly.diagonal_universe();
    const int need = poly.n() - 3;
    auto cross = [](const Diagonal& a, const Diagonal& b) {
        return (a.i < b.i && b.i < a.j && a.j < b.j) || (b.i < a.i && a.i < b.j && b.j < a.j);
    };
    std::int64_t count = 0;
    std::vector<int> chosen;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(chosen.size()) == need) {
            ++count;
            return;
        }
        if (universe.size() - from + chosen.size() < static_cast<std::size_t>(need)) return;
        for (std::size_t c = from; c < universe.size(); ++c) {
            bool ok = true;
            for (int idx : chosen)
                if (cross(universe[idx], universe[c])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(static_cast<int>(c));
            self(self, c + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return count;
}

std::int64_t catalan(int n) {
    std::int64_t c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

namespace {

bool bound_ok(double q, const BctInstance& inst) {
    return inst.constraint_sense == ConstraintSense::AtMost ? q <= inst.bound + kValueTol
                                                            : q >= inst.bound - kValueTol;
}

}  // namespace

KBestList oracle_bct(const BctInstance& inst) {
    auto all = enumerate_all(inst.polygon);
    struct Cand {
        double w;
        const Triangulation* t;
    };
    std::vector<Cand> feasible;
    for (const auto& t : all.triangulations) {
        double q = evaluate_measure(inst.quality, t);
        if (!bound_ok(q, inst)) continue;
        feasible.push_back({evaluate_measure(inst.weight, t), &t});
    }
    std::stable_sort(feasible.begin(), feasible.end(), [&](const Cand& a, const Cand& b) {
        return inst.sense == Sense::Minimize ? a.w < b.w : a.w > b.w;
    });
    KBestList out;
    out.values.assign(inst.k, kInf);
    for (int i = 0; i < inst.k && i < static_cast<int>(feasible.size()); ++i) {
        out.values[i] = feasible[i].w;
        out.witnesses.push_back(*feasible[i].t);
    }
    return out;
}

namespace {

// Visits all k-subsets of [0, m); aborts when the combination count guard is
// exceeded.
template <typename Fn>
void for_each_subset(int m, int k, std::int64_t guard, Fn&& fn) {
    std::int64_t combos = 1;
    for (int i = 0; i < k; ++i) {
        combos = combos * (m - i) / (i + 1);
        if (combos > guard) throw ResourceLimit("k-subset scan exceeds combination guard");
    }
    std::vector<int> idx(k);
    auto rec = [&](auto&& self, int pos, int from) -> void {
        if (pos == k) {
            fn(idx);
            return;
        }
        for (int c = from; c <= m - (k - pos); ++c) {
            idx[pos] = c;
            self(self, pos + 1, c + 1);
        }
    };
    rec(rec, 0, 0);
}

}  // namespace

DiverseSolution oracle_sum_dnt(const PolygonPtr& poly, const DecomposableMeasure& sigma,
                               double alpha, int k, std::int64_t combination_guard) {
    auto all = enumerate_all(poly);
    double best_quality = kInf;
    std::vector<double> quality(all.triangulations.size());
    for (std::size_t i = 0; i < all.triangulations.size(); ++i) {
        quality[i] = evaluate_measure(sigma, all.triangulations[i]);
        best_quality = std::min(best_quality, quality[i]);
    }
    std::vector<const Triangulation*> nice;
    for (std::size_t i = 0; i < all.triangulations.size(); ++i)
        if (quality[i] <= alpha * best_quality + kValueTol) nice.push_back(&all.triangulations[i]);
    const int m = static_cast<int>(nice.size());
    if (m < k)
        throw Infeasible(m, "polygon has less than " + std::to_string(k) + " nice triangulations");
    std::int64_t best = -1;
    std::vector<int> best_idx;
    for_each_subset(m, k, combination_guard, [&](const std::vector<int>& idx) {
        std::int64_t s = 0;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b) s += symmetric_difference(*nice[idx[a]], *nice[idx[b]]);
        if (s > best) {
            best = s;
            best_idx = idx;
        }
    });
    std::vector<Triangulation> ts;
    for (int i : best_idx) ts.push_back(*nice[i]);
    Certificate cert;
    cert.alpha_bound_checked = true;
    cert.beta_num = 1;
    cert.beta_den = 1;
    return make_solution(std::move(ts), cert);
}

DiverseSolution oracle_min_dt(const PolygonPtr& poly, int k, std::int64_t combination_guard) {
    auto all = enumerate_all(poly);
    const int m = static_cast<int>(all.triangulations.size());
    if (m < k)
        throw Infeasible(m, "polygon has less than " + std::to_string(k) + " triangulations");
    std::int64_t best = -1;
    std::vector<int> best_idx;
    for_each_subset(m, k, combination_guard, [&](const std::vector<int>& idx) {
        std::int64_t mn = -1;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b) {
                std::int64_t d =
                    symmetric_difference(all.triangulations[idx[a]], all.triangulations[idx[b]]);
                if (mn < 0 || d < mn) mn = d;
            }
        if (mn > best) {
            best = mn;
            best_idx = idx;
        }
    });
    std::vector<Triangulation> ts;
    for (int i : best_idx) ts.push_back(all.triangulations[i]);
    Certificate cert;
    cert.beta_num = 1;
    cert.beta_den = 1;
    return make_solution(std::move(ts), cert);
}

}  // namespace dtri
