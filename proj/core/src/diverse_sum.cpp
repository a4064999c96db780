#include "dtri/diverse_sum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "dtri/kbest.hpp"
#include "dtri/oracle.hpp"

namespace dtri {

namespace {

bool in_history(const Triangulation& t, const std::vector<Triangulation>& history) {
    for (const auto& h : history)
        if (h == t) return true;
    return false;
}

int swap_round_cap(int k) {
    return static_cast<int>(std::ceil(4.0 * k * std::log2(k + 1.0)));
}

}  // namespace

DecomposableMeasure frequency_weight(const PolygonPtr& poly,
                                     std::span<const Triangulation> history) {
    std::map<Diagonal, double> atoms;
    for (const Triangulation& t : history) {
        if (!(*t.polygon() == *poly))
            throw PolygonMismatch("history triangulation from a different polygon");
        for (const Diagonal& d : t.diagonals()) atoms[d] += 1.0;
    }
    return DecomposableMeasure::edge_table("frequency", Combiner::Sum, std::move(atoms), true,
                                           /*total_default_zero=*/true);
}

Triangulation farthest_insertion_step(const DntInstance& inst,
                                      const std::vector<Triangulation>& history,
                                      double sigma_star_value) {
    const int n = inst.polygon->n();
    BctInstance bct;
    bct.polygon = inst.polygon;
    bct.weight = frequency_weight(inst.polygon, history);
    bct.quality = inst.sigma;
    bct.bound = inst.alpha * sigma_star_value;
    bct.k = static_cast<int>(history.size()) + 1;

    const bool fptas = inst.eps && !inst.sigma.integral() && inst.alpha > 1.0;
    KBestList best = fptas
                         ? solve_bct_fptas(bct, *inst.eps)
                         : solve_bct_integer_weight(
                               bct, static_cast<std::int64_t>(history.size()) * (n - 3));
    for (const Triangulation& t : best.witnesses)
        if (!in_history(t, history)) return t;
    throw InternalError("k-best enumeration returned no new triangulation");
}

namespace {

// Shared post-processing: check the alpha bound and distinctness, assemble
// the certificate.
DiverseSolution finish_dnt(const DntInstance& inst, std::vector<Triangulation> ts,
                           double sigma_star_value, std::int64_t beta_num,
                           std::int64_t beta_den) {
    double slack = inst.eps && !inst.sigma.integral() && inst.alpha > 1.0 ? (1.0 + *inst.eps) : 1.0;
    Certificate cert;
    cert.alpha_bound_checked = true;
    for (const Triangulation& t : ts) {
        double q = evaluate_measure(inst.sigma, t);
        if (q > inst.alpha * slack * sigma_star_value + kValueTol)
            throw InternalError("solver produced a triangulation outside the nice set");
    }
    for (std::size_t a = 0; a < ts.size(); ++a)
        for (std::size_t b = a + 1; b < ts.size(); ++b)
            if (ts[a] == ts[b]) throw InternalError("solver produced duplicate triangulations");
    cert.beta_num = beta_num;
    cert.beta_den = beta_den;
    return make_solution(std::move(ts), cert);
}

}  // namespace

DiverseSolution greedy_sum_dnt(const DntInstance& inst) {
    if (inst.k < 2) throw InputError("k must be at least 2");
    if (inst.alpha < 1.0) throw InputError("alpha must be at least 1");
    double s = sigma_star(inst.polygon, inst.sigma);
    std::vector<Triangulation> history;
    for (int i = 0; i < inst.k; ++i)
        history.push_back(farthest_insertion_step(inst, history, s));
    return finish_dnt(inst, std::move(history), s, 1, 2);
}

DiverseSolution local_search_swap(const DntInstance& inst, const DiverseSolution& initial) {
    const int k = inst.k;
    if (static_cast<int>(initial.triangulations.size()) != k)
        throw InputError("initial solution size does not match k");
    double s = sigma_star(inst.polygon, inst.sigma);
    std::vector<Triangulation> cur = initial.triangulations;
    std::int64_t cur_sum = sum_diversity(cur);

    const int rounds = swap_round_cap(k);
    for (int round = 0; round < rounds; ++round) {
        std::int64_t best_sum = cur_sum;
        int best_j = -1;
        Triangulation best_t = cur[0];
        for (int j = 0; j < k; ++j) {
            std::vector<Triangulation> rest;
            rest.reserve(k - 1);
            for (int i = 0; i < k; ++i)
                if (i != j) rest.push_back(cur[i]);
            Triangulation cand = farthest_insertion_step(inst, rest, s);
            rest.push_back(cand);
            std::int64_t val = sum_diversity(rest);
            if (val > best_sum) {
                best_sum = val;
                best_j = j;
                best_t = cand;
            }
        }
        if (best_j < 0) break;
        cur[best_j] = best_t;
        cur_sum = best_sum;
    }
    auto [bn, bd] = beta_factor(k);
    return finish_dnt(inst, std::move(cur), s, bn, bd);
}

DiverseSolution diverse_optimal_quality(const DntInstance& inst) {
    if (inst.alpha != 1.0)
        throw InputError("diverse_optimal_quality handles alpha = 1 only");
    if (inst.sigma.combiner() != Combiner::Sum)
        throw InputError("the lexicographic fast path needs a sum-combiner sigma "
                         "(route min/max sigma through greedy_sum_dnt)");
    const int k = inst.k;
    if (k < 2) throw InputError("k must be at least 2");
    double s = sigma_star(inst.polygon, inst.sigma);

    auto lex_step = [&](const std::vector<Triangulation>& history) -> Triangulation {
        auto cands = k_best_lexicographic(inst.polygon, inst.sigma,  history,
                                          static_cast<int>(history.size()) + 1);
        for (const Triangulation& t : cands) {
            if (in_history(t, history)) continue;
            if (evaluate_measure(inst.sigma, t) > s + kValueTol)
                throw Infeasible(static_cast<std::int64_t>(history.size()),
                                 "polygon has less than " + std::to_string(k) +
                                     " quality-optimal triangulations");
            return t;
        }
        throw Infeasible(static_cast<std::int64_t>(history.size()),
                         "polygon has less than " + std::to_string(k) +
                             " quality-optimal triangulations");
    };

    std::vector<Triangulation> cur;
    for (int i = 0; i < k; ++i) cur.push_back(lex_step(cur));

    std::int64_t cur_sum = sum_diversity(cur);
    const int rounds = swap_round_cap(k);
    for (int round = 0; round < rounds; ++round) {
        std::int64_t best_sum = cur_sum;
        int best_j = -1;
        Triangulation best_t = cur[0];
        for (int j = 0; j < k; ++j) {
            std::vector<Triangulation> rest;
            for (int i = 0; i < k; ++i)
                if (i != j) rest.push_back(cur[i]);
            Triangulation cand = lex_step(rest);
            rest.push_back(cand);
            std::int64_t val = sum_diversity(rest);
            if (val > best_sum) {
                best_sum = val;
                best_j = j;
                best_t = cand;
            }
        }
        if (best_j < 0) break;
        cur[best_j] = best_t;
        cur_sum = best_sum;
    }
    auto [bn, bd] = beta_factor(k);
    return finish_dnt(inst, std::move(cur), s, bn, bd);
}

namespace {

// Serpentine triangulation starting at vertex s: path s, s+2, s-1, s+3, s-2,...
Triangulation zigzag(const PolygonPtr& poly, int s) {
    const int n = poly->n();
    auto wrap = [n](int v) { return ((v % n) + n) % n; };
    std::vector<int> path;
    path.push_back(wrap(s));
    path.push_back(wrap(s + 2));
    for (int t = 1; static_cast<int>(path.size()) < n - 2; ++t) {
        path.push_back(wrap(s - t));
        if (static_cast<int>(path.size()) < n - 2) path.push_back(wrap(s + 2 + t));
    }
    std::vector<Diagonal> diags;
    for (std::size_t p = 0; p + 1 < path.size(); ++p) diags.emplace_back(path[p], path[p + 1]);
    return Triangulation::make(poly, std::move(diags));
}

bool pairwise_disjoint(const Triangulation& a, const Triangulation& b) {
    for (const Diagonal& d : a.diagonals())
        if (b.contains(d)) return false;
    return true;
}

}  // namespace

DiverseSolution convex_disjoint(const PolygonPtr& poly, int k) {
    if (!poly->is_convex()) throw NotConvex("convex_disjoint needs a convex polygon");
    const int n = poly->n();
    if (k < 2 || k > n / 2)
        throw KTooLarge("k must lie in [2, n/2]; got k=" + std::to_string(k) +
                        ", n=" + std::to_string(n));
    std::vector<Triangulation> chosen;
    for (int s = 0; s < n && static_cast<int>(chosen.size()) < k; ++s) {
        Triangulation t = zigzag(poly, s);
        bool ok = true;
        for (const Triangulation& c : chosen)
            if (!pairwise_disjoint(t, c)) {
                ok = false;
                break;
            }
        if (ok) chosen.push_back(std::move(t));
    }
    if (static_cast<int>(chosen.size()) < k)
        throw InternalError("zigzag construction found only " +
                            std::to_string(chosen.size()) + " disjoint triangulations");
    Certificate cert;
    cert.beta_num = 1;
    cert.beta_den = 1;
    return make_solution(std::move(chosen), cert);
}

DiverseSolution convex_sum_dt_ptas(const PolygonPtr& poly, int k, double eps) {
    if (!poly->is_convex()) throw NotConvex("convex_sum_dt_ptas needs a convex polygon");
    if (k < 2) throw InputError("k must be at least 2");
    if (eps <= 0) throw InputError("epsilon must be positive");
    const int n = poly->n();
    std::int64_t total = catalan(n - 2);
    if (total < k) throw Infeasible(total, "polygon has less than " + std::to_string(k) +
                                               " triangulations");
    if (k >= 2 && k <= n / 2) return convex_disjoint(poly, k);
    DntInstance inst;
    inst.polygon = poly;
    inst.sigma = DecomposableMeasure::const0();
    inst.alpha = 1.0;
    inst.k = k;
    if (k >= 2.0 / eps) return local_search_swap(inst, greedy_sum_dnt(inst));
    // Exhaustive branch: n/2 < k < 2/eps.
    DiverseSolution sol = oracle_sum_dnt(poly, inst.sigma, 1.0, k);
    sol.certificate.beta_num = 1;
    sol.certificate.beta_den = 1;
    return sol;
}

namespace {

// Local convex polygon of a co-circular set plus the index mapping back to P.
struct LocalSet {
    PolygonPtr local;
    std::vector<int> cycle;  // local index -> global vertex

    Diagonal lift(const Diagonal& d) const { return Diagonal(cycle[d.i], cycle[d.j]); }
};

LocalSet make_local(const Polygon& p, const CocircularSet& cs) {
    std::vector<Point> pts;
    for (int v : cs.cycle) pts.push_back(p.vertex(v));
    LocalSet ls;
    ls.local = make_polygon(std::move(pts));
    ls.cycle = cs.cycle;
    if (ls.local->orientation_flipped())
        throw InternalError("co-circular cycle was not CCW");
    return ls;
}

Triangulation assemble(const PolygonPtr& poly, const std::vector<Diagonal>& forced,
                       const std::vector<LocalSet>& sets,
                       const std::vector<Triangulation>& choices) {
    std::vector<Diagonal> diags = forced;
    for (std::size_t l = 0; l < sets.size(); ++l)
        for (const Diagonal& d : choices[l].diagonals()) diags.push_back(sets[l].lift(d));
    return Triangulation::make(poly, std::move(diags));
}

// Most diverse k-multiset (repeats allowed) from a small list.
std::vector<Triangulation> diverse_multiset(const std::vector<Triangulation>& list, int k,
                                            std::int64_t guard) {
    const int m = static_cast<int>(list.size());
    std::vector<std::vector<std::int64_t>> sd(m, std::vector<std::int64_t>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            sd[i][j] = sd[j][i] = symmetric_difference(list[i], list[j]);
    std::int64_t combos = 1;
    for (int i = 0; i < k; ++i) {
        combos = combos * (m + i) / (i + 1);
        if (combos > guard)
            throw ResourceLimit("multiset scan exceeds the combination guard");
    }
    std::vector<int> idx(k, 0), best_idx;
    std::int64_t best = -1;
    auto rec = [&](auto&& self, int pos, int from, std::int64_t acc) -> void {
        if (pos == k) {
            if (acc > best) {
                best = acc;
                best_idx = idx;
            }
            return;
        }
        for (int c = from; c < m; ++c) {
            idx[pos] = c;
            std::int64_t add = 0;
            for (int q = 0; q < pos; ++q) add += sd[idx[q]][c];
            self(self, pos + 1, c, acc + add);
        }
    };
    rec(rec, 0, 0, 0);
    std::vector<Triangulation> out;
    for (int i : best_idx) out.push_back(list[i]);
    return out;
}

// k'-best combinations across per-set sorted candidate lists: values add up,
// witnesses are per-set choice indices.
struct ProductCombo {
    double value;
    std::vector<int> pick;
};

std::vector<ProductCombo> product_k_best(const std::vector<std::vector<double>>& lists, int k) {
    std::vector<ProductCombo> acc = {{0.0, {}}};
    for (const auto& vals : lists) {
        std::vector<ProductCombo> next;
        sorted_matrix_walk(
            acc.size(), vals.size(),
            [&](std::size_t r, std::size_t c) { return acc[r].value + vals[c]; },
            [&](std::size_t r, std::size_t c, double s) {
                ProductCombo pc{s, acc[r].pick};
                pc.pick.push_back(static_cast<int>(c));
                next.push_back(std::move(pc));
                return static_cast<int>(next.size()) < k;
            });
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

DiverseSolution diverse_delaunay(const PolygonPtr& poly, int k, double eps) {
    if (k < 2) throw InputError("k must be at least 2");
    if (eps <= 0) throw InputError("epsilon must be positive");
    auto dec = cocircular_decomposition(poly);
    std::int64_t total = count_delaunay_triangulations(dec);
    if (total < k)
        throw Infeasible(total, "polygon has less than " + std::to_string(k) +
                                    " Delaunay triangulations");

    const Polygon& p = *poly;
    std::vector<LocalSet> sets;
    for (const auto& cs : dec.sets) sets.push_back(make_local(p, cs));

    Certificate cert;
    cert.alpha_bound_checked = true;
    cert.beta_num = 1;
    cert.beta_den = 1;

    // Case A: some set is large enough for k disjoint triangulations; per-set
    // optima combine into a globally optimal, distinct collection.
    int big = -1;
    for (std::size_t l = 0; l < sets.size(); ++l)
        if (static_cast<int>(sets[l].cycle.size()) >= 2 * k) big = static_cast<int>(l);
    if (big >= 0) {
        std::vector<std::vector<Triangulation>> choices(sets.size());
        for (std::size_t l = 0; l < sets.size(); ++l) {
            if (static_cast<int>(sets[l].cycle.size()) >= 2 * k) {
                choices[l] = convex_disjoint(sets[l].local, k).triangulations;
            } else {
                auto all = enumerate_all(sets[l].local);
                choices[l] = diverse_multiset(all.triangulations, k, kCombinationGuard);
            }
        }
        std::vector<Triangulation> out;
        for (int i = 0; i < k; ++i) {
            std::vector<Triangulation> pick;
            for (std::size_t l = 0; l < sets.size(); ++l) pick.push_back(choices[l][i]);
            out.push_back(assemble(poly, dec.forced, sets, pick));
        }
        return make_solution(std::move(out), cert);
    }

    // Case B: the Delaunay space is small; exhaustive scan is exact.
    if (total <= 20'000) {
        std::int64_t combos = 1;
        bool scan_ok = true;
        for (int i = 0; i < k && scan_ok; ++i) {
            combos = combos * (total - i) / (i + 1);
            if (combos > kCombinationGuard) scan_ok = false;
        }
        if (scan_ok) {
            std::vector<std::vector<Triangulation>> per_set;
            for (const auto& ls : sets) per_set.push_back(enumerate_all(ls.local).triangulations);
            std::vector<Triangulation> space;
            std::vector<std::size_t> cursor(sets.size(), 0);
            for (;;) {
                std::vector<Triangulation> pick;
                for (std::size_t l = 0; l < sets.size(); ++l) pick.push_back(per_set[l][cursor[l]]);
                space.push_back(assemble(poly, dec.forced, sets, pick));
                std::size_t l = 0;
                for (; l < sets.size(); ++l) {
                    if (++cursor[l] < per_set[l].size()) break;
                    cursor[l] = 0;
                }
                if (l == sets.size()) break;
            }
            std::sort(space.begin(), space.end());
            std::int64_t best = -1;
            std::vector<int> idx(k), best_idx;
            auto rec = [&](auto&& self, int pos, int from) -> void {
                if (pos == k) {
                    std::int64_t s = 0;
                    for (int a = 0; a < k; ++a)
                        for (int b = a + 1; b < k; ++b)
                            s += symmetric_difference(space[idx[a]], space[idx[b]]);
                    if (s > best) {
                        best = s;
                        best_idx = idx;
                    }
                    return;
                }
                for (int c = from; c <= static_cast<int>(space.size()) - (k - pos); ++c) {
                    idx[pos] = c;
                    self(self, pos + 1, c + 1);
                }
            };
            rec(rec, 0, 0);
            std::vector<Triangulation> out;
            for (int i : best_idx) out.push_back(space[i]);
            return make_solution(std::move(out), cert);
        }
    }

    // Case C: greedy + swap over the factored product space (k >= 2/eps).
    if (k >= 2.0 / eps - kValueTol) {
        auto farthest = [&](const std::vector<Triangulation>& history) -> Triangulation {
            const int kb = static_cast<int>(history.size()) + 1;
            std::vector<std::vector<double>> values(sets.size());
            std::vector<std::vector<Triangulation>> wits(sets.size());
            for (std::size_t l = 0; l < sets.size(); ++l) {
                std::map<Diagonal, double> atoms;
                for (const Triangulation& h : history)
                    for (std::size_t li = 0; li < sets[l].cycle.size(); ++li)
                        for (std::size_t lj = li + 1; lj < sets[l].cycle.size(); ++lj) {
                            Diagonal local(static_cast<int>(li), static_cast<int>(lj));
                            if (!sets[l].local->is_valid_diagonal(local.i, local.j)) continue;
                            if (h.contains(sets[l].lift(local))) atoms[local] += 1.0;
                        }
                BctInstance bi;
                bi.polygon = sets[l].local;
                bi.weight = DecomposableMeasure::edge_table("freq", Combiner::Sum,
                                                            std::move(atoms), true, true);
                bi.quality = DecomposableMeasure::const0();
                bi.k = std::min<std::int64_t>(kb, catalan(sets[l].local->n() - 2));
                KBestList kl = solve_bct_integer_weight(
                    bi, static_cast<std::int64_t>(history.size()) *
                            (sets[l].local->n() - 3));
                values[l] = kl.values;
                values[l].resize(kl.witnesses.size());
                wits[l] = kl.witnesses;
            }
            auto combos = product_k_best(values, kb);
            for (const auto& combo : combos) {
                std::vector<Triangulation> pick;
                for (std::size_t l = 0; l < sets.size(); ++l) pick.push_back(wits[l][combo.pick[l]]);
                Triangulation t = assemble(poly, dec.forced, sets, pick);
                if (!in_history(t, history)) return t;
            }
            throw InternalError("product k-best produced no new Delaunay triangulation");
        };

        std::vector<Triangulation> cur;
        for (int i = 0; i < k; ++i) cur.push_back(farthest(cur));
        std::int64_t cur_sum = sum_diversity(cur);
        const int rounds = swap_round_cap(k);
        for (int round = 0; round < rounds; ++round) {
            std::int64_t best_sum = cur_sum;
            int best_j = -1;
            Triangulation best_t = cur[0];
            for (int j = 0; j < k; ++j) {
                std::vector<Triangulation> rest;
                for (int i = 0; i < k; ++i)
                    if (i != j) rest.push_back(cur[i]);
                Triangulation cand = farthest(rest);
                rest.push_back(cand);
                std::int64_t val = sum_diversity(rest);
                if (val > best_sum) {
                    best_sum = val;
                    best_j = j;
                    best_t = cand;
                }
            }
            if (best_j < 0) break;
            cur[best_j] = best_t;
            cur_sum = best_sum;
        }
        auto [bn, bd] = beta_factor(k);
        cert.beta_num = bn;
        cert.beta_den = bd;
        return make_solution(std::move(cur), cert);
    }

    throw ResourceLimit("Delaunay space too large for exhaustive search and k below the "
                        "greedy+swap threshold 2/eps");
}

}  // namespace dtri
