#include <cmath>
#include <random>
#include <thread>

#include "doctest.h"
#include "dtri/bct.hpp"
#include "dtri/instances.hpp"
#include "dtri/kbest.hpp"
#include "dtri/oracle.hpp"

using namespace dtri;

namespace {

PolygonPtr unit_square() { return make_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

PolygonPtr convex_pentagon() { return make_polygon({{0, 0}, {4, 0}, {6, 3}, {2, 6}, {-2, 3}}); }

PolygonPtr convex_hexagon() {
    return make_polygon({{2, 0}, {4, 1}, {4, 3}, {2, 4}, {0, 3}, {0, 1}});
}

PolygonPtr skinny_quad() { return make_polygon({{0, 0}, {3, 0}, {3, 1}, {1, 1}}); }

DecomposableMeasure pentagon_fan0_frequency() {
    return DecomposableMeasure::edge_table(
        "freq-fan0", Combiner::Sum, {{Diagonal(0, 2), 1.0}, {Diagonal(0, 3), 1.0}}, true,
        /*total_default_zero=*/true);
}

}  // namespace

TEST_CASE("k_smallest_combination examples") {
    CHECK(k_smallest_combination({1, 2, kInf}, {0, 5, kInf}, 1, 3) ==
          std::vector<double>{2, 3, 7});
    CHECK(k_smallest_combination({4, 9}, {1, 2}, 0, 1) == std::vector<double>{5});
    CHECK(k_smallest_combination({1, 1}, {1, 1}, 0, 4) == std::vector<double>{2, 2, 2, 2});
}

TEST_CASE("integer-weight DP: pentagon frequency weights") {
    BctInstance inst;
    inst.polygon = convex_pentagon();
    inst.weight = pentagon_fan0_frequency();
    inst.quality = DecomposableMeasure::const0();
    inst.bound = 0;
    inst.k = 5;
    auto r = solve_bct_integer_weight(inst, 2);
    CHECK(r.values == std::vector<double>{0, 0, 1, 1, 2});
    CHECK(r.witnesses.size() == 5);
}

TEST_CASE("integer-weight DP: const0 weight yields a feasible witness") {
    BctInstance inst;
    inst.polygon = skinny_quad();
    inst.weight = DecomposableMeasure::const0();
    inst.quality = DecomposableMeasure::euclidean();
    inst.bound = 10.0;  // well above sigma*
    inst.k = 1;
    auto r = solve_bct_integer_weight(inst, 0);
    CHECK(r.values[0] == 0.0);
    CHECK(evaluate_measure(inst.quality, r.witnesses[0]) <= inst.bound);
}

TEST_CASE("integer-weight DP: hexagon k=14 enumerates everything") {
    BctInstance inst;
    inst.polygon = convex_hexagon();
    inst.weight = DecomposableMeasure::const0();
    inst.quality = DecomposableMeasure::const0();
    inst.bound = 0;
    inst.k = 14;
    auto r = solve_bct_integer_weight(inst, 0);
    CHECK(r.witnesses.size() == 14);
    for (std::size_t i = 0; i < r.witnesses.size(); ++i)
        for (std::size_t j = i + 1; j < r.witnesses.size(); ++j)
            CHECK_FALSE(r.witnesses[i] == r.witnesses[j]);
    // asking for one more is infeasible
    inst.k = 15;
    CHECK_THROWS_AS(solve_bct_integer_weight(inst, 0), Infeasible);
}

TEST_CASE("integer-quality DP equals brute force on small instances") {
    std::mt19937_64 rng(11);
    auto p = convex_hexagon();
    for (int trial = 0; trial < 12; ++trial) {
        std::map<Diagonal, double> atoms;
        std::uniform_int_distribution<int> val(0, 3);
        for (const Diagonal& d : p->diagonal_universe()) atoms[d] = val(rng);
        BctInstance inst;
        inst.polygon = p;
        inst.weight = DecomposableMeasure::euclidean();
        inst.quality =
            DecomposableMeasure::edge_table("q", Combiner::Sum, atoms, true);
        inst.bound = trial % 5;
        inst.k = 3;
        KBestList got, want = oracle_bct(inst);
        std::int64_t got_count = -1;
        try {
            got = solve_bct_integer_quality(inst);
            got_count = static_cast<std::int64_t>(got.witnesses.size());
        } catch (const Infeasible& e) {
            got_count = e.count_found;
        }
        if (got_count == inst.k) {
            for (int i = 0; i < inst.k; ++i)
                CHECK(got.values[i] == doctest::Approx(want.values[i]).epsilon(1e-9));
            for (const auto& w : got.witnesses)
                CHECK(evaluate_measure(inst.quality, w) <= inst.bound + 1e-9);
        } else {
            CHECK(got_count == static_cast<std::int64_t>(want.witnesses.size()));
        }
    }
}

TEST_CASE("min/max combiner: square max-edge tie") {
    BctInstance inst;
    inst.polygon = unit_square();
    inst.weight = DecomposableMeasure::max_edge();
    inst.quality = DecomposableMeasure::const0();
    inst.bound = 0;
    inst.k = 2;
    // weight is real-valued with max combiner; quality integral -> Case 2 engine
    auto r = solve_bct_minmax(inst, 0);
    CHECK(r.witnesses.size() == 2);
    CHECK(r.values[0] == doctest::Approx(std::sqrt(2.0)));
    CHECK(r.values[1] == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("min/max combiner: pentagon minimize max table weight") {
    std::map<Diagonal, double> atoms = {{Diagonal(0, 2), 5},
                                        {Diagonal(0, 3), 1},
                                        {Diagonal(1, 3), 2},
                                        {Diagonal(1, 4), 2},
                                        {Diagonal(2, 4), 3}};
    BctInstance inst;
    inst.polygon = convex_pentagon();
    inst.weight = DecomposableMeasure::edge_table("w", Combiner::Max, atoms, true);
    inst.quality = DecomposableMeasure::const0();
    inst.bound = 0;
    inst.k = 1;
    auto r = solve_bct_minmax(inst, 5);
    CHECK(r.values[0] == 2.0);
    CHECK(evaluate_measure(inst.weight, r.witnesses[0]) == 2.0);
}

TEST_CASE("min/max combiner: n=3 empty fold convention") {
    auto tri = make_polygon({{0, 0}, {3, 0}, {0, 3}});
    BctInstance inst;
    inst.polygon = tri;
    inst.weight = DecomposableMeasure::min_edge();  // min over no diagonals = +inf
    inst.quality = DecomposableMeasure::const0();
    inst.bound = 0;
    inst.k = 1;
    auto r = solve_bct_minmax(inst, 0);
    CHECK(r.witnesses.size() == 1);
    CHECK(r.values[0] == kInf);
    CHECK(r.witnesses[0].diagonals().empty());
}

TEST_CASE("sigma_star pins") {
    CHECK(sigma_star(skinny_quad(), DecomposableMeasure::euclidean()) ==
          doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
    CHECK(sigma_star(unit_square(), DecomposableMeasure::euclidean()) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    auto hex = convex_hexagon();
    BctInstance probe;
    probe.polygon = hex;
    probe.weight = DecomposableMeasure::euclidean();
    probe.quality = DecomposableMeasure::const0();
    probe.bound = 0;
    probe.k = 1;
    auto want = oracle_bct(probe);
    CHECK(sigma_star(hex, DecomposableMeasure::euclidean()) ==
          doctest::Approx(want.values[0]).epsilon(1e-9));
}

TEST_CASE("FPTAS: skinny quadrilateral distinguishes the diagonals") {
    BctInstance inst;
    inst.polygon = skinny_quad();
    inst.weight = DecomposableMeasure::const0();
    inst.quality = DecomposableMeasure::euclidean();
    inst.bound = std::sqrt(5.0) + 0.01;
    inst.k = 1;
    auto r = solve_bct_fptas(inst, 0.5);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0].diagonals() == std::vector<Diagonal>{Diagonal(1, 3)});
    CHECK(evaluate_measure(inst.quality, r.witnesses[0]) <= 1.5 * inst.bound + 1e-9);
}

TEST_CASE("FPTAS: huge epsilon still returns a weight-optimal triangulation") {
    BctInstance inst;
    inst.polygon = convex_pentagon();
    inst.weight = pentagon_fan0_frequency();
    inst.quality = DecomposableMeasure::euclidean();
    inst.bound = 50.0;
    inst.k = 1;
    auto r = solve_bct_fptas(inst, 1e6);
    REQUIRE(r.witnesses.size() == 1);
    // weight 0 achievable (fans at 1 or 4 avoid both counted diagonals)
    CHECK(evaluate_measure(inst.weight, r.witnesses[0]) == 0.0);
}

TEST_CASE("integer-quality DP on the kite tower") {
    auto kites = gen_kites({1, 4, 4, 6});
    BctInstance inst;
    inst.polygon = kites.polygon;
    inst.weight = DecomposableMeasure::euclidean();
    inst.quality = kites.excess;
    inst.bound = 7;
    inst.k = 1;
    auto r = solve_bct_integer_quality(inst);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(evaluate_measure(kites.excess, r.witnesses[0]) <= 7.0);

    // maximizing the euclidean weight under excess <= 7 buys the full +14 of
    // scaled length: the excess-7 subset {1,6}
    inst.sense = Sense::Maximize;
    double L = sigma_star(kites.polygon, DecomposableMeasure::euclidean());
    auto mx = solve_bct_integer_quality(inst);
    CHECK(mx.values[0] == doctest::Approx(L + 14.0).epsilon(1e-9));
    CHECK(evaluate_measure(kites.excess, mx.witnesses[0]) == 7.0);

    // only two triangulations have excess <= 2 (subsets {} and {1})
    inst.sense = Sense::Minimize;
    inst.bound = 2;
    inst.k = 3;
    try {
        solve_bct_integer_quality(inst);
        FAIL("expected Infeasible");
    } catch (const Infeasible& e) {
        CHECK(e.count_found == 2);
    }
}

TEST_CASE("FPTAS on the kite tower: maximize horizontals under a length budget") {
    auto kites = gen_kites({1, 4, 4, 6});
    std::map<Diagonal, double> count_atoms;
    for (const auto& kite : kites.kites) count_atoms[kite.horizontal] = 1.0;
    BctInstance inst;
    inst.polygon = kites.polygon;
    inst.weight = DecomposableMeasure::edge_table("horizontals", Combiner::Sum, count_atoms, true,
                                                  true);
    inst.quality = DecomposableMeasure::euclidean();
    double L = sigma_star(kites.polygon, inst.quality);
    // the paper instance's target V = 7 in the generator's x2 length scaling
    inst.bound = L + 2 * 7;
    inst.sense = Sense::Maximize;
    inst.k = 1;
    auto r = solve_bct_fptas(inst, 0.1);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(evaluate_measure(inst.quality, r.witnesses[0]) <= 1.1 * inst.bound + 1e-9);

    // oracle: the best horizontal count within the true budget is 2
    auto all = enumerate_all(kites.polygon);
    double best = 0;
    for (const auto& t : all.triangulations)
        if (evaluate_measure(inst.quality, t) <= inst.bound + 1e-9)
            best = std::max(best, evaluate_measure(inst.weight, t));
    CHECK(best == 2.0);
    CHECK(evaluate_measure(inst.weight, r.witnesses[0]) >= best);
}

TEST_CASE("solvers are safe to run concurrently on shared inputs") {
    auto p = convex_hexagon();
    std::map<Diagonal, double> atoms;
    int c = 0;
    for (const Diagonal& d : p->diagonal_universe()) atoms[d] = (c++ % 2);
    BctInstance inst;
    inst.polygon = p;
    inst.weight = DecomposableMeasure::edge_table("w", Combiner::Sum, std::move(atoms), true);
    inst.quality = DecomposableMeasure::euclidean();
    inst.bound = sigma_star(p, inst.quality) * 1.2;
    inst.k = 3;
    KBestList seq = solve_bct_integer_weight(inst, 9);
    std::vector<std::thread> threads;
    std::vector<KBestList> results(4);
    for (int i = 0; i < 4; ++i)
        threads.emplace_back([&, i] { results[i] = solve_bct_integer_weight(inst, 9); });
    for (auto& t : threads) t.join();
    for (const auto& r : results) {
        CHECK(r.values == seq.values);
        for (std::size_t i = 0; i < r.witnesses.size(); ++i)
            CHECK(r.witnesses[i] == seq.witnesses[i]);
    }
}

TEST_CASE("maximize sense mirrors minimize") {
    auto p = convex_pentagon();
    BctInstance inst;
    inst.polygon = p;
    inst.weight = pentagon_fan0_frequency();
    inst.quality = DecomposableMeasure::const0();
    inst.bound = 0;
    inst.sense = Sense::Maximize;
    inst.k = 2;
    auto r = solve_bct_integer_weight(inst, 2);
    CHECK(r.values == std::vector<double>{2, 1});  // fan0 shares both, then one
}

TEST_CASE("min/max combiner fuzz against the oracle") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> val(0, 4);
    for (int trial = 0; trial < 20; ++trial) {
        auto p = trial % 2 ? convex_hexagon()
                           : make_polygon({{0, 0}, {6, 0}, {7, 3}, {3, 1}, {4, 5}, {0, 4}});
        if (static_cast<int>(p->diagonal_universe().size()) < 1) continue;
        std::map<Diagonal, double> atoms;
        std::int64_t cap = 0;
        for (const Diagonal& d : p->diagonal_universe()) {
            atoms[d] = val(rng);
            cap = std::max<std::int64_t>(cap, static_cast<std::int64_t>(atoms[d]));
        }
        Combiner comb = trial % 4 < 2 ? Combiner::Max : Combiner::Min;

        // A: integral min/max weight (budget side), real quality bound
        {
            BctInstance inst;
            inst.polygon = p;
            inst.weight = DecomposableMeasure::edge_table("w", comb, atoms, true);
            inst.quality = DecomposableMeasure::euclidean();
            inst.bound = sigma_star(p, inst.quality) * 1.3;
            inst.k = 3;
            auto want = oracle_bct(inst);
            try {
                auto got = solve_bct_minmax(inst, cap);
                for (std::size_t i = 0; i < got.witnesses.size(); ++i)
                    CHECK(got.values[i] == want.values[i]);
            } catch (const Infeasible& e) {
                CHECK(e.count_found == static_cast<std::int64_t>(want.witnesses.size()));
            }
        }
        // B: real max-edge weight, integral min-combined quality bound
        {
            BctInstance inst;
            inst.polygon = p;
            inst.weight = DecomposableMeasure::max_edge();
            inst.quality = DecomposableMeasure::edge_table("q", Combiner::Min, atoms, true);
            inst.bound = trial % 5;
            inst.k = 2;
            auto want = oracle_bct(inst);
            try {
                auto got = solve_bct_minmax(inst, cap);
                for (std::size_t i = 0; i < got.witnesses.size(); ++i)
                    CHECK(got.values[i] == doctest::Approx(want.values[i]).epsilon(1e-9));
            } catch (const Infeasible& e) {
                CHECK(e.count_found == static_cast<std::int64_t>(want.witnesses.size()));
            }
        }
    }
}

TEST_CASE("triangle-base measures fuzz against the oracle") {
    std::mt19937_64 rng(311);
    std::uniform_int_distribution<int> val(0, 2);
    std::vector<PolygonPtr> pool = {
        convex_hexagon(),
        make_polygon({{0, 0}, {6, 0}, {7, 3}, {3, 1}, {4, 5}, {0, 4}}),
        make_polygon({{0, 0}, {4, 0}, {6, 3}, {2, 6}, {-2, 3}}),
    };
    for (int trial = 0; trial < 12; ++trial) {
        const auto& p = pool[trial % pool.size()];
        const int n = p->n();
        std::map<Triangle, double> tatoms;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    if (p->is_chord_or_edge(a, b) && p->is_chord_or_edge(b, c) &&
                        p->is_chord_or_edge(a, c))
                        tatoms[Triangle(a, b, c)] = val(rng);
        auto tri_measure =
            DecomposableMeasure::triangle_table("tw", Combiner::Sum, tatoms, true);

        // Case 1: integral triangle-base weight, real edge-base quality
        {
            BctInstance inst;
            inst.polygon = p;
            inst.weight = tri_measure;
            inst.quality = DecomposableMeasure::euclidean();
            inst.bound = sigma_star(p, inst.quality) * 1.25;
            inst.k = 3;
            auto want = oracle_bct(inst);
            try {
                auto got = solve_bct_integer_weight(inst, 2 * (n - 2));
                for (std::size_t i = 0; i < got.witnesses.size(); ++i)
                    CHECK(got.values[i] == want.values[i]);
            } catch (const Infeasible& e) {
                CHECK(e.count_found == static_cast<std::int64_t>(want.witnesses.size()));
            }
        }
        // Case 2: real weight, integral triangle-base quality
        {
            BctInstance inst;
            inst.polygon = p;
            inst.weight = DecomposableMeasure::euclidean();
            inst.quality = tri_measure;
            inst.bound = trial % 4;
            inst.k = 2;
            auto want = oracle_bct(inst);
            try {
                auto got = solve_bct_integer_quality(inst);
                for (std::size_t i = 0; i < got.witnesses.size(); ++i)
                    CHECK(got.values[i] == doctest::Approx(want.values[i]).epsilon(1e-9));
            } catch (const Infeasible& e) {
                CHECK(e.count_found == static_cast<std::int64_t>(want.witnesses.size()));
            }
        }
    }
}

TEST_CASE("angle-measure constraints against the oracle") {
    // maximize-the-minimum-angle style constraints: const0 objective, angle
    // quality tracked with an at-least / at-most bound
    std::vector<PolygonPtr> pool = {
        convex_hexagon(),
        make_polygon({{0, 0}, {6, 0}, {7, 3}, {3, 1}, {4, 5}, {0, 4}}),
        skinny_quad(),
    };
    for (const auto& p : pool) {
        auto all = enumerate_all(p);
        for (auto [measure, sense] :
             {std::pair{DecomposableMeasure::min_angle(), ConstraintSense::AtLeast},
              std::pair{DecomposableMeasure::max_angle(), ConstraintSense::AtMost}}) {
            // pick a bound between the extremes so both outcomes occur
            double lo = kInf, hi = -kInf;
            for (const auto& t : all.triangulations) {
                double v = evaluate_measure(measure, t);
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            double bound = (lo + hi) / 2;
            BctInstance inst;
            inst.polygon = p;
            inst.weight = DecomposableMeasure::const0();
            inst.quality = measure;
            inst.bound = bound;
            inst.constraint_sense = sense;
            inst.k = 1;
            auto want = oracle_bct(inst);
            try {
                auto got = solve_bct_integer_weight(inst, 0);
                REQUIRE(want.witnesses.size() >= 1);
                double q = evaluate_measure(measure, got.witnesses[0]);
                if (sense == ConstraintSense::AtLeast)
                    CHECK(q >= bound - 1e-9);
                else
                    CHECK(q <= bound + 1e-9);
            } catch (const Infeasible&) {
                CHECK(want.witnesses.empty());
            }
        }
    }
}

TEST_CASE("at-least constraints mirror the oracle") {
    std::mt19937_64 rng(78);
    std::uniform_int_distribution<int> val(0, 3);
    auto p = convex_pentagon();
    for (int trial = 0; trial < 10; ++trial) {
        std::map<Diagonal, double> atoms;
        for (const Diagonal& d : p->diagonal_universe()) atoms[d] = val(rng);
        BctInstance inst;
        inst.polygon = p;
        inst.weight = DecomposableMeasure::euclidean();
        inst.quality = DecomposableMeasure::edge_table("q", Combiner::Sum, atoms, true);
        inst.bound = trial % 4;
        inst.constraint_sense = ConstraintSense::AtLeast;
        inst.k = 2;
        auto want = oracle_bct(inst);
        try {
            auto got = solve_bct_integer_quality(inst);
            for (std::size_t i = 0; i < got.witnesses.size(); ++i) {
                CHECK(got.values[i] == doctest::Approx(want.values[i]).epsilon(1e-9));
                CHECK(evaluate_measure(inst.quality, got.witnesses[i]) >= inst.bound - 1e-9);
            }
        } catch (const Infeasible& e) {
            CHECK(e.count_found == static_cast<std::int64_t>(want.witnesses.size()));
        }
    }
}

TEST_CASE("the cell guard rejects oversized pseudo-polynomial tables") {
    BctInstance inst;
    inst.polygon = convex_hexagon();
    inst.weight = DecomposableMeasure::const0();
    inst.quality = DecomposableMeasure::const0();
    inst.k = 1;
    CHECK_THROWS_AS(solve_bct_integer_weight(inst, kCellGuard), ResourceLimit);
}

TEST_CASE("bound monotonicity: enlarging B never worsens the optimum") {
    auto p = convex_hexagon();
    std::map<Diagonal, double> atoms;
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> val(0, 2);
    for (const Diagonal& d : p->diagonal_universe()) atoms[d] = val(rng);
    BctInstance inst;
    inst.polygon = p;
    inst.weight = DecomposableMeasure::euclidean();
    inst.quality = DecomposableMeasure::edge_table("q", Combiner::Sum, atoms, true);
    inst.k = 1;
    double prev = kInf;
    for (int b = 0; b <= 6; ++b) {
        inst.bound = b;
        try {
            auto r = solve_bct_integer_quality(inst);
            CHECK(r.values[0] <= prev + 1e-9);
            prev = r.values[0];
        } catch (const Infeasible&) {
            CHECK(prev == kInf);
        }
    }
}
