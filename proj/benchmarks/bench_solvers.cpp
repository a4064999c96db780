#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "dtri/bct.hpp"
#include "dtri/oracle.hpp"

namespace {

dtri::PolygonPtr convex_gon(int n) {
    std::vector<dtri::Point> pts;
    const double tau = 6.283185307179586;
    for (int i = 0; i < n; ++i) {
        double a = tau * i / n + 0.3;
        pts.push_back({static_cast<dtri::Coord>(std::llround(std::cos(a) * 10000)),
                       static_cast<dtri::Coord>(std::llround(std::sin(a) * 10000))});
    }
    return dtri::make_polygon(std::move(pts));
}

dtri::DecomposableMeasure random_weights(const dtri::Polygon& p, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> val(0, 2);
    std::map<dtri::Diagonal, double> atoms;
    for (const auto& d : p.diagonal_universe()) atoms[d] = val(rng);
    return dtri::DecomposableMeasure::edge_table("w", dtri::Combiner::Sum, std::move(atoms), true);
}

void BM_enumerate(benchmark::State& state) {
    auto p = convex_gon(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(dtri::enumerate_all(p).count);
}
BENCHMARK(BM_enumerate)->Arg(8)->Arg(10)->Arg(12);

void BM_bct_integer_weight(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto p = convex_gon(n);
    dtri::BctInstance inst;
    inst.polygon = p;
    inst.weight = random_weights(*p, 42);
    inst.quality = dtri::DecomposableMeasure::euclidean();
    inst.bound = dtri::sigma_star(p, inst.quality) * 1.25;
    inst.k = 5;
    for (auto _ : state)
        benchmark::DoNotOptimize(dtri::solve_bct_integer_weight(inst, 2 * (n - 3)));
}
BENCHMARK(BM_bct_integer_weight)->Arg(8)->Arg(12)->Arg(16)->Arg(24);

void BM_mwt(benchmark::State& state) {
    auto p = convex_gon(static_cast<int>(state.range(0)));
    auto m = dtri::DecomposableMeasure::euclidean();
    for (auto _ : state) benchmark::DoNotOptimize(dtri::sigma_star(p, m));
}
BENCHMARK(BM_mwt)->Arg(16)->Arg(32)->Arg(48);

}  // namespace

BENCHMARK_MAIN();
