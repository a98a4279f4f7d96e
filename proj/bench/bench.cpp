// Serial reference vs OpenMP for the hot kernels. Arg 0 = serial, 1 = parallel.

#include "adaptrix/idestim.hpp"
#include "adaptrix/lle.hpp"
#include "adaptrix/umap.hpp"

#include <benchmark/benchmark.h>

using namespace adaptrix;

namespace {

Execution mode(const benchmark::State& s) { return s.range(0) ? Execution::parallel : Execution::serial; }

const PointCloud& cloud()
{
    static const PointCloud c = [] {
        ManifoldSpec s;
        s.points_per_manifold = 700;
        s.seed = 1;
        return generate_manifolds(s);
    }();
    return c;
}

const NeighborTable& table()
{
    static const NeighborTable t = build_neighbor_table(cloud(), 201);
    return t;
}

AbideConfig config()
{
    AbideConfig c;
    c.k_max = 200;
    return c;
}

void BM_NeighborTable(benchmark::State& s)
{
    for (auto _ : s) benchmark::DoNotOptimize(build_neighbor_table(cloud(), 101, mode(s)));
}

void BM_KStarPass(benchmark::State& s)
{
    const double q = chi2_quantile_1df(0.95);
    for (auto _ : s) benchmark::DoNotOptimize(select_k_star_all(table(), 3.0, q, config(), mode(s)));
}

void BM_BallCounts(benchmark::State& s)
{
    const std::vector<Index> k(static_cast<std::size_t>(cloud().size()), 150);
    for (auto _ : s) benchmark::DoNotOptimize(ball_counts(table(), k, config(), mode(s)));
}

void BM_LleWeights(benchmark::State& s)
{
    const std::vector<Index> k(static_cast<std::size_t>(cloud().size()), 30);
    for (auto _ : s) benchmark::DoNotOptimize(lle_weights(cloud(), table(), k, mode(s)));
}

void BM_FuzzyGraph(benchmark::State& s)
{
    const std::vector<Index> k(static_cast<std::size_t>(cloud().size()), 30);
    for (auto _ : s) benchmark::DoNotOptimize(fuzzy_graph_star(cloud(), k, mode(s)));
}

}  // namespace

BENCHMARK(BM_NeighborTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KStarPass)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BallCounts)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LleWeights)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FuzzyGraph)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
