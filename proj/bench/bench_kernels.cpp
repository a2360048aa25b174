// Serial reference vs OpenMP kernel, same inputs. Thread count is the second range argument.

#include "fankit/decomposition.hpp"
#include "fankit/extremal.hpp"
#include "fankit/fan.hpp"
#include "fankit/oracle.hpp"
#include "fankit/parallel.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace fankit;

namespace {

Graph dense_random(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                es.push_back({u, v});
    return Graph::from_edges(n, es);
}

void BM_EnumerateSerial(benchmark::State& st) {
    const auto g = dense_random(static_cast<int>(st.range(0)), 1);
    for (auto _ : st)
        benchmark::DoNotOptimize(enumerate_copies_serial(g, FanSpec(2, 3)));
}

void BM_EnumerateParallel(benchmark::State& st) {
    const auto g = dense_random(static_cast<int>(st.range(0)), 1);
    par::ScopedThreads t(static_cast<int>(st.range(1)));
    for (auto _ : st)
        benchmark::DoNotOptimize(enumerate_copies(g, FanSpec(2, 3)));
}

void BM_AllGraphsSerial(benchmark::State& st) {
    for (auto _ : st)
        benchmark::DoNotOptimize(all_graphs_serial(static_cast<int>(st.range(0))));
}

void BM_AllGraphsParallel(benchmark::State& st) {
    par::ScopedThreads t(static_cast<int>(st.range(1)));
    for (auto _ : st)
        benchmark::DoNotOptimize(all_graphs(static_cast<int>(st.range(0))));
}

void BM_MaxCutSerial(benchmark::State& st) {
    const auto g = turan_graph(static_cast<int>(st.range(0)), 3).with_edges_added({{0, 1}, {0, 2}, {3, 4}});
    for (auto _ : st)
        benchmark::DoNotOptimize(max_cut_partition_serial(g, 3, 7, 16));
}

void BM_MaxCutParallel(benchmark::State& st) {
    const auto g = turan_graph(static_cast<int>(st.range(0)), 3).with_edges_added({{0, 1}, {0, 2}, {3, 4}});
    par::ScopedThreads t(static_cast<int>(st.range(1)));
    for (auto _ : st)
        benchmark::DoNotOptimize(max_cut_partition(g, 3, 7, 16));
}

} // namespace

BENCHMARK(BM_EnumerateSerial)->Arg(24)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->ArgsProduct({{24, 32}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AllGraphsSerial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AllGraphsParallel)->ArgsProduct({{7, 8}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaxCutSerial)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaxCutParallel)->ArgsProduct({{60, 120}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
