#include <benchmark/benchmark.h>

#include "salsa/generators.hpp"
#include "salsa/random.hpp"

using namespace salsa;

namespace {

void run_family(benchmark::State& state, Family family) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::uint64_t stream = 0;
    std::size_t edges = 0;
    for (auto _ : state) {
        Rng rng = derive_rng({1, stream++});
        auto g = generate({family, n}, rng);
        edges += g.graph.num_edges();
        benchmark::DoNotOptimize(g);
    }
    state.counters["edges/graph"] = benchmark::Counter(static_cast<double>(edges) / static_cast<double>(state.iterations()));
}

void BM_Er(benchmark::State& state) { run_family(state, Family::er); }
void BM_Ws(benchmark::State& state) { run_family(state, Family::ws); }
void BM_Delaunay(benchmark::State& state) { run_family(state, Family::delaunay); }

void BM_AssignWeights(benchmark::State& state) {
    Rng rng = derive_rng({2, 0});
    const Graph g = generate({Family::delaunay, static_cast<std::size_t>(state.range(0))}, rng).graph;
    for (auto _ : state) benchmark::DoNotOptimize(assign_weights(g, rng));
}

}  // namespace

BENCHMARK(BM_Er)->Arg(16)->Arg(160)->Arg(1600)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Ws)->Arg(16)->Arg(160)->Arg(1600)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Delaunay)->Arg(16)->Arg(160)->Arg(1600)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_AssignWeights)->Arg(1600)->Unit(benchmark::kMicrosecond);
