#include <benchmark/benchmark.h>

#include <memory>

#include "salsa/algorithms.hpp"
#include "salsa/generators.hpp"
#include "salsa/oracles.hpp"
#include "salsa/random.hpp"

using namespace salsa;

namespace {

GraphPtr weighted_er(std::size_t n) {
    Rng rng = derive_rng({3, n});
    Graph g = generate({Family::er, n}, rng).graph;
    return std::make_shared<const Graph>(assign_weights(g, rng));
}

void BM_Trajectory(benchmark::State& state) {
    const auto algorithm = kAllAlgorithms[state.range(0)];
    const auto g = weighted_er(static_cast<std::size_t>(state.range(1)));
    Rng rng = derive_rng({4, 0});
    std::size_t steps = 0;
    for (auto _ : state) {
        auto t = run_algorithm(algorithm, g, rng);
        steps += t.length();
        benchmark::DoNotOptimize(t);
    }
    state.SetLabel(std::string(to_string(algorithm)));
    state.counters["steps"] = benchmark::Counter(static_cast<double>(steps) / static_cast<double>(state.iterations()));
}

void BM_Oracle(benchmark::State& state) {
    const auto algorithm = kAllAlgorithms[state.range(0)];
    const auto g = weighted_er(static_cast<std::size_t>(state.range(1)));
    Rng rng = derive_rng({5, 0});
    const Trajectory t = run_algorithm(algorithm, g, rng);
    for (auto _ : state) benchmark::DoNotOptimize(oracles::verify_trajectory(t));
    state.SetLabel(std::string(to_string(algorithm)));
}

void algorithm_sizes(benchmark::internal::Benchmark* b) {
    for (int a = 0; a < 6; ++a) {
        for (int n : {160, 1600}) b->Args({a, n});
    }
}

}  // namespace

BENCHMARK(BM_Trajectory)->Apply(algorithm_sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Oracle)->Apply(algorithm_sizes)->Unit(benchmark::kMillisecond);
