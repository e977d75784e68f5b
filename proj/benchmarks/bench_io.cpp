#include <benchmark/benchmark.h>

#include "salsa/dataset_io.hpp"
#include "salsa/generation.hpp"

using namespace salsa;

namespace {

void BM_EncodeRecord(benchmark::State& state) {
    const auto algorithm = kAllAlgorithms[state.range(0)];
    const SplitSpec split{"bench", Family::delaunay, {160}, 1};
    const Record rec = generate_record(algorithm, 6, split, 0).record;
    std::size_t bytes = 0;
    for (auto _ : state) {
        auto line = encode_record(rec);
        bytes += line.size();
        benchmark::DoNotOptimize(line);
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(bytes));
    state.SetLabel(std::string(to_string(algorithm)));
}

void BM_DecodeRecord(benchmark::State& state) {
    const auto algorithm = kAllAlgorithms[state.range(0)];
    const SplitSpec split{"bench", Family::delaunay, {160}, 1};
    const std::string line = encode_record(generate_record(algorithm, 6, split, 0).record);
    const bool hints = state.range(1) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(decode_record(line, algorithm, hints));
    state.SetBytesProcessed(static_cast<std::int64_t>(line.size() * state.iterations()));
    state.SetLabel(std::string(to_string(algorithm)) + (hints ? "" : " (no hints)"));
}

}  // namespace

BENCHMARK(BM_EncodeRecord)->DenseRange(0, 5)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_DecodeRecord)->ArgsProduct({{0, 1, 2, 3, 4, 5}, {0, 1}})->Unit(benchmark::kMicrosecond);
