#include "salsa/generation.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <memory>
#include <mutex>
#include <thread>

#include "salsa/algorithms.hpp"
#include "salsa/generators.hpp"
#include "salsa/oracles.hpp"
#include "salsa/random.hpp"

namespace salsa {

namespace fs = std::filesystem;

std::uint64_t record_stream_index(Algorithm algorithm, std::string_view split, std::size_t index) {
    // FNV-1a over "<algorithm>/<split>".
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&](std::string_view s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 0x100000001b3ULL;
        }
    };
    feed(to_string(algorithm));
    feed("/");
    feed(split);
    return mix64(h) + index;
}

std::string record_id(std::string_view split, std::size_t index) {
    return std::string(split) + ":" + std::to_string(index);
}

GeneratedRecord generate_record(Algorithm algorithm, std::uint64_t master_seed, const SplitSpec& split,
                                std::size_t index) {
    if (split.sizes.empty()) throw std::invalid_argument("split '" + split.name + "' has no sizes");
    Rng rng = derive_rng({master_seed, record_stream_index(algorithm, split.name, index)});

    GeneratorSpec spec;
    spec.family = split.family;
    spec.n = split.sizes[rng.below(split.sizes.size())];
    GeneratedGraph generated = generate(spec, rng);
    Graph graph = needs_weights(algorithm) ? assign_weights(generated.graph, rng) : std::move(generated.graph);
    auto shared = std::make_shared<const Graph>(std::move(graph));

    GeneratedRecord out;
    out.record.id = record_id(split.name, index);
    out.record.trajectory = run_algorithm(algorithm, shared, rng);
    out.record.length = out.record.trajectory.length();
    out.info = {out.record.id, shared->num_nodes(), shared->num_edges(), generated.params};

    const auto problems = audit_trajectory(out.record.trajectory);
    if (!problems.empty()) throw OracleFailure(out.record.id + ": " + problems.front());
    const auto verdict = oracles::verify_trajectory(out.record.trajectory);
    if (!verdict) throw OracleFailure(out.record.id + ": " + verdict.reason);
    return out;
}

namespace {

struct EncodedRecord {
    std::string line;
    GraphRecordInfo info;
};

EncodedRecord encode_one(Algorithm algorithm, std::uint64_t seed, const SplitSpec& split, std::size_t index) {
    auto generated = generate_record(algorithm, seed, split, index);
    return {encode_record(generated.record), std::move(generated.info)};
}

// Fills slots[i] for i in [0, slots.size()) with record first + i.
void fill_chunk(const GenerationOptions& options, const SplitSpec& split, std::size_t first,
                std::vector<EncodedRecord>& slots) {
    const unsigned workers = std::min<std::size_t>(std::max(1u, options.jobs), slots.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < slots.size(); ++i) {
            slots[i] = encode_one(options.algorithm, options.master_seed, split, first + i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < slots.size(); i = next++) {
            try {
                slots[i] = encode_one(options.algorithm, options.master_seed, split, first + i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = slots.size();
            }
        }
    };
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work);
    threads.clear();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

DatasetManifest generate_dataset(const GenerationOptions& options, const fs::path& out_dir) {
    validate_splits(options.splits);
    fs::create_directories(out_dir);

    DatasetManifest manifest;
    manifest.algorithm = options.algorithm;
    manifest.master_seed = options.master_seed;
    manifest.conventions = default_conventions();

    for (const auto& split : options.splits) {
        SplitManifest sm{split, {}};
        sm.graphs.reserve(split.count);
        RecordWriter writer(out_dir / sm.file_name());

        // Large graphs produce large records; keep fewer of them in flight.
        const std::size_t largest = *std::max_element(split.sizes.begin(), split.sizes.end());
        const std::size_t per_worker = largest >= 800 ? 1 : largest >= 100 ? 8 : 64;
        const std::size_t chunk = per_worker * std::max(1u, options.jobs);

        std::vector<EncodedRecord> slots;
        for (std::size_t first = 0; first < split.count; first += chunk) {
            slots.assign(std::min(chunk, split.count - first), EncodedRecord{});
            fill_chunk(options, split, first, slots);
            for (auto& slot : slots) {
                writer.write_line(slot.line);
                sm.graphs.push_back(std::move(slot.info));
            }
        }
        writer.close();
        if (options.on_split_done) options.on_split_done(split.name, writer.count());
        manifest.splits.push_back(std::move(sm));
    }
    write_manifest(manifest, out_dir);
    return manifest;
}

}  // namespace salsa
