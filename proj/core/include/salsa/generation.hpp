#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "salsa/dataset_io.hpp"
#include "salsa/splits.hpp"
#include "salsa/trajectory.hpp"

namespace salsa {

// A trajectory failed its oracle or structural audit. Indicates an engine bug.
class OracleFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Stream index of record `index` in `split`: a hash of algorithm and split
// name plus the index, so records are independent of split order and of
// how work is scheduled.
std::uint64_t record_stream_index(Algorithm algorithm, std::string_view split, std::size_t index);

// "<split>:<index>"
std::string record_id(std::string_view split, std::size_t index);

struct GeneratedRecord {
    Record record;
    GraphRecordInfo info;
};

// Builds, audits and oracle-checks one record. The result is a pure function
// of the arguments. Throws OracleFailure if a check fails.
GeneratedRecord generate_record(Algorithm algorithm, std::uint64_t master_seed, const SplitSpec& split,
                                std::size_t index);

struct GenerationOptions {
    Algorithm algorithm = Algorithm::bfs;
    std::uint64_t master_seed = 0;
    std::vector<SplitSpec> splits;
    unsigned jobs = 1;
    // Called after each split is written with (split name, records written).
    std::function<void(std::string_view, std::size_t)> on_split_done = {};
};

// Generates every split into out_dir (created if needed) and writes the
// manifest last. Output bytes do not depend on options.jobs.
DatasetManifest generate_dataset(const GenerationOptions& options, const std::filesystem::path& out_dir);

}  // namespace salsa
