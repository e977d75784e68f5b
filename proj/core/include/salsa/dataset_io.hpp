#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "salsa/generators.hpp"
#include "salsa/splits.hpp"
#include "salsa/trajectory.hpp"

namespace salsa {

inline constexpr int kFormatVersion = 1;
inline constexpr std::string_view kManifestFile = "manifest.json";

// Raised for unreadable datasets: version mismatch, malformed manifest, or a
// corrupted record line. line() is 1-based, 0 when not tied to a line.
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& what, std::filesystem::path file = {}, std::size_t line = 0);

    const std::filesystem::path& file() const { return file_; }
    std::size_t line() const { return line_; }

private:
    std::filesystem::path file_;
    std::size_t line_;
};

// Generator parameters of one stored graph, kept in the manifest.
struct GraphRecordInfo {
    std::string id;
    std::size_t n = 0;
    std::size_t num_edges = 0;
    AcceptedParams params;

    friend bool operator==(const GraphRecordInfo&, const GraphRecordInfo&) = default;
};

struct SplitManifest {
    SplitSpec spec;
    // Per-record info in file order; size equals spec.count.
    std::vector<GraphRecordInfo> graphs;

    std::string file_name() const { return spec.name + ".jsonl"; }

    friend bool operator==(const SplitManifest&, const SplitManifest&) = default;
};

struct DatasetManifest {
    int format_version = kFormatVersion;
    Algorithm algorithm = Algorithm::bfs;
    std::uint64_t master_seed = 0;
    std::vector<SplitManifest> splits;
    // Free-form notes on data conventions (weight distribution, RNG, ...).
    std::map<std::string, std::string> conventions;

    const SplitManifest& split(std::string_view name) const;

    friend bool operator==(const DatasetManifest&, const DatasetManifest&) = default;
};

// Conventions every generated manifest records.
std::map<std::string, std::string> default_conventions();

struct Record {
    std::string id;
    Trajectory trajectory;
    // Step count as stored; equals trajectory.length() unless hints were skipped.
    std::size_t length = 0;
};

// One canonical line without the trailing newline.
std::string encode_record(const Record& record);

// Parses one line. With include_hints false, hints and per-step inputs are
// skipped (cheaper for scoring and statistics). Throws FormatError.
Record decode_record(std::string_view line, Algorithm algorithm, bool include_hints = true);

// Graph and id only, skipping all features.
std::pair<std::string, Graph> decode_graph(std::string_view line);

void write_manifest(const DatasetManifest& manifest, const std::filesystem::path& dir);
// Throws FormatError on a missing file, malformed content, or format version mismatch.
DatasetManifest read_manifest(const std::filesystem::path& dir);

// Appends canonical record lines (LF terminated) to one split file.
class RecordWriter {
public:
    explicit RecordWriter(const std::filesystem::path& file);

    void write(const Record& record);
    void write_line(std::string_view encoded);
    std::size_t count() const { return count_; }
    // Flushes and reports I/O failure as std::runtime_error.
    void close();

private:
    std::filesystem::path path_;
    std::ofstream out_;
    std::size_t count_ = 0;
};

// Streams records from one split file, one line at a time.
class RecordReader {
public:
    RecordReader(const std::filesystem::path& file, Algorithm algorithm, bool include_hints = true);

    // Next record, or nullopt at end of file. Throws FormatError naming the line.
    std::optional<Record> next();
    // Next record's graph only.
    std::optional<std::pair<std::string, Graph>> next_graph();
    std::size_t line() const { return line_; }

private:
    std::optional<std::string> next_line();

    std::filesystem::path path_;
    std::ifstream in_;
    Algorithm algorithm_;
    bool include_hints_;
    std::size_t line_ = 0;
};

using SplitRecords = std::map<std::string, std::vector<Record>>;

// Writes manifest.json and one <split>.jsonl per manifest split. Every record
// must belong to manifest.algorithm and pass the structural audit; counts
// must match. Throws std::invalid_argument on schema mismatch and
// std::runtime_error on I/O failure.
void write_dataset(const SplitRecords& records, const DatasetManifest& manifest,
                   const std::filesystem::path& out_dir);

struct Dataset {
    DatasetManifest manifest;
    SplitRecords records;
};

// Loads a whole dataset into memory. Prefer RecordReader for large splits.
Dataset read_dataset(const std::filesystem::path& dir);

}  // namespace salsa
