#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "salsa/dataset_io.hpp"
#include "salsa/graph.hpp"

namespace salsa {

// Hidden width and element size used to turn edge counts into the memory a
// message-passing layer would need for one set of edge messages.
inline constexpr std::size_t kReferenceHiddenWidth = 128;
inline constexpr std::size_t kReferenceBytesPerValue = 4;

// Sparse (input graph) versus dense (complete graph) execution, per split.
struct MemoryRow {
    std::string split;
    Family family = Family::er;
    std::string size_label;
    std::size_t graphs = 0;
    double mean_nodes = 0;
    // Directed edges: 2 |E| for the sparse graph, n (n - 1) for the complete graph.
    double mean_sparse_edges = 0;
    double mean_dense_edges = 0;
    // mean_dense_edges / mean_sparse_edges
    double dense_to_sparse_ratio = 0;
    double sparse_message_bytes = 0;
    double dense_message_bytes = 0;
};

// Computed from the per-graph node and edge counts in the manifest.
std::vector<MemoryRow> memory_report(const DatasetManifest& manifest);

struct SplitStats {
    std::string split;
    Family family = Family::er;
    std::string size_label;
    std::size_t graphs = 0;
    double mean_degree = 0;
    std::size_t max_degree = 0;
    double mean_diameter = 0;
    std::size_t max_diameter = 0;
    double mean_length = 0;
    std::size_t max_length = 0;
};

// Exact hop diameter via one BFS per node. Requires a connected graph.
std::size_t diameter(const Graph& g);

// Streams every split of the dataset once.
std::vector<SplitStats> split_statistics(const std::filesystem::path& dataset_dir);

std::string format_memory_table(const std::vector<MemoryRow>& rows);
std::string format_stats_table(const std::vector<SplitStats>& rows);
std::string format_stats_json(const std::vector<MemoryRow>& memory, const std::vector<SplitStats>& stats);

}  // namespace salsa
