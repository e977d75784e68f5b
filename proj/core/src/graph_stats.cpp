#include "salsa/graph_stats.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "canonical_json.hpp"
#include "json.hpp"

namespace salsa {

namespace fs = std::filesystem;

std::vector<MemoryRow> memory_report(const DatasetManifest& manifest) {
    constexpr double kMessageBytes = static_cast<double>(kReferenceHiddenWidth * kReferenceBytesPerValue);
    std::vector<MemoryRow> rows;
    for (const auto& split : manifest.splits) {
        MemoryRow row;
        row.split = split.spec.name;
        row.family = split.spec.family;
        row.size_label = split.spec.size_label();
        row.graphs = split.graphs.size();
        for (const auto& g : split.graphs) {
            const double n = static_cast<double>(g.n);
            row.mean_nodes += n;
            row.mean_sparse_edges += 2.0 * static_cast<double>(g.num_edges);
            row.mean_dense_edges += n * (n - 1.0);
        }
        if (row.graphs > 0) {
            const double count = static_cast<double>(row.graphs);
            row.mean_nodes /= count;
            row.mean_sparse_edges /= count;
            row.mean_dense_edges /= count;
            if (row.mean_sparse_edges > 0) row.dense_to_sparse_ratio = row.mean_dense_edges / row.mean_sparse_edges;
        }
        row.sparse_message_bytes = row.mean_sparse_edges * kMessageBytes;
        row.dense_message_bytes = row.mean_dense_edges * kMessageBytes;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::size_t diameter(const Graph& g) {
    const std::size_t n = g.num_nodes();
    std::vector<std::size_t> dist(n);
    std::vector<NodeId> queue;
    queue.reserve(n);
    std::size_t best = 0;
    constexpr auto kUnseen = static_cast<std::size_t>(-1);
    for (NodeId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), kUnseen);
        queue.assign(1, s);
        dist[s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const NodeId u = queue[head];
            for (NodeId w : g.neighbors(u)) {
                if (dist[w] == kUnseen) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if (queue.size() != n) throw std::invalid_argument("diameter of a disconnected graph");
        best = std::max(best, dist[queue.back()]);
    }
    return best;
}

std::vector<SplitStats> split_statistics(const fs::path& dataset_dir) {
    const DatasetManifest manifest = read_manifest(dataset_dir);
    std::vector<SplitStats> rows;
    for (const auto& split : manifest.splits) {
        SplitStats row;
        row.split = split.spec.name;
        row.family = split.spec.family;
        row.size_label = split.spec.size_label();
        RecordReader reader(dataset_dir / split.file_name(), manifest.algorithm, false);
        while (auto rec = reader.next()) {
            const Graph& g = *rec->trajectory.graph;
            ++row.graphs;
            row.mean_degree += 2.0 * static_cast<double>(g.num_edges()) / static_cast<double>(g.num_nodes());
            for (NodeId v = 0; v < g.num_nodes(); ++v) row.max_degree = std::max(row.max_degree, g.degree(v));
            const std::size_t d = diameter(g);
            row.mean_diameter += static_cast<double>(d);
            row.max_diameter = std::max(row.max_diameter, d);
            row.mean_length += static_cast<double>(rec->length);
            row.max_length = std::max(row.max_length, rec->length);
        }
        if (row.graphs > 0) {
            const double count = static_cast<double>(row.graphs);
            row.mean_degree /= count;
            row.mean_diameter /= count;
            row.mean_length /= count;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_memory_table(const std::vector<MemoryRow>& rows) {
    std::string out = "sparse vs dense execution graph (directed edges; messages at width " +
                      std::to_string(kReferenceHiddenWidth) + " x " + std::to_string(kReferenceBytesPerValue) +
                      " bytes)\n";
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-20s %-9s %6s %7s %14s %14s %9s %12s %12s\n", "split", "family", "n", "graphs",
                  "sparse_edges", "dense_edges", "ratio", "sparse_MiB", "dense_MiB");
    out += buf;
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%-20s %-9s %6s %7zu %14.1f %14.1f %8.1fx %12.2f %12.2f\n", r.split.c_str(),
                      std::string(to_string(r.family)).c_str(), r.size_label.c_str(), r.graphs, r.mean_sparse_edges,
                      r.mean_dense_edges, r.dense_to_sparse_ratio, r.sparse_message_bytes / (1024.0 * 1024.0),
                      r.dense_message_bytes / (1024.0 * 1024.0));
        out += buf;
    }
    return out;
}

std::string format_stats_table(const std::vector<SplitStats>& rows) {
    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-20s %-9s %6s %7s %11s %10s %13s %12s %11s %10s\n", "split", "family", "n",
                  "graphs", "mean_degree", "max_degree", "mean_diameter", "max_diameter", "mean_steps", "max_steps");
    out += buf;
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%-20s %-9s %6s %7zu %11.3f %10zu %13.2f %12zu %11.2f %10zu\n", r.split.c_str(),
                      std::string(to_string(r.family)).c_str(), r.size_label.c_str(), r.graphs, r.mean_degree,
                      r.max_degree, r.mean_diameter, r.max_diameter, r.mean_length, r.max_length);
        out += buf;
    }
    return out;
}

std::string format_stats_json(const std::vector<MemoryRow>& memory, const std::vector<SplitStats>& stats) {
    using nlohmann::json;
    json mem = json::array();
    for (const auto& r : memory) {
        mem.push_back({{"split", r.split},
                       {"family", std::string(to_string(r.family))},
                       {"size", r.size_label},
                       {"graphs", r.graphs},
                       {"mean_nodes", r.mean_nodes},
                       {"mean_sparse_edges", r.mean_sparse_edges},
                       {"mean_dense_edges", r.mean_dense_edges},
                       {"dense_to_sparse_ratio", r.dense_to_sparse_ratio},
                       {"sparse_message_bytes", r.sparse_message_bytes},
                       {"dense_message_bytes", r.dense_message_bytes}});
    }
    json st = json::array();
    for (const auto& r : stats) {
        st.push_back({{"split", r.split},
                      {"family", std::string(to_string(r.family))},
                      {"size", r.size_label},
                      {"graphs", r.graphs},
                      {"mean_degree", r.mean_degree},
                      {"max_degree", r.max_degree},
                      {"mean_diameter", r.mean_diameter},
                      {"max_diameter", r.max_diameter},
                      {"mean_length", r.mean_length},
                      {"max_length", r.max_length}});
    }
    return canonical::dump(json{{"memory", std::move(mem)}, {"graphs", std::move(st)}}) + "\n";
}

}  // namespace salsa
