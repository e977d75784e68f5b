#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace salsa {

// Dense node index in [0, n).
using NodeId = std::uint32_t;

// Undirected edge, stored with u < v.
struct Edge {
    NodeId u;
    NodeId v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sparse undirected simple graph in CSR form.
//
// Edges are kept canonical: every edge has u < v and the edge list is sorted
// lexicographically, so two graphs built from the same edge set compare equal
// regardless of input order. Weights, when present, are aligned with edges().
class Graph {
public:
    Graph() = default;

    // Throws std::invalid_argument on self-loops, duplicate edges, node ids
    // out of range, or a weight vector whose length differs from the edge count.
    Graph(std::size_t n, std::vector<Edge> edges,
          std::optional<std::vector<double>> weights = std::nullopt);

    std::size_t num_nodes() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }

    std::span<const Edge> edges() const { return edges_; }

    bool has_weights() const { return weights_.has_value(); }
    // Empty span for unweighted graphs.
    std::span<const double> weights() const;

    // Ascending neighbor ids of v. Throws std::out_of_range for v >= n.
    std::span<const NodeId> neighbors(NodeId v) const;
    // Edge indices parallel to neighbors(v).
    std::span<const std::size_t> incident_edges(NodeId v) const;
    std::size_t degree(NodeId v) const { return neighbors(v).size(); }

    // Index into edges() of {u, v}, if present.
    std::optional<std::size_t> find_edge(NodeId u, NodeId v) const;
    bool has_edge(NodeId u, NodeId v) const { return find_edge(u, v).has_value(); }

    // Same topology with the given per-edge weights.
    Graph with_weights(std::vector<double> weights) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_ && a.weights_ == b.weights_;
    }

private:
    void build_adjacency();

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::optional<std::vector<double>> weights_;
    std::vector<std::size_t> offsets_{0};
    std::vector<NodeId> adjacency_;
    std::vector<std::size_t> adjacency_edge_;
};

// True iff a BFS from node 0 reaches every node. Requires n >= 1.
bool is_connected(const Graph& g);

// Throws std::invalid_argument unless the graph carries weights that are all
// finite, strictly positive and pairwise distinct.
void require_valid_weights(const Graph& g);

}  // namespace salsa
