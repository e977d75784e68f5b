#include "salsa/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace salsa {

Graph::Graph(std::size_t n, std::vector<Edge> edges, std::optional<std::vector<double>> weights)
    : n_(n) {
    if (weights && weights->size() != edges.size()) {
        throw std::invalid_argument("weight count " + std::to_string(weights->size()) +
                                    " does not match edge count " + std::to_string(edges.size()));
    }
    for (auto& e : edges) {
        if (e.u >= n || e.v >= n) {
            throw std::invalid_argument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        "} out of range for n=" + std::to_string(n));
        }
        if (e.u == e.v) {
            throw std::invalid_argument("self-loop at node " + std::to_string(e.u));
        }
        if (e.u > e.v) std::swap(e.u, e.v);
    }

    std::vector<std::size_t> order(edges.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });

    edges_.reserve(edges.size());
    std::vector<double> sorted_weights;
    if (weights) sorted_weights.reserve(weights->size());
    for (std::size_t i : order) {
        if (!edges_.empty() && edges_.back() == edges[i]) {
            throw std::invalid_argument("duplicate edge {" + std::to_string(edges[i].u) + "," +
                                        std::to_string(edges[i].v) + "}");
        }
        edges_.push_back(edges[i]);
        if (weights) sorted_weights.push_back((*weights)[i]);
    }
    if (weights) weights_ = std::move(sorted_weights);
    build_adjacency();
}

void Graph::build_adjacency() {
    offsets_.assign(n_ + 1, 0);
    for (const auto& e : edges_) {
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());

    adjacency_.resize(2 * edges_.size());
    adjacency_edge_.resize(2 * edges_.size());
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    // Edges are sorted by (u, v), so filling in edge order leaves each
    // adjacency row sorted: for row x, entries with x as v come from edges
    // with u < x (visited first, ascending u), entries with x as u follow.
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        adjacency_[cursor[e.v]] = e.u;
        adjacency_edge_[cursor[e.v]++] = i;
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        adjacency_[cursor[e.u]] = e.v;
        adjacency_edge_[cursor[e.u]++] = i;
    }
}

std::span<const double> Graph::weights() const {
    if (!weights_) return {};
    return *weights_;
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
    if (v >= n_) {
        throw std::out_of_range("node " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
    }
    return std::span<const NodeId>(adjacency_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::span<const std::size_t> Graph::incident_edges(NodeId v) const {
    if (v >= n_) {
        throw std::out_of_range("node " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
    }
    return std::span<const std::size_t>(adjacency_edge_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::optional<std::size_t> Graph::find_edge(NodeId u, NodeId v) const {
    if (u >= n_ || v >= n_ || u == v) return std::nullopt;
    auto row = neighbors(u);
    auto it = std::lower_bound(row.begin(), row.end(), v);
    if (it == row.end() || *it != v) return std::nullopt;
    return incident_edges(u)[static_cast<std::size_t>(it - row.begin())];
}

Graph Graph::with_weights(std::vector<double> weights) const {
    if (weights.size() != edges_.size()) {
        throw std::invalid_argument("weight count " + std::to_string(weights.size()) +
                                    " does not match edge count " + std::to_string(edges_.size()));
    }
    Graph g = *this;
    g.weights_ = std::move(weights);
    return g;
}

bool is_connected(const Graph& g) {
    const std::size_t n = g.num_nodes();
    if (n == 0) throw std::invalid_argument("is_connected requires n >= 1");
    std::vector<char> seen(n, 0);
    std::vector<NodeId> queue{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (NodeId w : g.neighbors(queue[head])) {
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    return queue.size() == n;
}

void require_valid_weights(const Graph& g) {
    if (!g.has_weights()) throw std::invalid_argument("graph has no edge weights");
    auto w = g.weights();
    for (double x : w) {
        if (!std::isfinite(x) || x <= 0.0) {
            throw std::invalid_argument("edge weight " + std::to_string(x) + " is not finite and positive");
        }
    }
    std::vector<double> sorted(w.begin(), w.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("edge weights are not pairwise distinct");
    }
}

}  // namespace salsa
