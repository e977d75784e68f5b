#include "salsa/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

namespace salsa::oracles {

namespace {

constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);

std::vector<std::size_t> hop_distances(const Graph& g, NodeId source) {
    std::vector<std::size_t> dist(g.num_nodes(), kUnreached);
    std::deque<NodeId> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const NodeId u = queue.front();
        queue.pop_front();
        for (NodeId w : g.neighbors(u)) {
            if (dist[w] == kUnreached) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

// Converts a pointer vector to node ids, or explains why it is malformed.
std::optional<std::string> decode_pointers(const Graph& g, std::span<const double> pi, std::vector<NodeId>& out) {
    if (pi.size() != g.num_nodes()) {
        return "pointer vector has " + std::to_string(pi.size()) + " entries, graph has " +
               std::to_string(g.num_nodes()) + " nodes";
    }
    out.resize(pi.size());
    for (std::size_t v = 0; v < pi.size(); ++v) {
        const double x = pi[v];
        if (!std::isfinite(x) || std::floor(x) != x || x < 0 || x >= static_cast<double>(g.num_nodes())) {
            return "node " + std::to_string(v) + " has invalid pointer " + std::to_string(x);
        }
        out[v] = static_cast<NodeId>(x);
    }
    return std::nullopt;
}

// Checks that parents form a tree rooted at root in which every parent is a
// graph neighbor. On success fills a root-first order of the nodes.
std::optional<std::string> check_rooted_tree(const Graph& g, const std::vector<NodeId>& parent, NodeId root,
                                             std::vector<NodeId>& order) {
    const std::size_t n = g.num_nodes();
    if (parent[root] != root) return "root " + std::to_string(root) + " does not point to itself";
    std::vector<std::vector<NodeId>> children(n);
    for (NodeId v = 0; v < n; ++v) {
        if (v == root) continue;
        if (parent[v] == v) return "node " + std::to_string(v) + " points to itself but is not the root";
        if (!g.has_edge(v, parent[v])) {
            return "node " + std::to_string(v) + " points to non-neighbor " + std::to_string(parent[v]);
        }
        children[parent[v]].push_back(v);
    }
    order.assign(1, root);
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (NodeId c : children[order[head]]) order.push_back(c);
    }
    if (order.size() != n) return "parent pointers contain a cycle";
    return std::nullopt;
}

void reference_dfs(const Graph& g, NodeId u, std::vector<char>& visited, std::vector<NodeId>& parent) {
    visited[u] = 1;
    for (NodeId w : g.neighbors(u)) {
        if (visited[w]) continue;
        parent[w] = u;
        reference_dfs(g, w, visited, parent);
    }
}

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

Verdict verify_bfs(const Graph& g, NodeId source, std::span<const double> pi) {
    if (source >= g.num_nodes()) return Verdict::fail("source out of range");
    std::vector<NodeId> parent;
    if (auto err = decode_pointers(g, pi, parent)) return Verdict::fail(*err);
    if (parent[source] != source) return Verdict::fail("source does not point to itself");
    const auto dist = hop_distances(g, source);
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        if (v == source) continue;
        const NodeId p = parent[v];
        if (!g.has_edge(v, p)) {
            return Verdict::fail("node " + std::to_string(v) + " points to non-neighbor " + std::to_string(p));
        }
        if (dist[v] == kUnreached || dist[p] + 1 != dist[v]) {
            return Verdict::fail("node " + std::to_string(v) + " at distance " + std::to_string(dist[v]) +
                                 " has parent " + std::to_string(p) + " at distance " + std::to_string(dist[p]));
        }
    }
    return Verdict::pass();
}

Verdict verify_dfs(const Graph& g, std::span<const double> pi) {
    if (g.num_nodes() == 0) return Verdict::fail("empty graph");
    std::vector<NodeId> parent;
    if (auto err = decode_pointers(g, pi, parent)) return Verdict::fail(*err);
    std::vector<char> visited(g.num_nodes(), 0);
    std::vector<NodeId> expected(g.num_nodes());
    std::iota(expected.begin(), expected.end(), NodeId{0});
    reference_dfs(g, 0, visited, expected);
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        if (parent[v] != expected[v]) {
            return Verdict::fail("node " + std::to_string(v) + " has parent " + std::to_string(parent[v]) +
                                 ", reference DFS gives " + std::to_string(expected[v]));
        }
    }
    return Verdict::pass();
}

Verdict verify_sssp(const Graph& g, NodeId source, std::span<const double> pi) {
    if (source >= g.num_nodes()) return Verdict::fail("source out of range");
    if (!g.has_weights()) return Verdict::fail("graph has no weights");
    const std::size_t n = g.num_nodes();
    const auto w = g.weights();
    std::vector<NodeId> parent, order;
    if (auto err = decode_pointers(g, pi, parent)) return Verdict::fail(*err);
    if (auto err = check_rooted_tree(g, parent, source, order)) return Verdict::fail(*err);

    std::vector<double> tree_dist(n, 0.0);
    for (NodeId v : order) {
        if (v == source) continue;
        tree_dist[v] = tree_dist[parent[v]] + w[*g.find_edge(v, parent[v])];
    }

    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> bf(n, kInf);
    bf[source] = 0.0;
    for (std::size_t round = 0; round + 1 < n; ++round) {
        bool changed = false;
        const auto edges = g.edges();
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto [a, b] = edges[i];
            if (bf[a] + w[i] < bf[b]) {
                bf[b] = bf[a] + w[i];
                changed = true;
            }
            if (bf[b] + w[i] < bf[a]) {
                bf[a] = bf[b] + w[i];
                changed = true;
            }
        }
        if (!changed) break;
    }
    for (NodeId v = 0; v < n; ++v) {
        if (tree_dist[v] != bf[v]) {
            return Verdict::fail("node " + std::to_string(v) + " has tree distance " + std::to_string(tree_dist[v]) +
                                 ", shortest distance is " + std::to_string(bf[v]));
        }
    }
    return Verdict::pass();
}

Verdict verify_mst(const Graph& g, std::span<const double> pi) {
    if (!g.has_weights()) return Verdict::fail("graph has no weights");
    const std::size_t n = g.num_nodes();
    std::vector<NodeId> parent, order;
    if (auto err = decode_pointers(g, pi, parent)) return Verdict::fail(*err);
    const auto roots = std::count_if(parent.begin(), parent.end(),
                                     [v = NodeId{0}](NodeId p) mutable { return p == v++; });
    if (roots != 1) return Verdict::fail(std::to_string(roots) + " self-pointers, expected exactly one root");
    NodeId root = 0;
    while (parent[root] != root) ++root;
    if (auto err = check_rooted_tree(g, parent, root, order)) return Verdict::fail(*err);

    std::vector<std::size_t> tree_edges;
    for (NodeId v = 0; v < n; ++v) {
        if (v != root) tree_edges.push_back(*g.find_edge(v, parent[v]));
    }
    std::sort(tree_edges.begin(), tree_edges.end());

    const auto w = g.weights();
    std::vector<std::size_t> by_weight(g.num_edges());
    std::iota(by_weight.begin(), by_weight.end(), std::size_t{0});
    std::sort(by_weight.begin(), by_weight.end(), [&](std::size_t a, std::size_t b) { return w[a] > w[b]; });
    DisjointSets sets(n);
    std::vector<std::size_t> kruskal;
    for (std::size_t e : by_weight) {
        if (sets.unite(g.edges()[e].u, g.edges()[e].v)) kruskal.push_back(e);
    }
    std::sort(kruskal.begin(), kruskal.end());

    double tree_weight = 0.0, best_weight = 0.0;
    for (std::size_t e : tree_edges) tree_weight += w[e];
    for (std::size_t e : kruskal) best_weight += w[e];
    if (tree_weight != best_weight) {
        return Verdict::fail("tree weight " + std::to_string(tree_weight) + " differs from maximum " +
                             std::to_string(best_weight));
    }
    if (tree_edges != kruskal) return Verdict::fail("tree edge set differs from the maximum spanning tree");
    return Verdict::pass();
}

Verdict verify_mis(const Graph& g, std::span<const double> mask) {
    if (mask.size() != g.num_nodes()) return Verdict::fail("mask length differs from node count");
    for (std::size_t v = 0; v < mask.size(); ++v) {
        if (mask[v] != 0.0 && mask[v] != 1.0) return Verdict::fail("mask entry " + std::to_string(v) + " is not 0/1");
    }
    for (const auto& e : g.edges()) {
        if (mask[e.u] == 1.0 && mask[e.v] == 1.0) {
            return Verdict::fail("adjacent nodes " + std::to_string(e.u) + " and " + std::to_string(e.v) +
                                 " are both in the set");
        }
    }
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        if (mask[v] == 1.0) continue;
        auto nbrs = g.neighbors(v);
        if (std::none_of(nbrs.begin(), nbrs.end(), [&](NodeId u) { return mask[u] == 1.0; })) {
            return Verdict::fail("node " + std::to_string(v) + " could join the set (not maximal)");
        }
    }
    return Verdict::pass();
}

Verdict verify_ecc(const Graph& g, NodeId source, double value) {
    if (source >= g.num_nodes()) return Verdict::fail("source out of range");
    const auto dist = hop_distances(g, source);
    std::size_t ecc = 0;
    for (auto d : dist) {
        if (d == kUnreached) return Verdict::fail("graph is disconnected");
        ecc = std::max(ecc, d);
    }
    if (value != static_cast<double>(ecc)) {
        return Verdict::fail("eccentricity " + std::to_string(value) + " differs from " + std::to_string(ecc));
    }
    return Verdict::pass();
}

namespace {

std::optional<NodeId> flagged_source(const Trajectory& t) {
    const auto& s = t.input("s").values;
    std::optional<NodeId> source;
    for (std::size_t v = 0; v < s.size(); ++v) {
        if (s[v] == 1.0) {
            if (source) return std::nullopt;
            source = static_cast<NodeId>(v);
        }
    }
    return source;
}

}  // namespace

Verdict verify_trajectory(const Trajectory& t) {
    if (!t.graph) return Verdict::fail("trajectory has no graph");
    const Graph& g = *t.graph;
    try {
        switch (t.algorithm) {
            case Algorithm::bfs:
            case Algorithm::dijkstra:
            case Algorithm::mst:
            case Algorithm::eccentricity: {
                auto source = flagged_source(t);
                if (!source) return Verdict::fail("input 's' must flag exactly one source");
                if (t.algorithm == Algorithm::bfs) return verify_bfs(g, *source, t.output("pi").values);
                if (t.algorithm == Algorithm::dijkstra) return verify_sssp(g, *source, t.output("pi").values);
                if (t.algorithm == Algorithm::eccentricity) {
                    const auto& ecc = t.output("ecc").values;
                    if (ecc.size() != 1) return Verdict::fail("output 'ecc' must hold one value");
                    return verify_ecc(g, *source, ecc[0]);
                }
                const auto& pi = t.output("pi").values;
                if (pi.size() == g.num_nodes() && pi[*source] != static_cast<double>(*source)) {
                    return Verdict::fail("MST root is not the source");
                }
                return verify_mst(g, pi);
            }
            case Algorithm::dfs: return verify_dfs(g, t.output("pi").values);
            case Algorithm::mis: return verify_mis(g, t.output("in_mis").values);
        }
    } catch (const std::out_of_range& e) {
        return Verdict::fail(e.what());
    }
    return Verdict::fail("unknown algorithm");
}

}  // namespace salsa::oracles
