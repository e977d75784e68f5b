#include "salsa/algorithms.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace salsa {

namespace {

Feature positions(const Graph& g) {
    const std::size_t n = g.num_nodes();
    Feature f{"pos", std::vector<double>(n)};
    for (std::size_t v = 0; v < n; ++v) f.values[v] = static_cast<double>(v) / static_cast<double>(n);
    return f;
}

Feature source_mask(const Graph& g, NodeId source) {
    Feature f{"s", std::vector<double>(g.num_nodes(), 0.0)};
    f.values[source] = 1.0;
    return f;
}

Feature edge_weights(const Graph& g) {
    auto w = g.weights();
    return {"weight", std::vector<double>(w.begin(), w.end())};
}

std::vector<double> self_pointers(std::size_t n) {
    std::vector<double> pi(n);
    for (std::size_t v = 0; v < n; ++v) pi[v] = static_cast<double>(v);
    return pi;
}

void require_graph(const GraphPtr& g) {
    if (!g) throw std::invalid_argument("null graph");
    if (g->num_nodes() == 0) throw std::invalid_argument("graph has no nodes");
}

void require_source(const Graph& g, NodeId source) {
    if (source >= g.num_nodes()) {
        throw std::out_of_range("source " + std::to_string(source) + " out of range for n=" +
                                std::to_string(g.num_nodes()));
    }
}

Trajectory make_trajectory(Algorithm algorithm, GraphPtr g) {
    Trajectory t;
    t.algorithm = algorithm;
    t.graph = std::move(g);
    return t;
}

}  // namespace

bool needs_weights(Algorithm algorithm) {
    return algorithm == Algorithm::dijkstra || algorithm == Algorithm::mst;
}

Trajectory run_bfs(GraphPtr gp, NodeId source) {
    require_graph(gp);
    const Graph& g = *gp;
    require_source(g, source);
    const std::size_t n = g.num_nodes();

    Trajectory t = make_trajectory(Algorithm::bfs, gp);
    t.inputs = {positions(g), source_mask(g, source)};

    std::vector<double> reached(n, 0.0);
    std::vector<double> pi = self_pointers(n);
    auto record = [&] { t.hints.push_back({{"reach_h", reached}, {"pi_h", pi}}); };

    std::vector<NodeId> frontier{source}, next;
    reached[source] = 1.0;
    record();
    while (!frontier.empty()) {
        next.clear();
        // Frontier is ascending, so the first reached neighbor seen is the lowest id.
        for (NodeId u : frontier) {
            for (NodeId w : g.neighbors(u)) {
                if (reached[w] != 0.0) continue;
                if (pi[w] == static_cast<double>(w)) {
                    pi[w] = u;
                    next.push_back(w);
                }
            }
        }
        if (next.empty()) break;
        for (NodeId w : next) reached[w] = 1.0;
        std::sort(next.begin(), next.end());
        frontier.swap(next);
        record();
    }
    t.outputs = {{"pi", pi}};
    return t;
}

Trajectory run_dfs(GraphPtr gp) {
    require_graph(gp);
    const Graph& g = *gp;
    const std::size_t n = g.num_nodes();
    constexpr double kWhite = 0, kGray = 1, kBlack = 2;

    Trajectory t = make_trajectory(Algorithm::dfs, gp);
    t.inputs = {positions(g)};

    std::vector<double> color(n, kWhite);
    std::vector<double> pi = self_pointers(n);
    auto record = [&] { t.hints.push_back({{"color", color}, {"pi_h", pi}}); };

    // Explicit stack of (node, next neighbor offset) mirroring the recursion.
    std::vector<std::pair<NodeId, std::size_t>> stack;
    color[0] = kGray;
    stack.emplace_back(0, 0);
    record();
    while (!stack.empty()) {
        auto& [u, next] = stack.back();
        auto nbrs = g.neighbors(u);
        while (next < nbrs.size() && color[nbrs[next]] != kWhite) ++next;
        if (next == nbrs.size()) {
            color[u] = kBlack;
            stack.pop_back();
            continue;
        }
        const NodeId w = nbrs[next++];
        const NodeId parent = u;
        color[w] = kGray;
        pi[w] = parent;
        stack.emplace_back(w, 0);
        record();
    }
    if (t.hints.size() != n) throw std::invalid_argument("DFS requires a connected graph");
    t.outputs = {{"pi", pi}};
    return t;
}

Trajectory run_dijkstra(GraphPtr gp, NodeId source) {
    require_graph(gp);
    const Graph& g = *gp;
    require_source(g, source);
    require_valid_weights(g);
    const std::size_t n = g.num_nodes();
    const auto w = g.weights();

    Trajectory t = make_trajectory(Algorithm::dijkstra, gp);
    t.inputs = {positions(g), source_mask(g, source), edge_weights(g)};

    std::vector<double> mark(n, 0.0), in_queue(n, 0.0), d(n, 0.0);
    std::vector<double> pi = self_pointers(n);
    in_queue[source] = 1.0;

    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (in_queue[v] == 0.0) continue;
            if (best == n || d[v] < d[best]) best = v;
        }
        if (best == n) throw std::invalid_argument("Dijkstra requires a connected graph");
        const auto u = static_cast<NodeId>(best);
        mark[u] = 1.0;
        in_queue[u] = 0.0;
        auto nbrs = g.neighbors(u);
        auto inc = g.incident_edges(u);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            const NodeId v = nbrs[i];
            if (mark[v] != 0.0) continue;
            const double candidate = d[u] + w[inc[i]];
            const bool unreached = in_queue[v] == 0.0;
            if (unreached || candidate < d[v] || (candidate == d[v] && u < pi[v])) {
                d[v] = candidate;
                pi[v] = u;
                in_queue[v] = 1.0;
            }
        }
        t.hints.push_back({{"mark", mark}, {"in_queue", in_queue}, {"d", d}, {"pi_h", pi}});
    }
    t.outputs = {{"pi", pi}};
    return t;
}

Trajectory run_mst(GraphPtr gp, NodeId source) {
    require_graph(gp);
    const Graph& g = *gp;
    require_source(g, source);
    require_valid_weights(g);
    const std::size_t n = g.num_nodes();
    const auto w = g.weights();

    Trajectory t = make_trajectory(Algorithm::mst, gp);
    t.inputs = {positions(g), source_mask(g, source), edge_weights(g)};

    std::vector<double> in_tree(n, 0.0), in_queue(n, 0.0), key(n, 0.0);
    std::vector<double> pi = self_pointers(n);
    in_queue[source] = 1.0;

    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (in_queue[v] == 0.0) continue;
            if (best == n || key[v] > key[best]) best = v;
        }
        if (best == n) throw std::invalid_argument("Prim requires a connected graph");
        const auto u = static_cast<NodeId>(best);
        in_tree[u] = 1.0;
        in_queue[u] = 0.0;
        auto nbrs = g.neighbors(u);
        auto inc = g.incident_edges(u);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            const NodeId v = nbrs[i];
            if (in_tree[v] != 0.0) continue;
            const double offer = w[inc[i]];
            if (in_queue[v] == 0.0 || offer > key[v]) {
                key[v] = offer;
                pi[v] = u;
                in_queue[v] = 1.0;
            }
        }
        t.hints.push_back({{"in_tree", in_tree}, {"in_queue", in_queue}, {"key", key}, {"pi_h", pi}});
    }
    t.outputs = {{"pi", pi}};
    return t;
}

namespace {

constexpr double kUndecided = 0, kInMis = 1, kOut = 2;

template <typename NextValues>
Trajectory run_mis_impl(GraphPtr gp, NextValues&& next_values) {
    require_graph(gp);
    const Graph& g = *gp;
    const std::size_t n = g.num_nodes();

    Trajectory t = make_trajectory(Algorithm::mis, gp);
    t.inputs = {positions(g)};

    std::vector<double> status(n, kUndecided);
    std::vector<NodeId> joining;
    std::size_t undecided = n;
    while (undecided > 0) {
        std::vector<double> r = next_values(t.randomness.size());
        joining.clear();
        for (NodeId v = 0; v < n; ++v) {
            if (status[v] != kUndecided) continue;
            bool local_min = true;
            for (NodeId u : g.neighbors(v)) {
                if (status[u] == kUndecided && !(r[v] < r[u])) {
                    local_min = false;
                    break;
                }
            }
            if (local_min) joining.push_back(v);
        }
        for (NodeId v : joining) status[v] = kInMis;
        for (NodeId v : joining) {
            for (NodeId u : g.neighbors(v)) {
                if (status[u] == kUndecided) status[u] = kOut;
            }
        }
        undecided = static_cast<std::size_t>(std::count(status.begin(), status.end(), kUndecided));
        t.hints.push_back({{"status", status}, {"r", r}});
        t.randomness.push_back(std::move(r));
    }

    std::vector<double> mask(n);
    for (std::size_t v = 0; v < n; ++v) mask[v] = status[v] == kInMis ? 1.0 : 0.0;
    t.outputs = {{"in_mis", std::move(mask)}};
    return t;
}

}  // namespace

Trajectory run_mis(GraphPtr g, Rng& rng) {
    const std::size_t n = g ? g->num_nodes() : 0;
    std::unordered_set<std::uint64_t> seen;
    return run_mis_impl(std::move(g), [&](std::size_t) {
        std::vector<double> r;
        r.reserve(n);
        seen.clear();
        while (r.size() < n) {
            const double x = rng.uniform();
            if (seen.insert(std::bit_cast<std::uint64_t>(x)).second) r.push_back(x);
        }
        return r;
    });
}

Trajectory run_mis(GraphPtr g, std::span<const std::vector<double>> phase_values) {
    const std::size_t n = g ? g->num_nodes() : 0;
    return run_mis_impl(std::move(g), [&](std::size_t phase) {
        if (phase >= phase_values.size()) {
            throw std::invalid_argument("MIS needs more than " + std::to_string(phase_values.size()) +
                                        " phases of random values");
        }
        const auto& r = phase_values[phase];
        const bool ok = r.size() == n && std::all_of(r.begin(), r.end(), [](double x) { return x >= 0.0 && x <= 1.0; });
        if (!ok) throw std::invalid_argument("MIS random values must be n values in [0, 1]");
        return r;
    });
}

Trajectory run_eccentricity(GraphPtr gp, NodeId source) {
    require_graph(gp);
    const Graph& g = *gp;
    require_source(g, source);
    const std::size_t n = g.num_nodes();

    Trajectory t = make_trajectory(Algorithm::eccentricity, gp);
    t.inputs = {positions(g), source_mask(g, source)};

    std::vector<double> alive(n, 1.0), echoed(n, 0.0), dist(n, 0.0), echo(n, 0.0);
    std::vector<double> parent = self_pointers(n);
    std::vector<std::size_t> children(n, 0), echoes_received(n, 0);
    std::vector<NodeId> flood_senders_min(n, 0);
    std::vector<char> flood_pending(n, 0);
    std::vector<NodeId> echo_outbox, echo_inbox;
    std::vector<double> alive_at_start;

    auto flood_from = [&](NodeId v) {
        for (NodeId w : g.neighbors(v)) {
            if (alive[w] == 0.0) continue;
            if (!flood_pending[w] || v < flood_senders_min[w]) flood_senders_min[w] = v;
            flood_pending[w] = 1;
        }
    };

    bool done = false;
    for (std::size_t round = 1; !done; ++round) {
        alive_at_start = alive;

        // Flooding: the source starts in round 1; later rounds deliver the
        // previous round's messages. Messages to nodes that die this round are dropped.
        std::vector<NodeId> flooded;
        if (round == 1) {
            flooded.push_back(source);
            alive[source] = 0.0;
        } else {
            for (NodeId v = 0; v < n; ++v) {
                if (!flood_pending[v] || alive[v] == 0.0) continue;
                const NodeId p = flood_senders_min[v];
                parent[v] = p;
                dist[v] = dist[p] + 1.0;
                echo[v] = dist[v];
                alive[v] = 0.0;
                ++children[p];
                flooded.push_back(v);
            }
        }
        std::fill(flood_pending.begin(), flood_pending.end(), 0);
        for (NodeId v : flooded) flood_from(v);

        echo_inbox.swap(echo_outbox);
        echo_outbox.clear();
        for (NodeId child : echo_inbox) {
            const auto p = static_cast<NodeId>(parent[child]);
            echo[p] = std::max(echo[p], echo[child]);
            ++echoes_received[p];
        }

        for (NodeId v = 0; v < n; ++v) {
            if (alive[v] != 0.0 || echoed[v] != 0.0) continue;
            if (echoes_received[v] != children[v]) continue;
            const auto p = static_cast<NodeId>(parent[v]);
            bool settled = true;
            for (NodeId w : g.neighbors(v)) {
                if (w != p && alive_at_start[w] != 0.0) {
                    settled = false;
                    break;
                }
            }
            if (!settled) continue;
            echoed[v] = 1.0;
            if (v == source) {
                done = true;
            } else {
                echo_outbox.push_back(v);
            }
        }

        t.hints.push_back(
            {{"alive", alive}, {"echoed", echoed}, {"dist", dist}, {"echo", echo}, {"parent_h", parent}});
        if (round > 4 * n + 4) throw std::invalid_argument("eccentricity requires a connected graph");
    }
    t.outputs = {{"ecc", {echo[source]}}};
    return t;
}

Trajectory run_algorithm(Algorithm algorithm, GraphPtr g, Rng& rng) {
    require_graph(g);
    const std::size_t n = g->num_nodes();
    switch (algorithm) {
        case Algorithm::bfs: return run_bfs(std::move(g), static_cast<NodeId>(rng.below(n)));
        case Algorithm::dfs: return run_dfs(std::move(g));
        case Algorithm::dijkstra: return run_dijkstra(std::move(g), static_cast<NodeId>(rng.below(n)));
        case Algorithm::mst: return run_mst(std::move(g), static_cast<NodeId>(rng.below(n)));
        case Algorithm::mis: return run_mis(std::move(g), rng);
        case Algorithm::eccentricity: return run_eccentricity(std::move(g), static_cast<NodeId>(rng.below(n)));
    }
    throw std::invalid_argument("unknown algorithm");
}

}  // namespace salsa
