#include "salsa/generators.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <string>
#include <unordered_set>
#include <vector>

#include "salsa/delaunay.hpp"

namespace salsa {

std::string_view to_string(Family family) {
    switch (family) {
        case Family::er: return "er";
        case Family::ws: return "ws";
        case Family::delaunay: return "delaunay";
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (lower == "er") return Family::er;
    if (lower == "ws") return Family::ws;
    if (lower == "delaunay") return Family::delaunay;
    throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

double er_edge_probability(std::size_t n, double c) {
    if (n < 2) return 1.0;
    const double nd = static_cast<double>(n);
    return std::clamp(c * std::log(nd) / nd, 0.0, 1.0);
}

namespace {

std::uint64_t edge_key(NodeId a, NodeId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

void check_attempt_cap(const GeneratorSpec& spec) {
    if (spec.max_rejections < 1) throw std::invalid_argument("max_rejections must be >= 1");
}

[[noreturn]] void rejection_limit(const GeneratorSpec& spec) {
    throw RejectionLimitError(std::string(to_string(spec.family)) + " generator produced no connected graph with n=" +
                              std::to_string(spec.n) + " in " + std::to_string(spec.max_rejections) +
                              " attempts");
}

}  // namespace

GeneratedGraph gen_er(const GeneratorSpec& spec, Rng& rng) {
    if (spec.n < 2) throw std::invalid_argument("ER generator requires n >= 2");
    if (spec.er_c && !(*spec.er_c > 0.0)) throw std::invalid_argument("ER parameter c must be positive");
    check_attempt_cap(spec);

    const auto n = static_cast<NodeId>(spec.n);
    std::vector<Edge> edges;
    for (int attempt = 1; attempt <= spec.max_rejections; ++attempt) {
        const double c = spec.er_c ? *spec.er_c : rng.uniform_open(kErCMin, kErCMax);
        const double p = er_edge_probability(spec.n, c);
        edges.clear();
        for (NodeId u = 0; u < n; ++u) {
            for (NodeId v = u + 1; v < n; ++v) {
                if (rng.bernoulli(p)) edges.push_back({u, v});
            }
        }
        Graph g(spec.n, edges);
        if (is_connected(g)) {
            return {std::move(g), AcceptedParams{c, std::nullopt, std::nullopt, attempt}};
        }
    }
    rejection_limit(spec);
}

GeneratedGraph gen_ws(const GeneratorSpec& spec, Rng& rng) {
    if (spec.ws_k && (*spec.ws_k < 2 || *spec.ws_k % 2 != 0 || static_cast<std::size_t>(*spec.ws_k) >= spec.n)) {
        throw std::invalid_argument("WS parameter k must be even, >= 2 and < n");
    }
    if (spec.ws_p && !(*spec.ws_p >= 0.0 && *spec.ws_p <= 1.0)) {
        throw std::invalid_argument("WS parameter p must lie in [0, 1]");
    }
    std::vector<int> k_choices;
    for (int k : kWsKChoices) {
        if (static_cast<std::size_t>(k) < spec.n) k_choices.push_back(k);
    }
    if (!spec.ws_k && k_choices.empty()) {
        throw std::invalid_argument("WS generator requires n > 4 when k is sampled");
    }
    check_attempt_cap(spec);

    const auto n = static_cast<NodeId>(spec.n);
    std::unordered_set<std::uint64_t> present;
    std::vector<std::size_t> degree(n);
    for (int attempt = 1; attempt <= spec.max_rejections; ++attempt) {
        const int k = spec.ws_k ? *spec.ws_k : k_choices[rng.below(k_choices.size())];
        const double p = spec.ws_p ? *spec.ws_p : rng.uniform_open(kWsPMin, kWsPMax);

        present.clear();
        std::fill(degree.begin(), degree.end(), static_cast<std::size_t>(k));
        for (int j = 1; j <= k / 2; ++j) {
            for (NodeId u = 0; u < n; ++u) present.insert(edge_key(u, (u + j) % n));
        }
        // Ring order: hop distance outer, node inner; the near endpoint u stays.
        for (int j = 1; j <= k / 2; ++j) {
            for (NodeId u = 0; u < n; ++u) {
                if (!rng.bernoulli(p)) continue;
                if (degree[u] >= spec.n - 1) continue;
                const NodeId v = (u + j) % n;
                NodeId w;
                do {
                    w = static_cast<NodeId>(rng.below(n));
                } while (w == u || present.contains(edge_key(u, w)));
                present.erase(edge_key(u, v));
                --degree[v];
                present.insert(edge_key(u, w));
                ++degree[w];
            }
        }

        std::vector<Edge> edges;
        edges.reserve(present.size());
        for (auto key : present) {
            edges.push_back({static_cast<NodeId>(key >> 32), static_cast<NodeId>(key & 0xffffffffULL)});
        }
        Graph g(spec.n, std::move(edges));
        if (is_connected(g)) {
            return {std::move(g), AcceptedParams{std::nullopt, k, p, attempt}};
        }
    }
    rejection_limit(spec);
}

GeneratedGraph gen_delaunay(const GeneratorSpec& spec, Rng& rng) {
    if (spec.n < 3) throw std::invalid_argument("Delaunay generator requires n >= 3");
    constexpr double kMinSeparation = 1e-9;

    std::vector<Point> points;
    points.reserve(spec.n);
    while (points.size() < spec.n) {
        const Point candidate{rng.uniform(), rng.uniform()};
        const bool too_close = std::any_of(points.begin(), points.end(), [&](const Point& q) {
            return std::hypot(q.x - candidate.x, q.y - candidate.y) < kMinSeparation;
        });
        if (!too_close) points.push_back(candidate);
    }

    DelaunayTriangulation triangulation(points);
    Graph g(spec.n, triangulation.edges());
    if (!is_connected(g)) {
        throw std::logic_error("Delaunay triangulation produced a disconnected graph");
    }
    return {std::move(g), AcceptedParams{std::nullopt, std::nullopt, std::nullopt, 1}};
}

GeneratedGraph generate(const GeneratorSpec& spec, Rng& rng) {
    switch (spec.family) {
        case Family::er: return gen_er(spec, rng);
        case Family::ws: return gen_ws(spec, rng);
        case Family::delaunay: return gen_delaunay(spec, rng);
    }
    throw std::invalid_argument("unknown graph family");
}

Graph assign_weights(const Graph& g, Rng& rng) {
    std::vector<double> weights;
    weights.reserve(g.num_edges());
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(g.num_edges());
    while (weights.size() < g.num_edges()) {
        const double w = rng.uniform_open();
        if (seen.insert(std::bit_cast<std::uint64_t>(w)).second) weights.push_back(w);
    }
    return g.with_weights(std::move(weights));
}

}  // namespace salsa
