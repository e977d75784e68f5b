#include <cmath>
#include <set>

#include "doctest.h"
#include "salsa/delaunay.hpp"
#include "salsa/generators.hpp"
#include "salsa/random.hpp"

using namespace salsa;

namespace {

double clustering(const Graph& g) {
    double sum = 0;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        const auto nb = g.neighbors(v);
        if (nb.size() < 2) continue;
        std::size_t links = 0;
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) links += g.has_edge(nb[i], nb[j]);
        }
        sum += 2.0 * static_cast<double>(links) / static_cast<double>(nb.size() * (nb.size() - 1));
    }
    return sum / static_cast<double>(g.num_nodes());
}

void check_simple_connected(const Graph& g) {
    REQUIRE(is_connected(g));
    for (const auto& e : g.edges()) REQUIRE(e.u < e.v);
}

}  // namespace

TEST_SUITE("generators") {

TEST_CASE("ER edge probability") {
    CHECK(er_edge_probability(16, 1.0) == doctest::Approx(0.1733).epsilon(1e-3));
    CHECK(er_edge_probability(2, 5.0) == 1.0);
}

TEST_CASE("ER with p clamped to one gives K2") {
    Rng rng = derive_rng({0, 0});
    GeneratorSpec spec{Family::er, 2, 5.0};
    const auto out = gen_er(spec, rng);
    CHECK(out.graph.num_edges() == 1);
    CHECK(out.graph.edges()[0] == Edge{0, 1});
    CHECK(out.params.attempts == 1);
}

TEST_CASE("ER n=1600 c=1.5 mean edge count") {
    const double expected = 1600.0 * 1599.0 / 2.0 * er_edge_probability(1600, 1.5);
    CHECK(expected == doctest::Approx(8847).epsilon(0.001));
    double sum = 0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        Rng rng = derive_rng({11, i});
        const auto out = gen_er({Family::er, 1600, 1.5}, rng);
        check_simple_connected(out.graph);
        sum += static_cast<double>(out.graph.num_edges());
    }
    CHECK(std::abs(sum / 100.0 - expected) / expected < 0.05);
}

TEST_CASE("ER n=160 sampled c matches the closed form") {
    double sum = 0, expected = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        Rng rng = derive_rng({12, i});
        const auto out = gen_er({Family::er, 160}, rng);
        check_simple_connected(out.graph);
        REQUIRE(out.params.er_c.has_value());
        REQUIRE(*out.params.er_c > 1.0);
        REQUIRE(*out.params.er_c < 2.0);
        sum += static_cast<double>(out.graph.num_edges());
        expected += 160.0 * 159.0 / 2.0 * er_edge_probability(160, *out.params.er_c);
    }
    CHECK(std::abs(sum - expected) / expected < 0.10);
}

TEST_CASE("ER rejection cap") {
    Rng rng = derive_rng({0, 0});
    GeneratorSpec spec{Family::er, 200, 0.01};
    spec.max_rejections = 5;
    CHECK_THROWS_AS(gen_er(spec, rng), RejectionLimitError);
}

TEST_CASE("WS without rewiring is the ring lattice") {
    Rng rng = derive_rng({3, 3});
    const auto out = gen_ws({Family::ws, 16, std::nullopt, 4, 0.0}, rng);
    CHECK(out.graph.num_edges() == 32);
    for (NodeId v = 0; v < 16; ++v) {
        CHECK(out.graph.degree(v) == 4);
        CHECK(out.graph.has_edge(v, (v + 1) % 16));
        CHECK(out.graph.has_edge(v, (v + 2) % 16));
    }
}

TEST_CASE("WS keeps n*k/2 edges and stays connected") {
    for (std::uint64_t i = 0; i < 100; ++i) {
        Rng rng = derive_rng({4, i});
        const std::size_t n = i % 2 ? 80 : 16;
        const auto out = gen_ws({Family::ws, n}, rng);
        check_simple_connected(out.graph);
        const int k = *out.params.ws_k;
        REQUIRE((k == 4 || k == 6 || k == 8));
        REQUIRE(*out.params.ws_p > 0.05);
        REQUIRE(*out.params.ws_p < 0.2);
        REQUIRE(out.graph.num_edges() == n * static_cast<std::size_t>(k) / 2);
        for (NodeId v = 0; v < n; ++v) REQUIRE(out.graph.degree(v) >= 1);
    }
}

TEST_CASE("WS clustering exceeds ER at equal edge count") {
    double ws_sum = 0, er_sum = 0;
    for (std::uint64_t i = 0; i < 50; ++i) {
        Rng rng = derive_rng({21, i});
        const auto ws = gen_ws({Family::ws, 80, std::nullopt, 4, 0.1}, rng);
        ws_sum += clustering(ws.graph);
        // G(n, m) with the same 160 edges
        std::vector<Edge> edges;
        std::set<std::pair<NodeId, NodeId>> seen;
        while (edges.size() < ws.graph.num_edges()) {
            auto u = static_cast<NodeId>(rng.below(80)), v = static_cast<NodeId>(rng.below(80));
            if (u == v) continue;
            if (u > v) std::swap(u, v);
            if (seen.insert({u, v}).second) edges.push_back({u, v});
        }
        er_sum += clustering(Graph(80, edges));
    }
    CHECK(ws_sum > er_sum);
    CHECK(ws_sum / 50 > 0.3);
}

TEST_CASE("WS parameter checks") {
    Rng rng = derive_rng({0, 0});
    CHECK_THROWS_AS(gen_ws({Family::ws, 8, std::nullopt, 8, 0.1}, rng), std::invalid_argument);
    CHECK_THROWS_AS(gen_ws({Family::ws, 16, std::nullopt, 5, 0.1}, rng), std::invalid_argument);
}

TEST_CASE("Delaunay of three points is a triangle") {
    Rng rng = derive_rng({8, 0});
    const auto out = gen_delaunay({Family::delaunay, 3}, rng);
    CHECK(out.graph.num_edges() == 3);
}

TEST_CASE("Delaunay sparsity and Euler check") {
    for (std::size_t n : {16, 80, 160, 800}) {
        const int samples = n == 800 ? 50 : 100;
        double degree_sum = 0;
        for (int i = 0; i < samples; ++i) {
            Rng rng = derive_rng({9, n * 1000 + static_cast<std::uint64_t>(i)});
            const auto out = gen_delaunay({Family::delaunay, n}, rng);
            const Graph& g = out.graph;
            check_simple_connected(g);
            REQUIRE(g.num_edges() <= 3 * n - 6);
            degree_sum += 2.0 * static_cast<double>(g.num_edges()) / static_cast<double>(n);
        }
        CHECK(degree_sum / samples < 6.0);
    }
}

TEST_CASE("triangulation satisfies Euler's formula") {
    for (std::uint64_t i = 0; i < 50; ++i) {
        Rng rng = derive_rng({10, i});
        std::vector<Point> pts(800);
        for (auto& p : pts) p = {rng.uniform(), rng.uniform()};
        const DelaunayTriangulation dt(pts);
        // V - E + F = 2 with the outer face counted once
        const auto v = static_cast<long>(pts.size());
        const auto e = static_cast<long>(dt.edges().size());
        const auto f = static_cast<long>(dt.triangles().size()) + 1;
        REQUIRE(v - e + f == 2);
        for (const auto& t : dt.triangles()) REQUIRE(orient2d(pts[t[0]], pts[t[1]], pts[t[2]]) > 0);
    }
}

TEST_CASE("empty circumcircle property") {
    Rng rng = derive_rng({13, 0});
    std::vector<Point> pts(120);
    for (auto& p : pts) p = {rng.uniform(), rng.uniform()};
    const DelaunayTriangulation dt(pts);
    for (const auto& t : dt.triangles()) {
        for (NodeId q = 0; q < pts.size(); ++q) {
            if (q == t[0] || q == t[1] || q == t[2]) continue;
            REQUIRE(in_circle(pts[t[0]], pts[t[1]], pts[t[2]], pts[q]) <= 0);
        }
    }
}

TEST_CASE("cocircular ties are resolved deterministically") {
    // Four corners of a square are cocircular; the result must still be a
    // valid triangulation with one diagonal.
    const std::vector<Point> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    const DelaunayTriangulation dt(pts);
    CHECK(dt.triangles().size() == 2);
    CHECK(dt.edges().size() == 5);
    const DelaunayTriangulation again(pts);
    CHECK(again.edges() == dt.edges());
}

TEST_CASE("generation is a pure function of the seed") {
    for (Family f : {Family::er, Family::ws, Family::delaunay}) {
        Rng a = derive_rng({77, 1}), b = derive_rng({77, 1});
        const auto x = generate({f, 80}, a), y = generate({f, 80}, b);
        CHECK(x.graph == y.graph);
    }
}

TEST_CASE("weights are distinct and in (0,1)") {
    Rng rng = derive_rng({14, 0});
    const auto g = generate({Family::delaunay, 800}, rng).graph;
    const Graph w = assign_weights(g, rng);
    CHECK_NOTHROW(require_valid_weights(w));
    for (double x : w.weights()) {
        REQUIRE(x > 0.0);
        REQUIRE(x < 1.0);
    }
}

}
