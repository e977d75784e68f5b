#include "doctest.h"
#include "fixtures.hpp"
#include "salsa/oracles.hpp"

using namespace salsa;
using namespace salsa::oracles;

TEST_SUITE("oracles") {

TEST_CASE("BFS oracle") {
    const Graph p = fixtures::path(3);
    CHECK(verify_bfs(p, 0, std::vector<double>{0, 0, 1}).ok);
    const auto bad = verify_bfs(p, 0, std::vector<double>{0, 0, 0});
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.reason.empty());
    CHECK_FALSE(verify_bfs(p, 0, std::vector<double>{0, 0}).ok);
    CHECK_FALSE(verify_bfs(p, 1, std::vector<double>{0, 0, 1}).ok);
    // any parent one layer closer is accepted; a same-layer parent is not
    const Graph c(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(verify_bfs(c, 0, std::vector<double>{0, 0, 1, 0}).ok);
    CHECK(verify_bfs(c, 0, std::vector<double>{0, 0, 3, 0}).ok);
    CHECK_FALSE(verify_bfs(c, 0, std::vector<double>{0, 0, 1, 2}).ok);
}

TEST_CASE("DFS oracle") {
    CHECK(verify_dfs(fixtures::path(3), std::vector<double>{0, 0, 1}).ok);
    CHECK(verify_dfs(fixtures::triangle(), std::vector<double>{0, 0, 1}).ok);
    CHECK_FALSE(verify_dfs(fixtures::triangle(), std::vector<double>{0, 0, 0}).ok);
    // parents forming a cycle
    CHECK_FALSE(verify_dfs(fixtures::triangle(), std::vector<double>{0, 2, 1}).ok);
}

TEST_CASE("shortest-path oracle") {
    const Graph g = fixtures::weighted_triangle();
    CHECK(verify_sssp(g, 0, std::vector<double>{0, 0, 1}).ok);
    CHECK_FALSE(verify_sssp(g, 0, std::vector<double>{0, 0, 0}).ok);
    CHECK_FALSE(verify_sssp(g, 0, std::vector<double>{0, 2, 0}).ok);
}

TEST_CASE("maximum spanning tree oracle") {
    const Graph g = fixtures::weighted_triangle();
    CHECK(verify_mst(g, std::vector<double>{0, 2, 0}).ok);
    // drops the heaviest cycle edge instead of the lightest
    CHECK_FALSE(verify_mst(g, std::vector<double>{0, 0, 1}).ok);
    const Graph tree = fixtures::path(4).with_weights({0.3, 0.1, 0.2});
    CHECK(verify_mst(tree, std::vector<double>{1, 1, 1, 2}).ok);
    CHECK_FALSE(verify_mst(tree, std::vector<double>{0, 0, 0, 0}).ok);
}

TEST_CASE("MIS oracle") {
    const Graph k3 = fixtures::triangle();
    CHECK(verify_mis(k3, std::vector<double>{1, 0, 0}).ok);
    CHECK_FALSE(verify_mis(k3, std::vector<double>{1, 1, 0}).ok);
    CHECK_FALSE(verify_mis(k3, std::vector<double>{0, 0, 0}).ok);
}

TEST_CASE("eccentricity oracle") {
    const Graph p = fixtures::path(3);
    CHECK(verify_ecc(p, 0, 2).ok);
    CHECK_FALSE(verify_ecc(p, 0, 1).ok);
    CHECK(verify_ecc(p, 1, 1).ok);
}

}
