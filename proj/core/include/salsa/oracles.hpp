#pragma once

#include <span>
#include <string>

#include "salsa/graph.hpp"
#include "salsa/trajectory.hpp"

// Brute-force checkers for algorithm outputs. They depend only on Graph and
// recompute every answer with their own code, so agreement with the
// trajectory engine is independent evidence.
namespace salsa::oracles {

struct Verdict {
    bool ok = true;
    std::string reason;

    explicit operator bool() const { return ok; }

    static Verdict pass() { return {}; }
    static Verdict fail(std::string reason) { return {false, std::move(reason)}; }
};

// Parents must point one BFS layer closer to source; pi[source] == source.
Verdict verify_bfs(const Graph& g, NodeId source, std::span<const double> pi);

// Parents must equal those of a recursive DFS from node 0 that visits
// neighbors in ascending id.
Verdict verify_dfs(const Graph& g, std::span<const double> pi);

// Distances implied by the parent tree must equal Bellman-Ford distances.
Verdict verify_sssp(const Graph& g, NodeId source, std::span<const double> pi);

// Parent edges must form a spanning tree equal to the maximum spanning tree
// found by Kruskal's algorithm (unique for distinct weights).
Verdict verify_mst(const Graph& g, std::span<const double> pi);

// The mask must be an independent and maximal set.
Verdict verify_mis(const Graph& g, std::span<const double> mask);

// value must equal the largest BFS distance from source.
Verdict verify_ecc(const Graph& g, NodeId source, double value);

// Runs the oracle matching t.algorithm against its inputs and outputs.
Verdict verify_trajectory(const Trajectory& t);

}  // namespace salsa::oracles
