#pragma once

#include <memory>
#include <span>
#include <vector>

#include "salsa/graph.hpp"
#include "salsa/random.hpp"
#include "salsa/trajectory.hpp"

namespace salsa {

using GraphPtr = std::shared_ptr<const Graph>;

// Breadth-first search from source. One step per frontier expansion; a newly
// reached node adopts its lowest-id reached neighbor as parent.
Trajectory run_bfs(GraphPtr g, NodeId source);

// Recursive depth-first search from node 0, neighbors in ascending id.
// One step per node discovery, so the trajectory has n steps.
Trajectory run_dfs(GraphPtr g);

// Dijkstra shortest-path tree towards source. One step per finalized node.
// Requires valid weights (finite, positive, distinct).
Trajectory run_dijkstra(GraphPtr g, NodeId source);

// Prim's algorithm for the maximum spanning tree rooted at source.
// One step per node added. Requires valid weights.
Trajectory run_mst(GraphPtr g, NodeId source);

// Randomized synchronous maximal independent set: in each phase every
// undecided node holding a strict local minimum of fresh random values joins
// the set, and members plus their neighbors retire. One step per phase.
Trajectory run_mis(GraphPtr g, Rng& rng);
// Same, with caller-supplied values: phase_values[i] is used in phase i.
// Throws std::invalid_argument if the phases run out.
Trajectory run_mis(GraphPtr g, std::span<const std::vector<double>> phase_values);

// Flood/echo computation of the eccentricity of source, simulated in
// synchronous rounds. One step per round.
Trajectory run_eccentricity(GraphPtr g, NodeId source);

// Runs the algorithm with a source drawn from rng where it takes one
// (BFS, Dijkstra, MST, eccentricity) and randomness drawn from rng (MIS).
Trajectory run_algorithm(Algorithm algorithm, GraphPtr g, Rng& rng);

// True for the algorithms that read edge weights.
bool needs_weights(Algorithm algorithm);

}  // namespace salsa
