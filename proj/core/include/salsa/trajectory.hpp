#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "salsa/graph.hpp"

namespace salsa {

enum class Stage { input, hint, output };
enum class Location { node, edge, graph };
enum class Kind { mask, scalar, pointer, categorical };

enum class Algorithm { bfs, dfs, dijkstra, mst, mis, eccentricity };

inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::bfs, Algorithm::dfs, Algorithm::dijkstra,
                                               Algorithm::mst, Algorithm::mis, Algorithm::eccentricity};

std::string_view to_string(Stage stage);
std::string_view to_string(Location location);
std::string_view to_string(Kind kind);
// Short names: bfs, dfs, dijkstra, mst, mis, ecc.
std::string_view to_string(Algorithm algorithm);

Stage parse_stage(std::string_view name);
Location parse_location(std::string_view name);
Kind parse_kind(std::string_view name);
// Accepts the short names plus "eccentricity".
Algorithm parse_algorithm(std::string_view name);

struct FeatureSpec {
    std::string name;
    Stage stage;
    Location location;
    Kind kind;
    // Class names for categorical features, indexed by stored value.
    std::vector<std::string> categories = {};
    // Set for inputs that hold one node vector per step (MIS randomness).
    bool per_step = false;

    friend bool operator==(const FeatureSpec&, const FeatureSpec&) = default;
};

// Feature values are flat: length n at node location, |edges| at edge
// location, 1 at graph location. Masks hold 0/1, pointers hold node indices
// and categoricals hold class indices, all stored exactly as doubles.
struct Feature {
    std::string name;
    std::vector<double> values;

    friend bool operator==(const Feature&, const Feature&) = default;
};

using FeatureSet = std::vector<Feature>;

// Feature schema of an algorithm, inputs first, then hints, then outputs.
std::span<const FeatureSpec> schema(Algorithm algorithm);
const FeatureSpec& feature_spec(Algorithm algorithm, std::string_view name);

// Name of the hint that the output feature must equal at the last step.
// Returns an empty view for outputs derived differently (MIS, eccentricity).
std::string_view output_hint_name(Algorithm algorithm);

// One algorithm execution on one graph.
struct Trajectory {
    Algorithm algorithm = Algorithm::bfs;
    std::shared_ptr<const Graph> graph;
    FeatureSet inputs;
    // Random values supplied as input, one node vector per step (MIS only).
    std::vector<std::vector<double>> randomness;
    // hints[t] is the state after step t + 1; every step has every hint.
    std::vector<FeatureSet> hints;
    FeatureSet outputs;

    std::size_t length() const { return hints.size(); }

    // Throw std::out_of_range when the feature is absent.
    const Feature& input(std::string_view name) const;
    const Feature& hint(std::size_t step, std::string_view name) const;
    const Feature& output(std::string_view name) const;

    friend bool operator==(const Trajectory& a, const Trajectory& b);
};

// Problems found by the structural audit: schema coverage and shapes,
// pointer closure (every pointer is self or a neighbor), and agreement of the
// outputs with the final hint step. Empty when the trajectory is sound.
std::vector<std::string> audit_trajectory(const Trajectory& t);

}  // namespace salsa
