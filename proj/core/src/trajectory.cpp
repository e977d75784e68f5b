#include "salsa/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace salsa {

std::string_view to_string(Stage stage) {
    switch (stage) {
        case Stage::input: return "input";
        case Stage::hint: return "hint";
        case Stage::output: return "output";
    }
    return "unknown";
}

std::string_view to_string(Location location) {
    switch (location) {
        case Location::node: return "node";
        case Location::edge: return "edge";
        case Location::graph: return "graph";
    }
    return "unknown";
}

std::string_view to_string(Kind kind) {
    switch (kind) {
        case Kind::mask: return "mask";
        case Kind::scalar: return "scalar";
        case Kind::pointer: return "pointer";
        case Kind::categorical: return "categorical";
    }
    return "unknown";
}

std::string_view to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::bfs: return "bfs";
        case Algorithm::dfs: return "dfs";
        case Algorithm::dijkstra: return "dijkstra";
        case Algorithm::mst: return "mst";
        case Algorithm::mis: return "mis";
        case Algorithm::eccentricity: return "ecc";
    }
    return "unknown";
}

Stage parse_stage(std::string_view name) {
    for (auto s : {Stage::input, Stage::hint, Stage::output}) {
        if (to_string(s) == name) return s;
    }
    throw std::invalid_argument("unknown stage '" + std::string(name) + "'");
}

Location parse_location(std::string_view name) {
    for (auto l : {Location::node, Location::edge, Location::graph}) {
        if (to_string(l) == name) return l;
    }
    throw std::invalid_argument("unknown location '" + std::string(name) + "'");
}

Kind parse_kind(std::string_view name) {
    for (auto k : {Kind::mask, Kind::scalar, Kind::pointer, Kind::categorical}) {
        if (to_string(k) == name) return k;
    }
    throw std::invalid_argument("unknown feature kind '" + std::string(name) + "'");
}

Algorithm parse_algorithm(std::string_view name) {
    if (name == "eccentricity") return Algorithm::eccentricity;
    for (auto a : kAllAlgorithms) {
        if (to_string(a) == name) return a;
    }
    throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

namespace {

using enum Stage;
using enum Location;
using enum Kind;

const std::vector<FeatureSpec> kBfsSchema = {
    {"pos", input, node, scalar},
    {"s", input, node, mask},
    {"reach_h", hint, node, mask},
    {"pi_h", hint, node, pointer},
    {"pi", output, node, pointer},
};

const std::vector<FeatureSpec> kDfsSchema = {
    {"pos", input, node, scalar},
    {"color", hint, node, categorical, {"white", "gray", "black"}},
    {"pi_h", hint, node, pointer},
    {"pi", output, node, pointer},
};

const std::vector<FeatureSpec> kDijkstraSchema = {
    {"pos", input, node, scalar},
    {"s", input, node, mask},
    {"weight", input, edge, scalar},
    {"mark", hint, node, mask},
    {"in_queue", hint, node, mask},
    {"d", hint, node, scalar},
    {"pi_h", hint, node, pointer},
    {"pi", output, node, pointer},
};

const std::vector<FeatureSpec> kMstSchema = {
    {"pos", input, node, scalar},
    {"s", input, node, mask},
    {"weight", input, edge, scalar},
    {"in_tree", hint, node, mask},
    {"in_queue", hint, node, mask},
    {"key", hint, node, scalar},
    {"pi_h", hint, node, pointer},
    {"pi", output, node, pointer},
};

const std::vector<FeatureSpec> kMisSchema = {
    {"pos", input, node, scalar},
    {"rand", input, node, scalar, {}, true},
    {"status", hint, node, categorical, {"undecided", "in_mis", "out"}},
    {"r", hint, node, scalar},
    {"in_mis", output, node, mask},
};

const std::vector<FeatureSpec> kEccSchema = {
    {"pos", input, node, scalar},
    {"s", input, node, mask},
    {"alive", hint, node, mask},
    {"echoed", hint, node, mask},
    {"dist", hint, node, scalar},
    {"echo", hint, node, scalar},
    {"parent_h", hint, node, pointer},
    {"ecc", output, graph, scalar},
};

const Feature* find_feature(const FeatureSet& set, std::string_view name) {
    auto it = std::find_if(set.begin(), set.end(), [&](const Feature& f) { return f.name == name; });
    return it == set.end() ? nullptr : &*it;
}

std::size_t expected_length(const FeatureSpec& spec, const Graph& g) {
    switch (spec.location) {
        case Location::node: return g.num_nodes();
        case Location::edge: return g.num_edges();
        case Location::graph: return 1;
    }
    return 0;
}

bool is_integral(double x) { return std::isfinite(x) && std::floor(x) == x; }

void check_values(const FeatureSpec& spec, const Feature& f, const Graph& g, const std::string& where,
                  std::vector<std::string>& problems) {
    if (f.values.size() != expected_length(spec, g)) {
        problems.push_back(where + ": feature '" + spec.name + "' has " + std::to_string(f.values.size()) +
                           " values, expected " + std::to_string(expected_length(spec, g)));
        return;
    }
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const double x = f.values[i];
        std::string bad;
        switch (spec.kind) {
            case Kind::scalar:
                if (!std::isfinite(x)) bad = "non-finite scalar";
                break;
            case Kind::mask:
                if (x != 0.0 && x != 1.0) bad = "mask value not 0/1";
                break;
            case Kind::categorical:
                if (!is_integral(x) || x < 0 || x >= static_cast<double>(spec.categories.size())) {
                    bad = "category out of range";
                }
                break;
            case Kind::pointer: {
                if (!is_integral(x) || x < 0 || x >= static_cast<double>(g.num_nodes())) {
                    bad = "pointer out of range";
                    break;
                }
                if (spec.location == Location::node) {
                    const auto v = static_cast<NodeId>(i);
                    const auto target = static_cast<NodeId>(x);
                    if (target != v && !g.has_edge(v, target)) bad = "pointer leaves the neighborhood";
                }
                break;
            }
        }
        if (!bad.empty()) {
            problems.push_back(where + ": feature '" + spec.name + "' index " + std::to_string(i) + ": " + bad);
            return;
        }
    }
}

void check_set(const Trajectory& t, Stage stage, const FeatureSet& set, const std::string& where,
               std::vector<std::string>& problems) {
    std::size_t expected = 0;
    for (const auto& spec : schema(t.algorithm)) {
        if (spec.stage != stage || spec.per_step) continue;
        ++expected;
        const Feature* f = find_feature(set, spec.name);
        if (!f) {
            problems.push_back(where + ": missing feature '" + spec.name + "'");
            continue;
        }
        check_values(spec, *f, *t.graph, where, problems);
    }
    if (set.size() != expected) {
        problems.push_back(where + ": " + std::to_string(set.size()) + " features, schema lists " +
                           std::to_string(expected));
    }
}

}  // namespace

std::span<const FeatureSpec> schema(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::bfs: return kBfsSchema;
        case Algorithm::dfs: return kDfsSchema;
        case Algorithm::dijkstra: return kDijkstraSchema;
        case Algorithm::mst: return kMstSchema;
        case Algorithm::mis: return kMisSchema;
        case Algorithm::eccentricity: return kEccSchema;
    }
    throw std::invalid_argument("unknown algorithm");
}

const FeatureSpec& feature_spec(Algorithm algorithm, std::string_view name) {
    for (const auto& spec : schema(algorithm)) {
        if (spec.name == name) return spec;
    }
    throw std::out_of_range("algorithm " + std::string(to_string(algorithm)) + " has no feature '" +
                            std::string(name) + "'");
}

std::string_view output_hint_name(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::bfs:
        case Algorithm::dfs:
        case Algorithm::dijkstra:
        case Algorithm::mst: return "pi_h";
        case Algorithm::mis:
        case Algorithm::eccentricity: return {};
    }
    return {};
}

const Feature& Trajectory::input(std::string_view name) const {
    if (const Feature* f = find_feature(inputs, name)) return *f;
    throw std::out_of_range("trajectory has no input '" + std::string(name) + "'");
}

const Feature& Trajectory::hint(std::size_t step, std::string_view name) const {
    if (step >= hints.size()) throw std::out_of_range("hint step " + std::to_string(step) + " out of range");
    if (const Feature* f = find_feature(hints[step], name)) return *f;
    throw std::out_of_range("trajectory has no hint '" + std::string(name) + "'");
}

const Feature& Trajectory::output(std::string_view name) const {
    if (const Feature* f = find_feature(outputs, name)) return *f;
    throw std::out_of_range("trajectory has no output '" + std::string(name) + "'");
}

bool operator==(const Trajectory& a, const Trajectory& b) {
    const bool graphs_equal = (a.graph == b.graph) || (a.graph && b.graph && *a.graph == *b.graph);
    return graphs_equal && a.algorithm == b.algorithm && a.inputs == b.inputs && a.randomness == b.randomness &&
           a.hints == b.hints && a.outputs == b.outputs;
}

std::vector<std::string> audit_trajectory(const Trajectory& t) {
    std::vector<std::string> problems;
    if (!t.graph) {
        problems.emplace_back("trajectory has no graph");
        return problems;
    }
    const Graph& g = *t.graph;
    if (t.hints.empty()) problems.emplace_back("trajectory length is 0");

    check_set(t, Stage::input, t.inputs, "inputs", problems);
    for (std::size_t step = 0; step < t.hints.size(); ++step) {
        check_set(t, Stage::hint, t.hints[step], "hints[" + std::to_string(step) + "]", problems);
    }
    check_set(t, Stage::output, t.outputs, "outputs", problems);

    const bool wants_randomness = std::any_of(schema(t.algorithm).begin(), schema(t.algorithm).end(),
                                              [](const FeatureSpec& s) { return s.per_step; });
    if (wants_randomness) {
        if (t.randomness.size() != t.hints.size()) {
            problems.push_back("randomness has " + std::to_string(t.randomness.size()) + " steps, trajectory has " +
                               std::to_string(t.hints.size()));
        }
        for (const auto& row : t.randomness) {
            const bool ok = row.size() == g.num_nodes() &&
                            std::all_of(row.begin(), row.end(), [](double x) { return x >= 0.0 && x <= 1.0; });
            if (!ok) {
                problems.emplace_back("randomness row has wrong length or values outside [0, 1]");
                break;
            }
        }
    } else if (!t.randomness.empty()) {
        problems.emplace_back("randomness present for a deterministic algorithm");
    }
    if (!problems.empty() || t.hints.empty()) return problems;

    const FeatureSet& last = t.hints.back();
    switch (t.algorithm) {
        case Algorithm::bfs:
        case Algorithm::dfs:
        case Algorithm::dijkstra:
        case Algorithm::mst:
            if (find_feature(last, output_hint_name(t.algorithm))->values != t.output("pi").values) {
                problems.emplace_back("output 'pi' differs from the final 'pi_h' hint");
            }
            break;
        case Algorithm::mis: {
            const auto& status = find_feature(last, "status")->values;
            const auto& mask = t.output("in_mis").values;
            for (std::size_t v = 0; v < g.num_nodes(); ++v) {
                if (status[v] == 0.0) {
                    problems.push_back("node " + std::to_string(v) + " still undecided at the final step");
                    break;
                }
                if ((status[v] == 1.0) != (mask[v] == 1.0)) {
                    problems.push_back("output 'in_mis' differs from the final status at node " + std::to_string(v));
                    break;
                }
            }
            break;
        }
        case Algorithm::eccentricity: {
            const auto& s = t.input("s").values;
            const auto source = static_cast<std::size_t>(std::find(s.begin(), s.end(), 1.0) - s.begin());
            if (source >= g.num_nodes()) {
                problems.emplace_back("no source flagged in input 's'");
            } else if (find_feature(last, "echo")->values[source] != t.output("ecc").values[0]) {
                problems.emplace_back("output 'ecc' differs from the source's final echo value");
            }
            break;
        }
    }
    return problems;
}

}  // namespace salsa
