#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "salsa/graph.hpp"
#include "salsa/random.hpp"

namespace salsa {

enum class Family { er, ws, delaunay };

std::string_view to_string(Family family);
// Accepts "er", "ws", "delaunay" (case-insensitive). Throws std::invalid_argument.
Family parse_family(std::string_view name);

// Parameter ranges used when a parameter is left unset and must be sampled.
inline constexpr double kErCMin = 1.0;
inline constexpr double kErCMax = 2.0;
inline constexpr int kWsKChoices[] = {4, 6, 8};
inline constexpr double kWsPMin = 0.05;
inline constexpr double kWsPMax = 0.2;
inline constexpr int kDefaultMaxRejections = 1000;

// Parameters for one generated graph. Unset optional parameters are sampled
// from their ranges, freshly on every rejection attempt; set ones are used
// verbatim on every attempt.
struct GeneratorSpec {
    Family family = Family::er;
    std::size_t n = 0;
    std::optional<double> er_c;
    std::optional<int> ws_k;
    std::optional<double> ws_p;
    int max_rejections = kDefaultMaxRejections;
};

// The parameter values actually used for the accepted sample.
struct AcceptedParams {
    std::optional<double> er_c;
    std::optional<int> ws_k;
    std::optional<double> ws_p;
    int attempts = 0;

    friend bool operator==(const AcceptedParams&, const AcceptedParams&) = default;
};

struct GeneratedGraph {
    Graph graph;
    AcceptedParams params;
};

class RejectionLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Erdos-Renyi G(n, p) with p = c ln(n) / n clamped to 1, resampled until connected.
GeneratedGraph gen_er(const GeneratorSpec& spec, Rng& rng);

// Watts-Strogatz small world graph, resampled until connected.
GeneratedGraph gen_ws(const GeneratorSpec& spec, Rng& rng);

// Delaunay triangulation of n uniform points in the unit square.
GeneratedGraph gen_delaunay(const GeneratorSpec& spec, Rng& rng);

// Dispatches on spec.family.
GeneratedGraph generate(const GeneratorSpec& spec, Rng& rng);

// Edge probability p = c ln(n) / n, clamped to [0, 1].
double er_edge_probability(std::size_t n, double c);

// Attaches i.i.d. uniform (0, 1) weights; an exact repeat of an earlier
// weight is redrawn so all weights are distinct.
Graph assign_weights(const Graph& g, Rng& rng);

}  // namespace salsa
