#include "salsa/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace salsa {

OutputKind output_kind(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::bfs:
        case Algorithm::dfs:
        case Algorithm::dijkstra:
        case Algorithm::mst: return OutputKind::pointer;
        case Algorithm::mis: return OutputKind::mask;
        case Algorithm::eccentricity: return OutputKind::scalar;
    }
    throw std::invalid_argument("unknown algorithm");
}

std::string_view output_name(Algorithm algorithm) {
    switch (output_kind(algorithm)) {
        case OutputKind::pointer: return "pi";
        case OutputKind::mask: return "in_mis";
        case OutputKind::scalar: return "ecc";
    }
    return {};
}

std::int64_t round_half_away(double x) { return static_cast<std::int64_t>(std::round(x)); }

namespace {

void check_shapes(std::span<const OutputVector> predictions, std::span<const OutputVector> truth, OutputKind kind) {
    if (predictions.size() != truth.size()) {
        throw std::invalid_argument("got " + std::to_string(predictions.size()) + " predictions for " +
                                    std::to_string(truth.size()) + " graphs");
    }
    if (truth.empty()) throw std::invalid_argument("nothing to score");
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (predictions[i].size() != truth[i].size()) {
            throw std::invalid_argument("graph " + std::to_string(i) + ": prediction has " +
                                        std::to_string(predictions[i].size()) + " values, truth has " +
                                        std::to_string(truth[i].size()));
        }
        if (kind == OutputKind::scalar && truth[i].size() != 1) {
            throw std::invalid_argument("graph " + std::to_string(i) + ": scalar output must hold one value");
        }
    }
}

bool element_correct(double predicted, double actual, OutputKind kind) {
    switch (kind) {
        case OutputKind::pointer: return predicted == actual;
        case OutputKind::mask: return (predicted >= 0.5) == (actual == 1.0);
        case OutputKind::scalar:
            return std::isfinite(predicted) && static_cast<double>(round_half_away(predicted)) == actual;
    }
    return false;
}

double percent(double fraction) { return 100.0 * fraction; }

}  // namespace

double node_accuracy(std::span<const OutputVector> predictions, std::span<const OutputVector> truth, OutputKind kind) {
    if (kind == OutputKind::scalar) throw std::invalid_argument("node accuracy needs node-level outputs");
    check_shapes(predictions, truth, kind);
    double sum = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (truth[i].empty()) throw std::invalid_argument("graph " + std::to_string(i) + " has no nodes");
        std::size_t correct = 0;
        for (std::size_t v = 0; v < truth[i].size(); ++v) correct += element_correct(predictions[i][v], truth[i][v], kind);
        sum += static_cast<double>(correct) / static_cast<double>(truth[i].size());
    }
    return percent(sum / static_cast<double>(truth.size()));
}

double graph_accuracy(std::span<const OutputVector> predictions, std::span<const OutputVector> truth, OutputKind kind) {
    check_shapes(predictions, truth, kind);
    std::size_t solved = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        bool all = true;
        for (std::size_t v = 0; v < truth[i].size() && all; ++v) all = element_correct(predictions[i][v], truth[i][v], kind);
        solved += all;
    }
    return percent(static_cast<double>(solved) / static_cast<double>(truth.size()));
}

double node_f1(std::span<const OutputVector> predictions, std::span<const OutputVector> truth, OutputKind kind) {
    if (kind != OutputKind::mask) throw std::invalid_argument("node F1 applies to mask outputs only");
    check_shapes(predictions, truth, kind);
    double sum = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        std::size_t tp = 0, fp = 0, fn = 0;
        for (std::size_t v = 0; v < truth[i].size(); ++v) {
            const bool p = predictions[i][v] >= 0.5;
            const bool t = truth[i][v] == 1.0;
            tp += p && t;
            fp += p && !t;
            fn += !p && t;
        }
        const std::size_t denom = 2 * tp + fp + fn;
        sum += denom == 0 ? 1.0 : 2.0 * static_cast<double>(tp) / static_cast<double>(denom);
    }
    return percent(sum / static_cast<double>(truth.size()));
}

double graph_mse(std::span<const OutputVector> predictions, std::span<const OutputVector> truth, OutputKind kind) {
    if (kind != OutputKind::scalar) throw std::invalid_argument("graph MSE applies to scalar outputs only");
    check_shapes(predictions, truth, kind);
    double sum = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const double diff = predictions[i][0] - truth[i][0];
        sum += diff * diff;
    }
    return sum / static_cast<double>(truth.size());
}

std::vector<std::string_view> applicable_metrics(Algorithm algorithm) {
    switch (output_kind(algorithm)) {
        case OutputKind::pointer: return {"node_accuracy", "graph_accuracy"};
        case OutputKind::mask: return {"node_accuracy", "graph_accuracy", "node_f1"};
        case OutputKind::scalar: return {"graph_accuracy", "graph_mse"};
    }
    return {};
}

}  // namespace salsa
