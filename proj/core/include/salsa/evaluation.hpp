#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "salsa/generators.hpp"
#include "salsa/metrics.hpp"
#include "salsa/trajectory.hpp"

namespace salsa {

// Predicted outputs keyed by record id.
struct PredictionSet {
    std::unordered_map<std::string, OutputVector> outputs;
};

// Mismatch between a prediction set and the dataset it is scored against.
class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Reads line-delimited {"id": ..., "outputs": {"<name>": ...}} records.
// The output may be an array or, for scalar outputs, a bare number.
// Throws FormatError (with line number) on malformed lines and duplicate ids.
PredictionSet read_predictions(const std::filesystem::path& file, Algorithm algorithm);

// Writes predictions in the same format, ids in ascending order.
void write_predictions(const PredictionSet& predictions, Algorithm algorithm, const std::filesystem::path& file);

struct SplitScore {
    std::string split;
    Family family = Family::er;
    std::string size_label;
    std::size_t graphs = 0;
    // (metric name, value) in applicable_metrics order.
    std::vector<std::pair<std::string, double>> metrics;

    double metric(std::string_view name) const;
};

struct EvaluationReport {
    Algorithm algorithm = Algorithm::bfs;
    std::vector<SplitScore> splits;
};

// Scores every split that has at least one predicted id. Within such a
// split every record needs a prediction. Unknown ids, missing ids and shape
// mismatches raise EvaluationError.
EvaluationReport evaluate(const std::filesystem::path& dataset_dir, const PredictionSet& predictions);

// Ground-truth outputs of every record, usable as a perfect prediction set.
PredictionSet truth_predictions(const std::filesystem::path& dataset_dir);

std::string format_table(const EvaluationReport& report);
// Machine-readable report: per-split scores plus results[metric][family][size]
// for single-size splits.
std::string format_json(const EvaluationReport& report);

}  // namespace salsa
