#include "salsa/evaluation.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>

#include "canonical_json.hpp"
#include "json.hpp"
#include "salsa/dataset_io.hpp"

namespace salsa {

using nlohmann::json;
namespace fs = std::filesystem;

double SplitScore::metric(std::string_view name) const {
    for (const auto& [k, v] : metrics) {
        if (k == name) return v;
    }
    throw std::out_of_range("no metric '" + std::string(name) + "' for split " + split);
}

PredictionSet read_predictions(const fs::path& file, Algorithm algorithm) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw FormatError("cannot open predictions", file);
    const std::string name(output_name(algorithm));
    PredictionSet set;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            const json doc = json::parse(line);
            auto id = doc.at("id").get<std::string>();
            const json& value = doc.at("outputs").at(name);
            OutputVector out;
            if (value.is_number()) {
                out.push_back(value.get<double>());
            } else {
                for (const auto& x : value) {
                    if (!x.is_number()) throw FormatError("output '" + name + "' holds a non-number", file, line_no);
                    out.push_back(x.get<double>());
                }
            }
            if (!set.outputs.emplace(std::move(id), std::move(out)).second) {
                throw FormatError("duplicate prediction id", file, line_no);
            }
        } catch (const json::exception& e) {
            throw FormatError(std::string("malformed prediction: ") + e.what(), file, line_no);
        }
    }
    return set;
}

void write_predictions(const PredictionSet& predictions, Algorithm algorithm, const fs::path& file) {
    std::vector<std::string> ids;
    ids.reserve(predictions.outputs.size());
    for (const auto& [id, _] : predictions.outputs) ids.push_back(id);
    std::sort(ids.begin(), ids.end());

    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    const bool integral = output_kind(algorithm) != OutputKind::scalar;
    for (const auto& id : ids) {
        std::string line = "{\"id\":";
        canonical::append_string(line, id);
        line += ",\"outputs\":{";
        canonical::append_string(line, output_name(algorithm));
        line += ':';
        canonical::append_array(line, predictions.outputs.at(id), integral);
        line += "}}\n";
        out << line;
    }
    if (!out) throw std::runtime_error("failed writing " + file.string());
}

EvaluationReport evaluate(const fs::path& dataset_dir, const PredictionSet& predictions) {
    const DatasetManifest manifest = read_manifest(dataset_dir);
    const Algorithm algorithm = manifest.algorithm;
    const OutputKind kind = output_kind(algorithm);
    const std::string name(output_name(algorithm));

    std::set<std::string> known;
    for (const auto& split : manifest.splits) {
        for (const auto& g : split.graphs) known.insert(g.id);
    }
    for (const auto& [id, _] : predictions.outputs) {
        if (!known.contains(id)) throw EvaluationError("prediction id '" + id + "' is not in the dataset");
    }

    EvaluationReport report;
    report.algorithm = algorithm;
    for (const auto& split : manifest.splits) {
        const bool selected = std::any_of(split.graphs.begin(), split.graphs.end(),
                                          [&](const GraphRecordInfo& g) { return predictions.outputs.contains(g.id); });
        if (!selected) continue;

        std::vector<OutputVector> truth, predicted;
        RecordReader reader(dataset_dir / split.file_name(), algorithm, false);
        while (auto rec = reader.next()) {
            auto it = predictions.outputs.find(rec->id);
            if (it == predictions.outputs.end()) {
                throw EvaluationError("no prediction for '" + rec->id + "' (split " + split.spec.name +
                                      " is partially predicted)");
            }
            const auto& actual = rec->trajectory.output(name).values;
            if (it->second.size() != actual.size()) {
                throw EvaluationError("prediction for '" + rec->id + "' has " + std::to_string(it->second.size()) +
                                      " values, expected " + std::to_string(actual.size()));
            }
            truth.push_back(actual);
            predicted.push_back(it->second);
        }

        SplitScore score{split.spec.name, split.spec.family, split.spec.size_label(), truth.size(), {}};
        for (auto metric : applicable_metrics(algorithm)) {
            double value = 0.0;
            if (metric == "node_accuracy") value = node_accuracy(predicted, truth, kind);
            if (metric == "graph_accuracy") value = graph_accuracy(predicted, truth, kind);
            if (metric == "node_f1") value = node_f1(predicted, truth, kind);
            if (metric == "graph_mse") value = graph_mse(predicted, truth, kind);
            score.metrics.emplace_back(metric, value);
        }
        report.splits.push_back(std::move(score));
    }
    if (report.splits.empty()) throw EvaluationError("predictions cover no split of the dataset");
    return report;
}

PredictionSet truth_predictions(const fs::path& dataset_dir) {
    const DatasetManifest manifest = read_manifest(dataset_dir);
    const std::string name(output_name(manifest.algorithm));
    PredictionSet set;
    for (const auto& split : manifest.splits) {
        RecordReader reader(dataset_dir / split.file_name(), manifest.algorithm, false);
        while (auto rec = reader.next()) set.outputs.emplace(rec->id, rec->trajectory.output(name).values);
    }
    return set;
}

std::string format_table(const EvaluationReport& report) {
    std::string out = "algorithm: " + std::string(to_string(report.algorithm)) +
                      "  (node metrics macro-averaged per graph; scalars rounded half away from zero)\n";
    char buf[128];
    std::snprintf(buf, sizeof buf, "%-20s %-9s %6s %7s", "split", "family", "n", "graphs");
    out += buf;
    const auto metrics = applicable_metrics(report.algorithm);
    for (auto m : metrics) {
        std::snprintf(buf, sizeof buf, " %15s", std::string(m).c_str());
        out += buf;
    }
    out += '\n';
    for (const auto& s : report.splits) {
        std::snprintf(buf, sizeof buf, "%-20s %-9s %6s %7zu", s.split.c_str(), std::string(to_string(s.family)).c_str(),
                      s.size_label.c_str(), s.graphs);
        out += buf;
        for (const auto& [_, v] : s.metrics) {
            std::snprintf(buf, sizeof buf, " %15.2f", v);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

std::string format_json(const EvaluationReport& report) {
    json splits = json::array();
    json results = json::object();
    for (const auto& s : report.splits) {
        json metrics = json::object();
        for (const auto& [k, v] : s.metrics) {
            metrics[k] = v;
            if (s.size_label != "mixed") results[k][std::string(to_string(s.family))][s.size_label] = v;
        }
        splits.push_back({{"split", s.split},
                          {"family", std::string(to_string(s.family))},
                          {"size", s.size_label},
                          {"graphs", s.graphs},
                          {"metrics", std::move(metrics)}});
    }
    json doc{{"algorithm", std::string(to_string(report.algorithm))},
             {"node_averaging", "macro"},
             {"scalar_rounding", "half away from zero"},
             {"results", std::move(results)},
             {"splits", std::move(splits)}};
    return canonical::dump(doc) + "\n";
}

}  // namespace salsa
