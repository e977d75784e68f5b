#include "salsa/dataset_io.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <set>
#include <utility>

#include "canonical_json.hpp"
#include "json.hpp"

namespace salsa {

using nlohmann::json;
namespace fs = std::filesystem;

FormatError::FormatError(const std::string& what, fs::path file, std::size_t line)
    : std::runtime_error([&] {
          std::string msg;
          if (!file.empty()) msg += file.string() + ":";
          if (line > 0) msg += std::to_string(line) + ":";
          if (!msg.empty()) msg += " ";
          return msg + what;
      }()),
      file_(std::move(file)),
      line_(line) {}

const SplitManifest& DatasetManifest::split(std::string_view name) const {
    for (const auto& s : splits) {
        if (s.spec.name == name) return s;
    }
    throw std::out_of_range("dataset has no split '" + std::string(name) + "'");
}

std::map<std::string, std::string> default_conventions() {
    return {
        {"rng", "xoshiro256** seeded by splitmix64(master_seed, stream_index)"},
        {"edge_weights", "iid uniform (0,1), exact repeats redrawn"},
        {"position_input", "pos(v) = v / n"},
        {"source", "drawn uniformly per graph; dfs always starts at node 0"},
        {"unreached_scalar", "0.0 with the matching reached/in_queue flag at 0"},
        {"mis_randomness", "fresh per-node values every phase, listed in inputs.rand and hint r"},
        {"bfs_step", "one frontier expansion"},
        {"dfs_dijkstra_mst_step", "one node discovery / finalization"},
        {"mis_step", "one phase"},
        {"ecc_step", "one synchronous flood/echo round"},
        {"er_parameter", "c ~ U(1,2) redrawn on every rejected attempt"},
        {"ws_parameters", "k ~ {4,6,8}, p ~ U(0.05,0.2) redrawn on every rejected attempt"},
        {"node_metric_averaging", "macro (per graph, then mean)"},
    };
}

namespace {

bool integral_kind(Kind kind) { return kind != Kind::scalar; }

const Feature* find(const FeatureSet& set, std::string_view name) {
    for (const auto& f : set) {
        if (f.name == name) return &f;
    }
    return nullptr;
}

void append_features(std::string& out, Algorithm algorithm, const FeatureSet& set,
                     const std::vector<std::vector<double>>* per_step) {
    std::vector<std::pair<std::string_view, const FeatureSpec*>> keys;
    for (const auto& spec : schema(algorithm)) {
        if (spec.per_step) {
            if (per_step) keys.emplace_back(spec.name, &spec);
        } else if (find(set, spec.name)) {
            keys.emplace_back(spec.name, &spec);
        }
    }
    for (const auto& f : set) {
        const bool known = std::any_of(keys.begin(), keys.end(), [&](const auto& k) { return k.first == f.name; });
        if (!known) throw std::invalid_argument("feature '" + f.name + "' is not in the schema");
    }
    std::sort(keys.begin(), keys.end());
    out += '{';
    bool first = true;
    for (const auto& [name, spec] : keys) {
        if (!first) out += ',';
        first = false;
        canonical::append_string(out, name);
        out += ':';
        if (spec->per_step) {
            out += '[';
            for (std::size_t i = 0; i < per_step->size(); ++i) {
                if (i) out += ',';
                canonical::append_array(out, (*per_step)[i], integral_kind(spec->kind));
            }
            out += ']';
        } else {
            canonical::append_array(out, find(set, name)->values, integral_kind(spec->kind));
        }
    }
    out += '}';
}

[[noreturn]] void malformed(const std::string& what) { throw FormatError(what); }

std::vector<double> number_array(const json& v, std::string_view name) {
    if (!v.is_array()) malformed("feature '" + std::string(name) + "' is not an array");
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& x : v) {
        if (!x.is_number()) malformed("feature '" + std::string(name) + "' holds a non-number");
        out.push_back(x.get<double>());
    }
    return out;
}

Graph graph_from_json(const json& g) {
    if (!g.is_object()) malformed("record has no graph object");
    const auto n = g.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : g.at("edges")) {
        if (!e.is_array() || e.size() != 2) malformed("edge entries must be [u, v] pairs");
        edges.push_back({e[0].get<NodeId>(), e[1].get<NodeId>()});
    }
    std::optional<std::vector<double>> weights;
    if (auto it = g.find("weights"); it != g.end()) weights = number_array(*it, "weights");
    try {
        return Graph(n, std::move(edges), std::move(weights));
    } catch (const std::invalid_argument& e) {
        malformed(std::string("invalid graph: ") + e.what());
    }
}

std::set<std::string> key_set(const json& obj) {
    std::set<std::string> keys;
    for (const auto& [k, _] : obj.items()) keys.insert(k);
    return keys;
}

FeatureSet features_from_json(const json& obj, Algorithm algorithm, Stage stage, const std::string& where) {
    if (!obj.is_object()) malformed(where + " is not an object");
    std::set<std::string> expected;
    FeatureSet out;
    for (const auto& spec : schema(algorithm)) {
        if (spec.stage != stage || spec.per_step) continue;
        expected.insert(spec.name);
        auto it = obj.find(spec.name);
        if (it == obj.end()) malformed(where + " lacks feature '" + spec.name + "'");
        out.push_back({spec.name, number_array(*it, spec.name)});
    }
    for (const auto& k : key_set(obj)) {
        const bool per_step = stage == Stage::input && k == "rand";
        if (!expected.contains(k) && !per_step) malformed(where + " has unknown feature '" + k + "'");
    }
    return out;
}

json params_to_json(const GraphRecordInfo& info) {
    json j{{"id", info.id}, {"n", info.n}, {"edges", info.num_edges}, {"attempts", info.params.attempts}};
    if (info.params.er_c) j["c"] = *info.params.er_c;
    if (info.params.ws_k) j["k"] = *info.params.ws_k;
    if (info.params.ws_p) j["p"] = *info.params.ws_p;
    return j;
}

GraphRecordInfo params_from_json(const json& j) {
    GraphRecordInfo info;
    info.id = j.at("id").get<std::string>();
    info.n = j.at("n").get<std::size_t>();
    info.num_edges = j.at("edges").get<std::size_t>();
    info.params.attempts = j.at("attempts").get<int>();
    if (j.contains("c")) info.params.er_c = j.at("c").get<double>();
    if (j.contains("k")) info.params.ws_k = j.at("k").get<int>();
    if (j.contains("p")) info.params.ws_p = j.at("p").get<double>();
    return info;
}

json schema_to_json(Algorithm algorithm) {
    json arr = json::array();
    for (const auto& spec : schema(algorithm)) {
        json j{{"name", spec.name},
               {"stage", std::string(to_string(spec.stage))},
               {"location", std::string(to_string(spec.location))},
               {"kind", std::string(to_string(spec.kind))},
               {"per_step", spec.per_step}};
        if (!spec.categories.empty()) j["categories"] = spec.categories;
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace

std::string encode_record(const Record& record) {
    const Trajectory& t = record.trajectory;
    if (!t.graph) throw std::invalid_argument("record '" + record.id + "' has no graph");
    const Graph& g = *t.graph;

    std::string out;
    out += "{\"graph\":{\"edges\":[";
    bool first = true;
    for (const auto& e : g.edges()) {
        if (!first) out += ',';
        first = false;
        out += '[';
        canonical::append_integer(out, e.u);
        out += ',';
        canonical::append_integer(out, e.v);
        out += ']';
    }
    out += "],\"n\":";
    canonical::append_integer(out, static_cast<std::int64_t>(g.num_nodes()));
    if (g.has_weights()) {
        out += ",\"weights\":";
        canonical::append_array(out, g.weights(), false);
    }
    out += "},\"hints\":[";
    for (std::size_t step = 0; step < t.hints.size(); ++step) {
        if (step) out += ',';
        append_features(out, t.algorithm, t.hints[step], nullptr);
    }
    out += "],\"id\":";
    canonical::append_string(out, record.id);
    out += ",\"inputs\":";
    append_features(out, t.algorithm, t.inputs, t.randomness.empty() ? nullptr : &t.randomness);
    out += ",\"length\":";
    canonical::append_integer(out, static_cast<std::int64_t>(t.length()));
    out += ",\"outputs\":";
    append_features(out, t.algorithm, t.outputs, nullptr);
    out += '}';
    return out;
}

Record decode_record(std::string_view line, Algorithm algorithm, bool include_hints) {
    json doc;
    try {
        if (include_hints) {
            doc = json::parse(line);
        } else {
            doc = json::parse(line, [](int depth, json::parse_event_t event, json& parsed) {
                if (event != json::parse_event_t::key) return true;
                const auto& key = parsed.get_ref<const std::string&>();
                return !((depth == 1 && key == "hints") || (depth == 2 && key == "rand"));
            });
        }
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) malformed("record is not a JSON object");

    try {
        Record rec;
        rec.id = doc.at("id").get<std::string>();
        rec.length = doc.at("length").get<std::size_t>();
        Trajectory& t = rec.trajectory;
        t.algorithm = algorithm;
        t.graph = std::make_shared<const Graph>(graph_from_json(doc.at("graph")));
        const json& inputs = doc.at("inputs");
        t.inputs = features_from_json(inputs, algorithm, Stage::input, "inputs");
        t.outputs = features_from_json(doc.at("outputs"), algorithm, Stage::output, "outputs");

        if (include_hints) {
            const json& hints = doc.at("hints");
            if (!hints.is_array()) malformed("hints is not an array");
            for (std::size_t step = 0; step < hints.size(); ++step) {
                t.hints.push_back(
                    features_from_json(hints[step], algorithm, Stage::hint, "hints[" + std::to_string(step) + "]"));
            }
            if (t.hints.size() != rec.length) {
                malformed("length " + std::to_string(rec.length) + " but " + std::to_string(t.hints.size()) +
                          " hint steps");
            }
            const bool wants_rand = std::any_of(schema(algorithm).begin(), schema(algorithm).end(),
                                                [](const FeatureSpec& s) { return s.per_step; });
            if (wants_rand) {
                auto it = inputs.find("rand");
                if (it == inputs.end() || !it->is_array()) malformed("inputs lack per-step feature 'rand'");
                for (const auto& row : *it) t.randomness.push_back(number_array(row, "rand"));
            } else if (inputs.contains("rand")) {
                malformed("inputs have unexpected feature 'rand'");
            }
        }
        return rec;
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed record: ") + e.what());
    }
}

std::pair<std::string, Graph> decode_graph(std::string_view line) {
    json doc;
    try {
        doc = json::parse(line, [](int depth, json::parse_event_t event, json& parsed) {
            if (event != json::parse_event_t::key || depth != 1) return true;
            const auto& key = parsed.get_ref<const std::string&>();
            return key == "graph" || key == "id";
        });
        return {doc.at("id").get<std::string>(), graph_from_json(doc.at("graph"))};
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed record: ") + e.what());
    }
}

void write_manifest(const DatasetManifest& manifest, const fs::path& dir) {
    json splits = json::array();
    for (const auto& s : manifest.splits) {
        json graphs = json::array();
        for (const auto& info : s.graphs) graphs.push_back(params_to_json(info));
        splits.push_back({{"name", s.spec.name},
                          {"family", std::string(to_string(s.spec.family))},
                          {"sizes", s.spec.sizes},
                          {"count", s.spec.count},
                          {"file", s.file_name()},
                          {"graphs", std::move(graphs)}});
    }
    json doc{{"format_version", manifest.format_version},
             {"algorithm", std::string(to_string(manifest.algorithm))},
             {"master_seed", manifest.master_seed},
             {"conventions", manifest.conventions},
             {"schema", schema_to_json(manifest.algorithm)},
             {"splits", std::move(splits)}};

    const fs::path path = dir / kManifestFile;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << canonical::dump(doc) << '\n';
    out.close();
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

DatasetManifest read_manifest(const fs::path& dir) {
    const fs::path path = dir / kManifestFile;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("no manifest found", path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("malformed manifest: ") + e.what(), path);
    }
    try {
        DatasetManifest m;
        m.format_version = doc.at("format_version").get<int>();
        if (m.format_version != kFormatVersion) {
            throw FormatError("format version " + std::to_string(m.format_version) + " is not supported (expected " +
                                  std::to_string(kFormatVersion) + ")",
                              path);
        }
        m.algorithm = parse_algorithm(doc.at("algorithm").get<std::string>());
        m.master_seed = doc.at("master_seed").get<std::uint64_t>();
        m.conventions = doc.at("conventions").get<std::map<std::string, std::string>>();
        if (doc.at("schema") != schema_to_json(m.algorithm)) {
            throw FormatError("feature schema does not match algorithm " + std::string(to_string(m.algorithm)), path);
        }
        for (const auto& s : doc.at("splits")) {
            SplitManifest split;
            split.spec.name = s.at("name").get<std::string>();
            split.spec.family = parse_family(s.at("family").get<std::string>());
            split.spec.sizes = s.at("sizes").get<std::vector<std::size_t>>();
            split.spec.count = s.at("count").get<std::size_t>();
            for (const auto& g : s.at("graphs")) split.graphs.push_back(params_from_json(g));
            if (split.graphs.size() != split.spec.count) {
                throw FormatError("split '" + split.spec.name + "' lists " + std::to_string(split.graphs.size()) +
                                      " graphs but count " + std::to_string(split.spec.count),
                                  path);
            }
            m.splits.push_back(std::move(split));
        }
        return m;
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed manifest: ") + e.what(), path);
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("malformed manifest: ") + e.what(), path);
    }
}

RecordWriter::RecordWriter(const fs::path& file) : path_(file), out_(file, std::ios::binary | std::ios::trunc) {
    if (!out_) throw std::runtime_error("cannot open " + file.string() + " for writing");
}

void RecordWriter::write(const Record& record) { write_line(encode_record(record)); }

void RecordWriter::write_line(std::string_view encoded) {
    out_.write(encoded.data(), static_cast<std::streamsize>(encoded.size()));
    out_.put('\n');
    if (!out_) throw std::runtime_error("failed writing " + path_.string());
    ++count_;
}

void RecordWriter::close() {
    out_.close();
    if (!out_) throw std::runtime_error("failed closing " + path_.string());
}

RecordReader::RecordReader(const fs::path& file, Algorithm algorithm, bool include_hints)
    : path_(file), in_(file, std::ios::binary), algorithm_(algorithm), include_hints_(include_hints) {
    if (!in_) throw FormatError("cannot open record file", file);
}

std::optional<std::string> RecordReader::next_line() {
    std::string line;
    if (!std::getline(in_, line)) return std::nullopt;
    ++line_;
    if (in_.eof()) throw FormatError("truncated record (no terminating newline)", path_, line_);
    return line;
}

std::optional<Record> RecordReader::next() {
    auto line = next_line();
    if (!line) return std::nullopt;
    try {
        return decode_record(*line, algorithm_, include_hints_);
    } catch (const FormatError& e) {
        throw FormatError(e.what(), path_, line_);
    }
}

std::optional<std::pair<std::string, Graph>> RecordReader::next_graph() {
    auto line = next_line();
    if (!line) return std::nullopt;
    try {
        return decode_graph(*line);
    } catch (const FormatError& e) {
        throw FormatError(e.what(), path_, line_);
    }
}

void write_dataset(const SplitRecords& records, const DatasetManifest& manifest, const fs::path& out_dir) {
    for (const auto& [name, _] : records) {
        const bool listed = std::any_of(manifest.splits.begin(), manifest.splits.end(),
                                        [&](const SplitManifest& s) { return s.spec.name == name; });
        if (!listed) throw std::invalid_argument("records for split '" + name + "' not listed in the manifest");
    }
    DatasetManifest m = manifest;
    static const std::vector<Record> kNone;
    for (auto& split : m.splits) {
        auto it = records.find(split.spec.name);
        const auto& recs = it == records.end() ? kNone : it->second;
        if (recs.size() != split.spec.count) {
            throw std::invalid_argument("split '" + split.spec.name + "' has " + std::to_string(recs.size()) +
                                        " records, manifest count " + std::to_string(split.spec.count));
        }
        for (const auto& r : recs) {
            if (r.trajectory.algorithm != m.algorithm) {
                throw std::invalid_argument("record '" + r.id + "' is not a " +
                                            std::string(to_string(m.algorithm)) + " trajectory");
            }
            const auto problems = audit_trajectory(r.trajectory);
            if (!problems.empty()) {
                throw std::invalid_argument("record '" + r.id + "' does not match the schema: " + problems.front());
            }
        }
        if (split.graphs.empty()) {
            for (const auto& r : recs) {
                split.graphs.push_back({r.id, r.trajectory.graph->num_nodes(), r.trajectory.graph->num_edges(), {}});
            }
        }
        if (split.graphs.size() != recs.size()) {
            throw std::invalid_argument("split '" + split.spec.name + "' graph info does not match its records");
        }
    }

    fs::create_directories(out_dir);
    for (const auto& split : m.splits) {
        RecordWriter writer(out_dir / split.file_name());
        auto it = records.find(split.spec.name);
        if (it != records.end()) {
            for (const auto& r : it->second) writer.write(r);
        }
        writer.close();
    }
    write_manifest(m, out_dir);
}

Dataset read_dataset(const fs::path& dir) {
    Dataset ds;
    ds.manifest = read_manifest(dir);
    for (const auto& split : ds.manifest.splits) {
        const fs::path file = dir / split.file_name();
        RecordReader reader(file, ds.manifest.algorithm);
        auto& out = ds.records[split.spec.name];
        while (auto rec = reader.next()) out.push_back(std::move(*rec));
        if (out.size() != split.spec.count) {
            throw FormatError("holds " + std::to_string(out.size()) + " records, manifest count " +
                                  std::to_string(split.spec.count),
                              file);
        }
    }
    return ds;
}

}  // namespace salsa
