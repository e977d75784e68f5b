#include "commands.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "salsa/dataset_io.hpp"
#include "salsa/evaluation.hpp"
#include "salsa/generation.hpp"
#include "salsa/graph_stats.hpp"
#include "salsa/splits.hpp"
#include "salsa/validation.hpp"

namespace salsa::cli {

namespace fs = std::filesystem;

namespace {

// Thrown for bad flag values found after parsing; maps to kExitUsage.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
    std::uint64_t value = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) throw UsageError(what + " is not an unsigned 64-bit integer: '" + text + "'");
    return value;
}

struct GenerateArgs {
    std::string algorithm;
    std::string out;
    std::optional<std::string> seed;
    std::string splits = "default";
    std::size_t test_count = kDefaultTestCount;
    unsigned jobs = 1;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
    std::uint64_t seed = 0;
    if (a.seed) {
        seed = parse_u64(*a.seed, "--seed");
    } else if (const char* env = std::getenv("SALSA_SEED")) {
        seed = parse_u64(env, "SALSA_SEED");
    }

    std::vector<SplitSpec> splits;
    if (a.splits == "default") {
        splits = default_splits(a.test_count);
    } else {
        try {
            splits = load_split_file(a.splits);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    try {
        validate_splits(splits);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    std::vector<Algorithm> algorithms;
    if (a.algorithm == "all") {
        algorithms.assign(std::begin(kAllAlgorithms), std::end(kAllAlgorithms));
    } else {
        algorithms.push_back(parse_algorithm(a.algorithm));
    }

    for (Algorithm algo : algorithms) {
        const fs::path dir = a.algorithm == "all" ? fs::path(a.out) / std::string(to_string(algo)) : fs::path(a.out);
        GenerationOptions options;
        options.algorithm = algo;
        options.master_seed = seed;
        options.splits = splits;
        options.jobs = a.jobs;
        options.on_split_done = [&](std::string_view split, std::size_t count) {
            out << to_string(algo) << ' ' << split << ": " << count << " records\n" << std::flush;
        };
        const DatasetManifest manifest = generate_dataset(options, dir);
        std::size_t total = 0;
        for (const auto& s : manifest.splits) total += s.graphs.size();
        out << "wrote " << total << " records in " << manifest.splits.size() << " splits to " << dir.string()
            << " (seed " << seed << ")\n";
    }
    return kExitOk;
}

int cmd_validate(const std::string& dataset, std::ostream& out, std::ostream& err) {
    if (!fs::exists(fs::path(dataset) / std::string(kManifestFile))) {
        err << "error: no " << kManifestFile << " in " << dataset << '\n';
        return kExitFailure;
    }
    const ValidationReport report = validate_dataset(dataset);
    for (const auto& issue : report.issues) {
        err << "FAIL " << issue.split;
        if (!issue.id.empty()) err << ' ' << issue.id;
        err << ": " << issue.reason << '\n';
    }
    if (report.dropped_issues > 0) err << "... and " << report.dropped_issues << " more\n";
    if (!report.ok()) {
        out << "invalid: " << report.issues.size() + report.dropped_issues << " problems in " << report.records
            << " records\n";
        return kExitFailure;
    }
    out << "ok: " << report.records << " records in " << report.splits << " splits pass\n";
    return kExitOk;
}

int cmd_evaluate(const std::string& dataset, const std::string& predictions, const std::string& format,
                 std::ostream& out) {
    const DatasetManifest manifest = read_manifest(dataset);
    const PredictionSet preds = read_predictions(predictions, manifest.algorithm);
    const EvaluationReport report = evaluate(dataset, preds);
    out << (format == "json" ? format_json(report) : format_table(report));
    return kExitOk;
}

int cmd_stats(const std::string& dataset, const std::string& format, std::ostream& out) {
    const DatasetManifest manifest = read_manifest(dataset);
    const auto memory = memory_report(manifest);
    const auto stats = split_statistics(dataset);
    if (format == "json") {
        out << format_stats_json(memory, stats);
    } else {
        out << format_memory_table(memory) << '\n' << format_stats_table(stats);
    }
    return kExitOk;
}

int cmd_truth(const std::string& dataset, const std::string& file, std::ostream& out) {
    const DatasetManifest manifest = read_manifest(dataset);
    const PredictionSet truth = truth_predictions(dataset);
    write_predictions(truth, manifest.algorithm, file);
    out << "wrote " << truth.outputs.size() << " predictions to " << file << '\n';
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sparse algorithmic-reasoning dataset generator and evaluator", "salsa"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Generate an oracle-checked dataset");
    generate->add_option("--algorithm", gen.algorithm, "Algorithm, or 'all' for one directory per algorithm")
        ->required()
        ->check(CLI::IsMember({"bfs", "dfs", "dijkstra", "mst", "mis", "ecc", "all"}));
    generate->add_option("--out", gen.out, "Output directory")->required();
    generate->add_option("--seed", gen.seed, "Master seed (default: $SALSA_SEED, else 0)");
    generate->add_option("--splits", gen.splits, "'default' or a JSON split file")->capture_default_str();
    generate->add_option("--test-count", gen.test_count, "Graphs per default test set")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    generate->add_option("--jobs", gen.jobs, "Worker threads")->check(CLI::Range(1u, 1024u))->capture_default_str();

    std::string dataset, predictions, format = "table", truth_out;
    auto* validate = app.add_subcommand("validate", "Re-run every oracle over a dataset");
    validate->add_option("--dataset", dataset, "Dataset directory")->required();

    auto* evaluate_cmd = app.add_subcommand("evaluate", "Score predictions against a dataset");
    evaluate_cmd->add_option("--dataset", dataset, "Dataset directory")->required();
    evaluate_cmd->add_option("--predictions", predictions, "Prediction JSONL file")->required();
    evaluate_cmd->add_option("--format", format)->check(CLI::IsMember({"table", "json"}))->capture_default_str();

    auto* stats = app.add_subcommand("stats", "Memory accounting and graph statistics per split");
    stats->add_option("--dataset", dataset, "Dataset directory")->required();
    stats->add_option("--format", format)->check(CLI::IsMember({"table", "json"}))->capture_default_str();

    auto* truth = app.add_subcommand("truth", "Write the ground-truth outputs as a prediction file");
    truth->add_option("--dataset", dataset, "Dataset directory")->required();
    truth->add_option("--out", truth_out, "Prediction JSONL file")->required();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << e.what() << '\n';
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*generate) return cmd_generate(gen, out);
        if (*validate) return cmd_validate(dataset, out, err);
        if (*evaluate_cmd) return cmd_evaluate(dataset, predictions, format, out);
        if (*stats) return cmd_stats(dataset, format, out);
        if (*truth) return cmd_truth(dataset, truth_out, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace salsa::cli
