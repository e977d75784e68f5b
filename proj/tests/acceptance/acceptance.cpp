// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <unistd.h>

#include "CLI11.hpp"
#include "salsa/algorithms.hpp"
#include "salsa/dataset_io.hpp"
#include "salsa/evaluation.hpp"
#include "salsa/generation.hpp"
#include "salsa/generators.hpp"
#include "salsa/graph_stats.hpp"
#include "salsa/oracles.hpp"
#include "salsa/random.hpp"
#include "salsa/splits.hpp"
#include "salsa/validation.hpp"

using namespace salsa;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::size_t count_lines(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    std::size_t lines = 0;
    std::string line;
    while (std::getline(in, line)) ++lines;
    return lines;
}

// FNV-1a over relative paths and file contents, in sorted path order.
std::uint64_t tree_digest(const fs::path& root) {
    std::vector<fs::path> files;
    for (const auto& e : fs::recursive_directory_iterator(root)) {
        if (e.is_regular_file()) files.push_back(fs::relative(e.path(), root));
    }
    std::sort(files.begin(), files.end());
    std::uint64_t h = 1469598103934665603ULL;
    auto feed = [&](const char* data, std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) {
            h ^= static_cast<unsigned char>(data[i]);
            h *= 1099511628211ULL;
        }
    };
    std::vector<char> buf(1 << 20);
    for (const auto& rel : files) {
        const std::string name = rel.generic_string();
        feed(name.data(), name.size() + 1);
        std::ifstream in(root / rel, std::ios::binary);
        while (in) {
            in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
            feed(buf.data(), static_cast<std::size_t>(in.gcount()));
        }
    }
    return h;
}

// Reduced splits for algorithms whose trajectories have n steps of n-node
// hints: same 17 names and sizes, fewer graphs.
std::vector<SplitSpec> reduced_splits() {
    auto splits = default_splits(2);
    splits[0].count = 200;
    splits[1].count = 50;
    return splits;
}

bool heavy(Algorithm a) { return a == Algorithm::dfs || a == Algorithm::dijkstra || a == Algorithm::mst; }

struct Context {
    fs::path work;
    unsigned jobs = 2;
    std::size_t test_count = kDefaultTestCount;
    // filled by criterion 1
    double bfs_seconds = 0;
};

fs::path dataset_dir(const Context& ctx, Algorithm a, const std::string& tag) {
    return ctx.work / (std::string(to_string(a)) + "-" + tag);
}

DatasetManifest generate_to(const Context& ctx, Algorithm a, const std::string& tag, unsigned jobs) {
    GenerationOptions opt;
    opt.algorithm = a;
    opt.master_seed = kSeed;
    opt.splits = heavy(a) ? reduced_splits() : default_splits(ctx.test_count);
    opt.jobs = jobs;
    const fs::path dir = dataset_dir(ctx, a, tag);
    fs::remove_all(dir);
    return generate_dataset(opt, dir);
}

Outcome split_structure(Context& ctx) {
    const auto start = Clock::now();
    const DatasetManifest m = generate_to(ctx, Algorithm::bfs, "a", 1);
    ctx.bfs_seconds = seconds_since(start);
    const fs::path dir = dataset_dir(ctx, Algorithm::bfs, "a");

    std::vector<std::string> problems;
    const std::set<std::size_t> train_sizes(std::begin(kTrainSizes), std::end(kTrainSizes));
    std::set<std::pair<Family, std::size_t>> test_cells;
    std::size_t tests = 0;
    for (const auto& s : m.splits) {
        if (count_lines(dir / s.file_name()) != s.graphs.size()) problems.push_back(s.spec.name + ": line count");
        if (s.spec.name == "train" || s.spec.name == "val") {
            const std::size_t want = s.spec.name == "train" ? 10000 : 1000;
            if (s.graphs.size() != want) problems.push_back(s.spec.name + ": count");
            for (const auto& g : s.graphs) {
                if (!train_sizes.contains(g.n) || s.spec.family != Family::er) {
                    problems.push_back(g.id + ": size " + std::to_string(g.n));
                    break;
                }
            }
        } else if (s.spec.is_test()) {
            ++tests;
            if (s.graphs.size() != ctx.test_count) problems.push_back(s.spec.name + ": count");
            for (const auto& g : s.graphs) {
                if (g.n != s.spec.sizes.at(0)) problems.push_back(g.id + ": wrong size");
            }
            test_cells.insert({s.spec.family, s.spec.sizes.at(0)});
        } else {
            problems.push_back("unexpected split " + s.spec.name);
        }
    }
    for (Family f : kTestFamilies) {
        for (std::size_t n : kTestSizes) {
            if (!test_cells.contains({f, n})) problems.push_back("missing test set " + test_split_name(f, n));
        }
    }
    if (tests != 15) problems.push_back("test set count " + std::to_string(tests));
    if (ctx.bfs_seconds >= 600) problems.push_back("generation took too long");

    const ValidationReport v = validate_dataset(dir);
    if (!v.ok()) problems.push_back("validate: " + v.issues.front().id + " " + v.issues.front().reason);

    Outcome out;
    out.pass = problems.empty();
    out.detail = fmt("train=%zu val=%zu test sets=%zu x %zu graphs; bfs generated in %.1fs; %zu records re-validated",
                     m.split("train").graphs.size(), m.split("val").graphs.size(), tests, ctx.test_count,
                     ctx.bfs_seconds, v.records);
    if (!problems.empty()) out.detail += "; first problem: " + problems.front();
    return out;
}

Outcome er_parameterization(Context&) {
    double edges = 0, expected = 0;
    std::size_t connected = 0;
    const auto start = Clock::now();
    for (std::uint64_t i = 0; i < 200; ++i) {
        Rng rng = derive_rng({kSeed, 1'000'000 + i});
        const auto g = gen_er({Family::er, 160}, rng);
        const double c = *g.params.er_c;
        edges += static_cast<double>(g.graph.num_edges());
        expected += 160.0 * 159.0 / 2.0 * c * std::log(160.0) / 160.0;
        connected += is_connected(g.graph);
    }
    const double rel = std::abs(edges - expected) / expected;
    return {rel <= 0.10 && connected == 200,
            fmt("mean edges %.1f vs closed form %.1f (%.2f%% off, tol 10%%); connected %zu/200; %.2fs", edges / 200,
                expected / 200, 100 * rel, connected, seconds_since(start))};
}

Outcome delaunay_sparsity(Context&) {
    std::size_t violations = 0;
    std::string degrees;
    bool degree_ok = true;
    for (std::size_t n : kTestSizes) {
        double degree = 0;
        for (std::uint64_t i = 0; i < 100; ++i) {
            Rng rng = derive_rng({kSeed, 2'000'000 + n * 1000 + i});
            const Graph g = gen_delaunay({Family::delaunay, n}, rng).graph;
            if (g.num_edges() > 3 * n - 6 || !is_connected(g)) ++violations;
            degree += 2.0 * static_cast<double>(g.num_edges()) / static_cast<double>(n);
        }
        degree /= 100;
        degree_ok = degree_ok && degree < 6.0;
        degrees += fmt("%s%zu:%.3f", degrees.empty() ? "" : " ", n, degree);
    }
    return {violations == 0 && degree_ok,
            fmt("%zu graphs over the 3n-6 bound; mean degree by n %s", violations, degrees.c_str())};
}

struct TrajectoryAudit {
    std::size_t trajectories = 0;
    std::size_t oracle_failures = 0;
    std::size_t pointer_values = 0;
    std::size_t pointer_violations = 0;
    std::string first_failure;
};

void count_pointers(const Trajectory& t, TrajectoryAudit& audit) {
    const Graph& g = *t.graph;
    auto scan = [&](const FeatureSet& features) {
        for (const auto& f : features) {
            if (feature_spec(t.algorithm, f.name).kind != Kind::pointer) continue;
            for (std::size_t v = 0; v < f.values.size(); ++v) {
                ++audit.pointer_values;
                const double p = f.values[v];
                const bool ok = p >= 0 && p < static_cast<double>(g.num_nodes()) && p == std::floor(p) &&
                                (static_cast<std::size_t>(p) == v ||
                                 g.has_edge(static_cast<NodeId>(v), static_cast<NodeId>(p)));
                audit.pointer_violations += !ok;
            }
        }
    };
    scan(t.inputs);
    for (const auto& step : t.hints) scan(step);
    scan(t.outputs);
}

// Criteria 4 and 6 share one pass over every record of the default splits.
TrajectoryAudit audit_all(const Context& ctx) {
    TrajectoryAudit audit;
    for (Algorithm a : kAllAlgorithms) {
        for (const auto& split : default_splits(ctx.test_count)) {
            for (std::size_t i = 0; i < split.count; ++i) {
                GeneratedRecord rec;
                try {
                    rec = generate_record(a, kSeed, split, i);
                } catch (const OracleFailure& e) {
                    ++audit.trajectories;
                    ++audit.oracle_failures;
                    if (audit.first_failure.empty()) audit.first_failure = e.what();
                    continue;
                }
                ++audit.trajectories;
                const auto verdict = oracles::verify_trajectory(rec.record.trajectory);
                if (!verdict) {
                    ++audit.oracle_failures;
                    if (audit.first_failure.empty()) audit.first_failure = rec.record.id + ": " + verdict.reason;
                }
                count_pointers(rec.record.trajectory, audit);
            }
        }
    }
    return audit;
}

Outcome mis_phase_bound(Context&) {
    const double bound_max = 4 * std::log2(1600.0), bound_mean = 2 * std::log2(1600.0);
    std::size_t max_phases = 0, failures = 0;
    double sum = 0;
    const Family families[] = {Family::er, Family::ws, Family::delaunay};
    for (std::uint64_t i = 0; i < 200; ++i) {
        Rng rng = derive_rng({kSeed, 3'000'000 + i});
        auto g = std::make_shared<const Graph>(generate({families[i % 3], 1600}, rng).graph);
        const Trajectory t = run_mis(g, rng);
        failures += !oracles::verify_trajectory(t).ok;
        max_phases = std::max(max_phases, t.length());
        sum += static_cast<double>(t.length());
    }
    const double mean = sum / 200;
    return {failures == 0 && static_cast<double>(max_phases) <= bound_max && mean <= bound_mean,
            fmt("max phases %zu (bound %.1f), mean %.2f (bound %.1f), oracle failures %zu", max_phases, bound_max,
                mean, bound_mean, failures)};
}

Outcome metric_consistency(Context& ctx) {
    std::vector<std::string> problems;
    std::size_t scored_splits = 0;
    std::map<Algorithm, PredictionSet> truth;
    for (Algorithm a : kAllAlgorithms) {
        const fs::path dir = dataset_dir(ctx, a, "a");
        if (!fs::exists(dir / std::string(kManifestFile))) generate_to(ctx, a, "a", ctx.jobs);
        truth[a] = truth_predictions(dir);
        const auto report = evaluate(dir, truth[a]);
        for (const auto& s : report.splits) {
            ++scored_splits;
            for (const auto& [name, v] : s.metrics) {
                if (v != (name == "graph_mse" ? 0.0 : 100.0)) {
                    problems.push_back(std::string(to_string(a)) + "/" + s.split + " " + name);
                }
            }
        }
    }

    // 50 corrupted prediction files over the node-level algorithms.
    const Algorithm node_algorithms[] = {Algorithm::bfs, Algorithm::dfs, Algorithm::dijkstra, Algorithm::mst,
                                         Algorithm::mis};
    std::size_t dominance_checks = 0;
    for (int file = 0; file < 50; ++file) {
        const Algorithm a = node_algorithms[file % 5];
        const fs::path dir = dataset_dir(ctx, a, "a");
        PredictionSet preds = truth.at(a);
        Rng rng = derive_rng({kSeed, 4'000'000 + static_cast<std::uint64_t>(file)});
        const double rate = 0.002 + 0.3 * rng.uniform();
        for (auto& [id, values] : preds.outputs) {
            const auto n = values.size();
            for (auto& x : values) {
                if (!rng.bernoulli(rate)) continue;
                x = a == Algorithm::mis ? 1.0 - x : static_cast<double>(rng.below(n));
            }
        }
        const fs::path file_path = ctx.work / "corrupted.jsonl";
        write_predictions(preds, a, file_path);
        const auto report = evaluate(dir, read_predictions(file_path, a));
        for (const auto& s : report.splits) {
            ++dominance_checks;
            if (s.metric("node_accuracy") < s.metric("graph_accuracy")) {
                problems.push_back(fmt("file %d %s: node < graph accuracy", file, s.split.c_str()));
            }
        }
    }
    Outcome out;
    out.pass = problems.empty();
    out.detail = fmt("truth scored perfectly on %zu algorithm/split pairs; node>=graph accuracy on %zu splits of 50 "
                     "corrupted files",
                     scored_splits, dominance_checks);
    if (!problems.empty()) out.detail += "; first problem: " + problems.front();
    return out;
}

Outcome memory_accounting(Context& ctx) {
    const DatasetManifest m = read_manifest(dataset_dir(ctx, Algorithm::bfs, "a"));
    const auto rows = memory_report(m);
    const MemoryRow* er = nullptr;
    for (const auto& r : rows) {
        if (r.split == test_split_name(Family::er, 1600)) er = &r;
    }
    if (!er) return {false, "no test_er_1600 split"};
    const double c_mean = (kErCMin + kErCMax) / 2;
    const double expected_ratio = 1600.0 * 1599.0 / (1599.0 * c_mean * std::log(1600.0));
    const bool dense_ok = er->mean_dense_edges == 2558400.0;
    const bool ratio_ok = er->dense_to_sparse_ratio >= 100.0 &&
                          std::abs(er->dense_to_sparse_ratio - expected_ratio) <= 0.2 * expected_ratio;
    return {dense_ok && ratio_ok,
            fmt("test_er_1600: dense pairs %.0f, sparse directed edges %.1f, ratio %.1fx (expected %.1fx +-20%%)",
                er->mean_dense_edges, er->mean_sparse_edges, er->dense_to_sparse_ratio, expected_ratio)};
}

Outcome determinism(Context& ctx) {
    std::vector<std::string> lines;
    bool ok = true;
    for (Algorithm a : kAllAlgorithms) {
        const fs::path first = dataset_dir(ctx, a, "a");
        if (!fs::exists(first / std::string(kManifestFile))) generate_to(ctx, a, "a", ctx.jobs);
        // second run with a different job count
        const unsigned jobs = a == Algorithm::bfs ? ctx.jobs + 1 : 1;
        generate_to(ctx, a, "b", jobs);
        const fs::path second = dataset_dir(ctx, a, "b");
        const auto d1 = tree_digest(first), d2 = tree_digest(second);
        ok = ok && d1 == d2;
        lines.push_back(fmt("%s %016llx%s", std::string(to_string(a)).c_str(), static_cast<unsigned long long>(d1),
                            d1 == d2 ? "" : " MISMATCH"));
        fs::remove_all(second);
    }
    std::string detail = "digests equal across job counts:";
    for (const auto& l : lines) detail += " " + l;
    return {ok, detail};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    Context ctx;
    std::string work;
    bool keep = false;
    app.add_option("--workdir", work, "Scratch directory (default: a fresh temp dir)");
    app.add_option("--test-count", ctx.test_count, "Graphs per test set")->capture_default_str();
    app.add_option("--jobs", ctx.jobs, "Worker threads for generation")->capture_default_str();
    app.add_flag("--keep", keep, "Keep generated datasets");
    CLI11_PARSE(app, argc, argv);

    ctx.work = work.empty() ? fs::temp_directory_path() / ("salsa-acceptance-" + std::to_string(::getpid())) : fs::path(work);
    fs::create_directories(ctx.work);

    int failed = 0;
    auto report = [&](int id, const char* name, const std::function<Outcome()>& fn) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << "criterion " << id << " " << name << ": " << (o.pass ? "PASS" : "FAIL") << " -- " << o.detail
                  << fmt(" [%.1fs]", seconds_since(start)) << std::endl;
    };

    report(1, "split structure", [&] { return split_structure(ctx); });
    report(2, "ER parameterization", [&] { return er_parameterization(ctx); });
    report(3, "Delaunay sparsity", [&] { return delaunay_sparsity(ctx); });

    TrajectoryAudit audit;
    bool audited = false;
    auto run_audit = [&] {
        if (!audited) audit = audit_all(ctx);
        audited = true;
    };
    report(4, "oracle equivalence", [&] {
        run_audit();
        Outcome o{audit.oracle_failures == 0, fmt("%zu/%zu trajectories pass (6 algorithms, all 17 splits)",
                                                   audit.trajectories - audit.oracle_failures, audit.trajectories)};
        if (!audit.first_failure.empty()) o.detail += "; first failure: " + audit.first_failure;
        return o;
    });
    report(5, "MIS phase bound", [&] { return mis_phase_bound(ctx); });
    report(6, "pointer sparsity", [&] {
        run_audit();
        return Outcome{audit.pointer_violations == 0,
                       fmt("%zu violations among %zu pointer values in %zu trajectories", audit.pointer_violations,
                           audit.pointer_values, audit.trajectories)};
    });
    report(7, "metric self-consistency", [&] { return metric_consistency(ctx); });
    report(8, "sparse-vs-dense accounting", [&] { return memory_accounting(ctx); });
    report(9, "determinism", [&] { return determinism(ctx); });

    std::cout << (failed == 0 ? "all 9 criteria pass" : std::to_string(failed) + " criteria FAILED") << std::endl;
    if (!keep) fs::remove_all(ctx.work);
    return failed == 0 ? 0 : 1;
}
