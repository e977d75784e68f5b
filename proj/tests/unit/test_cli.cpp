#include <cstdlib>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "salsa/dataset_io.hpp"
#include "salsa/validation.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result salsa_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "salsa");
    std::ostringstream out, err;
    const int code = salsa::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// Two small splits so the tests stay fast.
fs::path write_split_file(const fixtures::TempDir& dir) {
    const fs::path file = dir / "splits.json";
    fixtures::spit(file, R"({"splits":[{"name":"train","family":"er","sizes":[4,7],"count":5},)"
                         R"({"name":"test_delaunay_16","family":"delaunay","sizes":[16],"count":3}]})");
    return file;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("usage errors exit with 2") {
    CHECK(salsa_cli({}).code == 2);
    CHECK(salsa_cli({"frobnicate"}).code == 2);
    CHECK(salsa_cli({"generate", "--out", "x"}).code == 2);
    CHECK(salsa_cli({"generate", "--algorithm", "kruskal", "--out", "x"}).code == 2);
    CHECK(salsa_cli({"generate", "--algorithm", "bfs", "--out", "x", "--seed", "-4"}).code == 2);
    CHECK(salsa_cli({"generate", "--algorithm", "bfs", "--out", "x", "--splits", "/nonexistent.json"}).code == 2);
    CHECK(salsa_cli({"evaluate", "--dataset", "x", "--predictions", "y", "--format", "xml"}).code == 2);
    CHECK(salsa_cli({"--help"}).code == 0);
}

TEST_CASE("generate, validate, evaluate and stats") {
    fixtures::TempDir dir;
    const auto splits = write_split_file(dir);
    const fs::path data = dir / "data";
    auto gen = salsa_cli({"generate", "--algorithm", "mis", "--seed", "42", "--splits", splits.string(), "--out",
                          data.string(), "--jobs", "2"});
    REQUIRE(gen.code == 0);
    CHECK(gen.out.find("wrote 8 records") != std::string::npos);
    CHECK(fs::exists(data / "manifest.json"));

    auto val = salsa_cli({"validate", "--dataset", data.string()});
    CHECK(val.code == 0);
    CHECK(val.out.find("ok: 8 records") != std::string::npos);

    const fs::path preds = dir / "truth.jsonl";
    REQUIRE(salsa_cli({"truth", "--dataset", data.string(), "--out", preds.string()}).code == 0);
    auto table = salsa_cli({"evaluate", "--dataset", data.string(), "--predictions", preds.string()});
    CHECK(table.code == 0);
    CHECK(table.out.find("node_f1") != std::string::npos);
    CHECK(table.out.find("100.00") != std::string::npos);
    auto json = salsa_cli({"evaluate", "--dataset", data.string(), "--predictions", preds.string(), "--format", "json"});
    CHECK(json.code == 0);
    CHECK(json.out.find("\"results\"") != std::string::npos);

    auto stats = salsa_cli({"stats", "--dataset", data.string()});
    CHECK(stats.code == 0);
    CHECK(stats.out.find("dense_edges") != std::string::npos);
    CHECK(stats.out.find("max_diameter") != std::string::npos);

    fixtures::spit(dir / "partial.jsonl", "{\"id\":\"train:0\",\"outputs\":{\"in_mis\":[1,0,1,0]}}\n");
    auto partial = salsa_cli({"evaluate", "--dataset", data.string(), "--predictions", (dir / "partial.jsonl").string()});
    CHECK(partial.code == 1);
    CHECK_FALSE(partial.err.empty());
}

TEST_CASE("SALSA_SEED is the fallback seed") {
    fixtures::TempDir dir;
    const auto splits = write_split_file(dir);
    const auto a = dir / "a", b = dir / "b", c = dir / "c";
    REQUIRE(salsa_cli({"generate", "--algorithm", "bfs", "--seed", "9", "--splits", splits.string(), "--out", a.string()}).code == 0);
    ::setenv("SALSA_SEED", "9", 1);
    REQUIRE(salsa_cli({"generate", "--algorithm", "bfs", "--splits", splits.string(), "--out", b.string()}).code == 0);
    ::setenv("SALSA_SEED", "10", 1);
    REQUIRE(salsa_cli({"generate", "--algorithm", "bfs", "--splits", splits.string(), "--out", c.string()}).code == 0);
    ::setenv("SALSA_SEED", "ten", 1);
    CHECK(salsa_cli({"generate", "--algorithm", "bfs", "--splits", splits.string(), "--out", c.string()}).code == 2);
    ::unsetenv("SALSA_SEED");
    CHECK(fixtures::slurp(a / "train.jsonl") == fixtures::slurp(b / "train.jsonl"));
    CHECK(fixtures::slurp(a / "train.jsonl") != fixtures::slurp(c / "train.jsonl"));
}

TEST_CASE("generate all writes one directory per algorithm") {
    fixtures::TempDir dir;
    const auto splits = write_split_file(dir);
    REQUIRE(salsa_cli({"generate", "--algorithm", "all", "--seed", "1", "--splits", splits.string(), "--out",
                       (dir / "all").string()})
                .code == 0);
    for (const char* name : {"bfs", "dfs", "dijkstra", "mst", "mis", "ecc"}) {
        CHECK(fs::exists(dir / "all" / name / "manifest.json"));
        CHECK(salsa_cli({"validate", "--dataset", (dir / "all" / name).string()}).code == 0);
    }
}

TEST_CASE("validate names the corrupted record") {
    fixtures::TempDir dir;
    const auto splits = write_split_file(dir);
    const fs::path data = dir / "data";
    REQUIRE(salsa_cli({"generate", "--algorithm", "bfs", "--seed", "3", "--splits", splits.string(), "--out", data.string()}).code == 0);

    // Point one node of test_delaunay_16:1 at a non-neighbor in the output and last hint step.
    const fs::path file = data / "test_delaunay_16.jsonl";
    std::string text = fixtures::slurp(file);
    const auto start = text.find('\n') + 1;
    const auto end = text.find('\n', start);
    std::string line = text.substr(start, end - start);
    const auto rec = salsa::decode_record(line, salsa::Algorithm::bfs);
    const auto& g = *rec.trajectory.graph;
    const auto pi = rec.trajectory.output("pi").values;
    salsa::NodeId victim = 0, target = 0;
    bool found = false;
    for (salsa::NodeId v = 0; v < g.num_nodes() && !found; ++v) {
        if (pi[v] == v) continue;
        for (salsa::NodeId u = 0; u < g.num_nodes() && !found; ++u) {
            if (u != v && !g.has_edge(u, v)) {
                victim = v;
                target = u;
                found = true;
            }
        }
    }
    REQUIRE(found);
    auto corrupted = rec;
    corrupted.trajectory.outputs[0].values[victim] = target;
    for (auto& f : corrupted.trajectory.hints.back()) {
        if (f.name == "pi_h") f.values[victim] = target;
    }
    text.replace(start, end - start, salsa::encode_record(corrupted));
    fixtures::spit(file, text);

    auto val = salsa_cli({"validate", "--dataset", data.string()});
    CHECK(val.code == 1);
    CHECK(val.err.find("test_delaunay_16:1") != std::string::npos);
    CHECK(val.err.find("pointer") != std::string::npos);

    const auto report = salsa::validate_dataset(data);
    REQUIRE(report.issues.size() == 1);
    CHECK(report.issues[0].id == "test_delaunay_16:1");
}

TEST_CASE("validate rejects an empty directory") {
    fixtures::TempDir dir;
    auto val = salsa_cli({"validate", "--dataset", dir.path().string()});
    CHECK(val.code == 1);
    CHECK(val.err.find("manifest.json") != std::string::npos);
}

TEST_CASE("validate reports truncated files") {
    fixtures::TempDir dir;
    const auto splits = write_split_file(dir);
    const fs::path data = dir / "data";
    REQUIRE(salsa_cli({"generate", "--algorithm", "ecc", "--seed", "3", "--splits", splits.string(), "--out", data.string()}).code == 0);
    const std::string text = fixtures::slurp(data / "train.jsonl");
    fixtures::spit(data / "train.jsonl", text.substr(0, text.size() - 10));
    auto val = salsa_cli({"validate", "--dataset", data.string()});
    CHECK(val.code == 1);
    CHECK(val.err.find(":5:") != std::string::npos);
}

}
