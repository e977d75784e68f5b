#pragma once

#include <memory>
#include <vector>

#include "salsa/graph.hpp"

namespace fixtures {

using salsa::Edge;
using salsa::Graph;

inline Graph path(std::size_t n) {
    std::vector<Edge> edges;
    for (salsa::NodeId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph(n, edges);
}

inline Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

// {0,1}:0.2, {1,2}:0.3, {0,2}:0.6 (weights follow the canonical edge order)
inline Graph weighted_triangle() { return Graph(3, {{0, 1}, {0, 2}, {1, 2}}, std::vector<double>{0.2, 0.6, 0.3}); }

// Center 0 with leaves 1..leaves.
inline Graph star(std::size_t leaves) {
    std::vector<Edge> edges;
    for (salsa::NodeId v = 1; v <= leaves; ++v) edges.push_back({0, v});
    return Graph(leaves + 1, edges);
}

inline std::shared_ptr<const Graph> share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

}  // namespace fixtures

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

namespace fixtures {

// Removed on destruction.
class TempDir {
public:
    TempDir() {
        static std::atomic<int> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                ("salsa-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

inline std::string slurp(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void spit(const std::filesystem::path& file, const std::string& text) {
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    out << text;
}

}  // namespace fixtures
