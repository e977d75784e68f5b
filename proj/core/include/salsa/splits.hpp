#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "salsa/generators.hpp"

namespace salsa {

inline constexpr std::size_t kTrainCount = 10000;
inline constexpr std::size_t kValCount = 1000;
inline constexpr std::size_t kDefaultTestCount = 100;
inline constexpr std::size_t kTrainSizes[] = {4, 7, 11, 13, 16};
inline constexpr std::size_t kTestSizes[] = {16, 80, 160, 800, 1600};
inline constexpr Family kTestFamilies[] = {Family::er, Family::ws, Family::delaunay};

// One dataset split: count graphs of one family, each with n drawn
// uniformly from sizes.
struct SplitSpec {
    std::string name;
    Family family = Family::er;
    std::vector<std::size_t> sizes;
    std::size_t count = 0;

    bool is_test() const { return name.starts_with("test"); }
    // "16" for a single size, "mixed" otherwise.
    std::string size_label() const;

    friend bool operator==(const SplitSpec&, const SplitSpec&) = default;
};

// train (10000 ER graphs), val (1000 ER graphs), both with n from
// {4, 7, 11, 13, 16}, then 15 test sets {er, ws, delaunay} x {16, 80, 160, 800, 1600}.
std::vector<SplitSpec> default_splits(std::size_t test_count = kDefaultTestCount);

// "test_<family>_<n>", e.g. test_delaunay_800.
std::string test_split_name(Family family, std::size_t n);

// Reads {"splits": [{"name", "family", "sizes", "count"}, ...]}.
// Throws std::invalid_argument on malformed content.
std::vector<SplitSpec> load_split_file(const std::filesystem::path& path);

// Throws std::invalid_argument on duplicate or unsafe names, empty size
// lists, or sizes too small for the family.
void validate_splits(const std::vector<SplitSpec>& splits);

}  // namespace salsa
