#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace salsa {

struct ValidationIssue {
    std::string split;
    // Record id, or empty when the problem is with the split file itself.
    std::string id;
    std::string reason;
};

struct ValidationReport {
    std::size_t splits = 0;
    std::size_t records = 0;
    std::vector<ValidationIssue> issues;
    // Issues beyond the cap are counted but not stored.
    std::size_t dropped_issues = 0;

    bool ok() const { return issues.empty(); }
};

// Re-reads every record of a dataset and checks it against the manifest,
// the structural audit, and the independent oracle of its algorithm.
// Throws FormatError when the manifest itself cannot be read.
ValidationReport validate_dataset(const std::filesystem::path& dir, std::size_t max_issues = 100);

}  // namespace salsa
