#include "salsa/validation.hpp"

#include "salsa/dataset_io.hpp"
#include "salsa/oracles.hpp"

namespace salsa {

namespace fs = std::filesystem;

ValidationReport validate_dataset(const fs::path& dir, std::size_t max_issues) {
    const DatasetManifest manifest = read_manifest(dir);
    ValidationReport report;
    auto add = [&](const std::string& split, const std::string& id, std::string reason) {
        if (report.issues.size() < max_issues) {
            report.issues.push_back({split, id, std::move(reason)});
        } else {
            ++report.dropped_issues;
        }
    };

    for (const auto& split : manifest.splits) {
        ++report.splits;
        const std::string& name = split.spec.name;
        const fs::path file = dir / split.file_name();
        if (!fs::exists(file)) {
            add(name, "", "missing file " + split.file_name());
            continue;
        }
        std::size_t index = 0;
        try {
            RecordReader reader(file, manifest.algorithm);
            while (auto rec = reader.next()) {
                ++report.records;
                const std::size_t i = index++;
                if (i >= split.graphs.size()) {
                    add(name, rec->id, "record beyond the manifest count");
                    continue;
                }
                const GraphRecordInfo& info = split.graphs[i];
                const Graph& g = *rec->trajectory.graph;
                if (rec->id != info.id) {
                    add(name, rec->id, "expected id " + info.id + " at this position");
                    continue;
                }
                if (g.num_nodes() != info.n || g.num_edges() != info.num_edges) {
                    add(name, rec->id, "graph size differs from the manifest");
                    continue;
                }
                if (rec->length != rec->trajectory.length()) {
                    add(name, rec->id, "stored length " + std::to_string(rec->length) + " but " +
                                           std::to_string(rec->trajectory.length()) + " hint steps");
                    continue;
                }
                const auto problems = audit_trajectory(rec->trajectory);
                if (!problems.empty()) {
                    add(name, rec->id, problems.front());
                    continue;
                }
                const auto verdict = oracles::verify_trajectory(rec->trajectory);
                if (!verdict) add(name, rec->id, verdict.reason);
            }
        } catch (const FormatError& e) {
            add(name, "", e.what());
            continue;
        }
        if (index != split.graphs.size()) {
            add(name, "", "holds " + std::to_string(index) + " records, manifest lists " +
                              std::to_string(split.graphs.size()));
        }
    }
    return report;
}

}  // namespace salsa
