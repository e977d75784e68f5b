#include "salsa/splits.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace salsa {

std::string SplitSpec::size_label() const {
    if (sizes.size() == 1) return std::to_string(sizes.front());
    return "mixed";
}

std::string test_split_name(Family family, std::size_t n) {
    return "test_" + std::string(to_string(family)) + "_" + std::to_string(n);
}

std::vector<SplitSpec> default_splits(std::size_t test_count) {
    const std::vector<std::size_t> train_sizes(std::begin(kTrainSizes), std::end(kTrainSizes));
    std::vector<SplitSpec> splits{
        {"train", Family::er, train_sizes, kTrainCount},
        {"val", Family::er, train_sizes, kValCount},
    };
    for (Family family : kTestFamilies) {
        for (std::size_t n : kTestSizes) {
            splits.push_back({test_split_name(family, n), family, {n}, test_count});
        }
    }
    return splits;
}

void validate_splits(const std::vector<SplitSpec>& splits) {
    std::set<std::string> names;
    for (const auto& s : splits) {
        const bool safe_name = !s.name.empty() && std::all_of(s.name.begin(), s.name.end(), [](char ch) {
            return (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '_' || ch == '-';
        });
        if (!safe_name) throw std::invalid_argument("split name '" + s.name + "' must match [a-z0-9_-]+");
        if (!names.insert(s.name).second) throw std::invalid_argument("duplicate split name '" + s.name + "'");
        if (s.sizes.empty()) throw std::invalid_argument("split '" + s.name + "' has no sizes");
        const std::size_t min_n = s.family == Family::er ? 2 : s.family == Family::ws ? 5 : 3;
        for (auto n : s.sizes) {
            if (n < min_n) {
                throw std::invalid_argument("split '" + s.name + "': n=" + std::to_string(n) + " below minimum " +
                                            std::to_string(min_n) + " for family " + std::string(to_string(s.family)));
            }
        }
    }
}

std::vector<SplitSpec> load_split_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open split file " + path.string());
    std::vector<SplitSpec> splits;
    try {
        const auto doc = nlohmann::json::parse(in);
        for (const auto& entry : doc.at("splits")) {
            SplitSpec s;
            s.name = entry.at("name").get<std::string>();
            s.family = parse_family(entry.at("family").get<std::string>());
            s.sizes = entry.at("sizes").get<std::vector<std::size_t>>();
            s.count = entry.at("count").get<std::size_t>();
            splits.push_back(std::move(s));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed split file " + path.string() + ": " + e.what());
    }
    validate_splits(splits);
    return splits;
}

}  // namespace salsa
