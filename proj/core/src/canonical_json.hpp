#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "json.hpp"

// Canonical JSON text: sorted object keys, no whitespace, integers verbatim,
// floating point values with 17 significant digits.
namespace salsa::canonical {

void append_double(std::string& out, double x);
void append_integer(std::string& out, std::int64_t x);
void append_string(std::string& out, std::string_view s);

// Scalars print with 17 significant digits; integer-valued kinds print as
// integers.
void append_array(std::string& out, std::span<const double> values, bool integral);

std::string dump(const nlohmann::json& value);

}  // namespace salsa::canonical
