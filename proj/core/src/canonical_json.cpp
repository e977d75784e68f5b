#include "canonical_json.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace salsa::canonical {

void append_double(std::string& out, double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("cannot serialize non-finite value");
    char buf[32];
    const int len = std::snprintf(buf, sizeof buf, "%.17g", x);
    out.append(buf, static_cast<std::size_t>(len));
}

void append_integer(std::string& out, std::int64_t x) { out += std::to_string(x); }

void append_string(std::string& out, std::string_view s) {
    out += '"';
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(ch));
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    out += '"';
}

void append_array(std::string& out, std::span<const double> values, bool integral) {
    out += '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        if (integral) {
            append_integer(out, static_cast<std::int64_t>(values[i]));
        } else {
            append_double(out, values[i]);
        }
    }
    out += ']';
}

namespace {

void dump_into(std::string& out, const nlohmann::json& v) {
    using value_t = nlohmann::json::value_t;
    switch (v.type()) {
        case value_t::null: out += "null"; break;
        case value_t::boolean: out += v.get<bool>() ? "true" : "false"; break;
        case value_t::number_integer: append_integer(out, v.get<std::int64_t>()); break;
        case value_t::number_unsigned: out += std::to_string(v.get<std::uint64_t>()); break;
        case value_t::number_float: append_double(out, v.get<double>()); break;
        case value_t::string: append_string(out, v.get_ref<const std::string&>()); break;
        case value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& item : v) {
                if (!first) out += ',';
                first = false;
                dump_into(out, item);
            }
            out += ']';
            break;
        }
        case value_t::object: {
            // nlohmann::json objects are std::map backed, so iteration is key-sorted.
            out += '{';
            bool first = true;
            for (const auto& [key, item] : v.items()) {
                if (!first) out += ',';
                first = false;
                append_string(out, key);
                out += ':';
                dump_into(out, item);
            }
            out += '}';
            break;
        }
        default: throw std::invalid_argument("unsupported JSON value in canonical output");
    }
}

}  // namespace

std::string dump(const nlohmann::json& value) {
    std::string out;
    dump_into(out, value);
    return out;
}

}  // namespace salsa::canonical
