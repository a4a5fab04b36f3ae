#include "cineforge/json_canon.hpp"

#include "cineforge/errors.hpp"

#include <cmath>
#include <cstdio>

namespace cineforge {

namespace {

void escape_string(const std::string& s, std::string& out) {
    out.push_back('"');
    for (unsigned char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\b': out += "\\b"; break;
        case '\f': out += "\\f"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (c < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out.push_back(static_cast<char>(c));
            }
        }
    }
    out.push_back('"');
}

void write_value(const Json& v, std::string& out, int indent, int depth) {
    const bool pretty = indent >= 0;
    const auto pad = [&](int d) {
        if (pretty) {
            out.push_back('\n');
            out.append(static_cast<std::size_t>(d) * static_cast<std::size_t>(indent), ' ');
        }
    };

    switch (v.type()) {
    case Json::value_t::null:
        out += "null";
        break;
    case Json::value_t::boolean:
        out += v.get<bool>() ? "true" : "false";
        break;
    case Json::value_t::number_integer:
        out += std::to_string(v.get<std::int64_t>());
        break;
    case Json::value_t::number_unsigned:
        out += std::to_string(v.get<std::uint64_t>());
        break;
    case Json::value_t::number_float:
        out += format_real(v.get<double>());
        break;
    case Json::value_t::string:
        escape_string(v.get_ref<const std::string&>(), out);
        break;
    case Json::value_t::array: {
        if (v.empty()) {
            out += "[]";
            break;
        }
        out.push_back('[');
        bool first = true;
        for (const auto& item : v) {
            if (!first) out.push_back(',');
            first = false;
            pad(depth + 1);
            write_value(item, out, indent, depth + 1);
        }
        pad(depth);
        out.push_back(']');
        break;
    }
    case Json::value_t::object: {
        if (v.empty()) {
            out += "{}";
            break;
        }
        out.push_back('{');
        bool first = true;
        // nlohmann objects are std::map-backed: iteration is already in
        // lexicographic key order.
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (!first) out.push_back(',');
            first = false;
            pad(depth + 1);
            escape_string(it.key(), out);
            out.push_back(':');
            if (pretty) out.push_back(' ');
            write_value(it.value(), out, indent, depth + 1);
        }
        pad(depth);
        out.push_back('}');
        break;
    }
    default:
        throw IoError("canonical_dump: unsupported json value type");
    }
}

} // namespace

std::string format_real(double v) {
    if (!std::isfinite(v)) {
        throw IoError("format_real: non-finite value");
    }
    if (v == 0.0) {
        return "0";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s = buf;
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') {
        s.pop_back();
    }
    if (s == "-0") {
        s = "0";
    }
    return s;
}

std::string canonical_dump(const Json& value, int indent) {
    std::string out;
    write_value(value, out, indent, 0);
    if (indent >= 0) {
        out.push_back('\n');
    }
    return out;
}

} // namespace cineforge
