#pragma once

#include <nlohmann/json.hpp>

#include <string>

namespace cineforge {

using Json = nlohmann::json;

// Renders a real with at most 6 fractional digits, trailing zeros trimmed
// ("72", "108.2", "0.333333"). Throws IoError on non-finite input.
std::string format_real(double v);

// Canonical serialization: lexicographically sorted keys, reals via
// format_real, integers exact. indent >= 0 pretty-prints; indent < 0 emits
// a single compact line (NDJSON records). Output is byte-deterministic,
// which the golden-file tests rely on.
std::string canonical_dump(const Json& value, int indent = 2);

} // namespace cineforge
