#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace cineforge {

// Whole-file read; throws IoError.
std::string read_file(const std::filesystem::path& path);

// Write-to-temp + rename in the target directory, so readers never observe
// a partially written file. Creates parent directories as needed.
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);

} // namespace cineforge
