#pragma once

#include <filesystem>
#include <string>

namespace subplanck::cli {

/// %.17g: round-trips every double and is identical across runs.
std::string format_real(double v);

/// Writes content to a sibling temporary file and renames it over `path`,
/// so readers never observe a partial file. Creates parent directories.
void write_atomic(const std::filesystem::path& path, const std::string& content);

} // namespace subplanck::cli
