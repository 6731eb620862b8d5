#pragma once

#include <filesystem>
#include <string>

namespace permlab {

// Writes contents to a temporary file next to path and renames it into place.
// Throws std::system_error on failure.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

// printf("%.17g") of a double.
std::string fmt_double(double x);

}  // namespace permlab
