#pragma once

#include <string>

namespace spcp {

// Shortest text form carrying 17 significant digits; parses back bit-exact
// for any finite double.
std::string format_double(double x);

// Write the full contents, then rename into place so a failed command never
// leaves a partial file behind.
void atomic_write_file(const std::string& path, const std::string& contents);

std::string read_file(const std::string& path);

}  // namespace spcp
