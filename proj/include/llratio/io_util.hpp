#pragma once

#include <string>
#include <string_view>

namespace llr {

// Shortest representation with 17 significant digits: round-trips every
// double exactly. Uses snprintf with the C locale, so the decimal separator
// is always '.'.
std::string fmt17(double x);

// Writes content to path via a temporary file in the same directory followed
// by a rename, so readers never observe a half-written file. An empty path
// means stdout (no temporary involved).
void write_output(const std::string& path, std::string_view content);

} // namespace llr
