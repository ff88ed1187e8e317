#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace advice_rl {

/// Shortest round-trip decimal representation via std::to_chars. Locale-free,
/// '.' decimal separator, stable across reruns.
std::string format_double(double value);

/// Fixed-precision formatting for human-facing tables.
std::string format_fixed(double value, int precision);

/// Parses a double, naming `context` in the error message on failure.
double parse_double(std::string_view text, const std::string& context);
long parse_long(std::string_view text, const std::string& context);

std::vector<std::string> split_csv_line(std::string_view line);

}  // namespace advice_rl
