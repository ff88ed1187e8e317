#include "advice_rl/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <system_error>

namespace advice_rl {

std::string format_double(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc{}) {
    throw std::runtime_error("format_double: conversion failed");
  }
  return std::string(buffer, ptr);
}

std::string format_fixed(double value, int precision) {
  if (std::isinf(value)) {
    return value > 0 ? "inf" : "-inf";
  }
  char buffer[64];
  const int n = std::snprintf(buffer, sizeof(buffer), "%.*f", precision, value);
  return std::string(buffer, buffer + n);
}

double parse_double(std::string_view text, const std::string& context) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::runtime_error(context + ": expected a number, got '" + std::string(text) + "'");
  }
  return value;
}

long parse_long(std::string_view text, const std::string& context) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::runtime_error(context + ": expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      break;
    }
    fields.emplace_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

}  // namespace advice_rl
