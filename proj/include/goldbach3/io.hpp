#pragma once

// Deterministic output helpers: every emitted file starts with a comment
// header echoing the tool version and the fully resolved configuration, and
// all doubles are printed with a fixed shortest-roundtrip format so identical
// configs produce byte-identical files.

#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "goldbach3/common.hpp"

namespace goldbach3 {

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct CommentHeader {
  std::vector<std::pair<std::string, std::string>> entries;

  CommentHeader() { entries.emplace_back("goldbach3", kVersion); }

  void add(const std::string& key, const std::string& value) {
    entries.emplace_back(key, value);
  }
  void add(const std::string& key, std::uint64_t value) {
    entries.emplace_back(key, std::to_string(value));
  }
  void add(const std::string& key, std::int64_t value) {
    entries.emplace_back(key, std::to_string(value));
  }
  void add(const std::string& key, double value) {
    entries.emplace_back(key, format_double(value));
  }

  void write(std::ostream& os) const {
    for (const auto& [k, v] : entries) os << "# " << k << '=' << v << '\n';
  }
};

}  // namespace goldbach3
