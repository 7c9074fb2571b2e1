//===--- glob.cpp ---------------------------------------------------------===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#include "unleak/glob.hpp"

#include <functional>

namespace unleak {
namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t begin = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      out.emplace_back(text.substr(begin, i - begin));
      begin = i + 1;
    }
  }
  return out;
}

// Segment match with *, ? and {a,b} alternation.
bool match_segment(std::string_view pattern, std::string_view name,
                   std::size_t p, std::size_t n) {
  while (p < pattern.size()) {
    char c = pattern[p];
    if (c == '*') {
      for (std::size_t skip = 0; skip <= name.size() - n; ++skip) {
        if (match_segment(pattern, name, p + 1, n + skip)) return true;
      }
      return false;
    }
    if (c == '{') {
      std::size_t close = pattern.find('}', p);
      if (close == std::string_view::npos) return false;
      std::string_view body = pattern.substr(p + 1, close - p - 1);
      for (const std::string &alt : split(body, ',')) {
        std::string rebuilt = alt + std::string(pattern.substr(close + 1));
        if (match_segment(rebuilt, name, 0, n)) return true;
      }
      return false;
    }
    if (n >= name.size()) return false;
    if (c == '?') {
      ++p;
      ++n;
      continue;
    }
    if (c != name[n]) return false;
    ++p;
    ++n;
  }
  return n == name.size();
}

bool match_segments(const std::vector<std::string> &pattern,
                    const std::vector<std::string> &path, std::size_t p,
                    std::size_t s) {
  while (p < pattern.size()) {
    if (pattern[p] == "**") {
      // Zero or more path segments.
      for (std::size_t skip = 0; skip <= path.size() - s; ++skip) {
        if (match_segments(pattern, path, p + 1, s + skip)) return true;
      }
      return false;
    }
    if (s >= path.size()) return false;
    if (!match_segment(pattern[p], path[s], 0, 0)) return false;
    ++p;
    ++s;
  }
  return s == path.size();
}

}  // namespace

Glob::Glob(std::string_view pattern) : pattern_(pattern) {
  segments_ = split(pattern_, '/');
}

bool Glob::match(std::string_view path) const {
  std::vector<std::string> parts = split(path, '/');
  return match_segments(segments_, parts, 0, 0);
}

bool Glob::valid(std::string_view pattern) {
  int depth = 0;
  for (char c : pattern) {
    if (c == '{') ++depth;
    if (c == '}') {
      --depth;
      if (depth < 0) return false;
    }
  }
  return depth == 0 && !pattern.empty();
}

bool matches_any(const std::vector<Glob> &globs, std::string_view path) {
  for (const Glob &g : globs) {
    if (g.match(path)) return true;
  }
  return false;
}

}  // namespace unleak
