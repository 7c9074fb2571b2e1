//===--- glob.hpp - path glob matching -------------------------*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace unleak {

/// Matcher for '/'-separated relative paths. Supports `*` and `?` within a
/// segment, `**` spanning zero or more segments, and `{a,b}` alternation.
class Glob {
 public:
  explicit Glob(std::string_view pattern);

  bool match(std::string_view path) const;
  const std::string &pattern() const { return pattern_; }

  static bool valid(std::string_view pattern);

 private:
  std::string pattern_;
  std::vector<std::string> segments_;
};

bool matches_any(const std::vector<Glob> &globs, std::string_view path);

}  // namespace unleak
