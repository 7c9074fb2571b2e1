//===--- text.hpp - spans, line maps, and layout probes --------*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace unleak {

/// Half-open byte range into one source file, with the 1-based line/column
/// of its start.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;
  std::uint32_t line = 1;
  std::uint32_t column = 1;

  std::size_t size() const { return end - start; }
  bool empty() const { return start == end; }
  bool contains(std::size_t offset) const {
    return start <= offset && offset < end;
  }
  bool encloses(const Span &other) const {
    return start <= other.start && other.end <= end;
  }
  friend bool operator==(const Span &a, const Span &b) {
    return a.start == b.start && a.end == b.end;
  }
};

/// Byte-offset to line/column translation for one file.
class LineIndex {
 public:
  explicit LineIndex(std::string_view text);

  std::uint32_t line_of(std::size_t offset) const;    // 1-based
  std::uint32_t column_of(std::size_t offset) const;  // 1-based, in bytes
  /// Byte offset of the first character of the given 1-based line.
  std::size_t line_start(std::uint32_t line) const;
  std::uint32_t line_count() const {
    return static_cast<std::uint32_t>(starts_.size());
  }

 private:
  std::vector<std::size_t> starts_;
};

/// Layout facts inferred from a file, used when rendering inserted code.
struct TextProfile {
  std::string line_ending = "\n";  // dominant; tie -> "\n"
  std::string indent_unit = "  ";  // dominant; tie -> two spaces
};

TextProfile profile_text(std::string_view text);

/// Leading whitespace of the line containing `offset`.
std::string line_indent_at(std::string_view text, std::size_t offset);

std::string_view slice(std::string_view text, const Span &span);

bool is_identifier_start(char c);
bool is_identifier_part(char c);

}  // namespace unleak
