//===--- text.cpp ---------------------------------------------------------===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#include "unleak/text.hpp"

#include <algorithm>
#include <map>

namespace unleak {

LineIndex::LineIndex(std::string_view text) {
  starts_.push_back(0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n') starts_.push_back(i + 1);
  }
}

std::uint32_t LineIndex::line_of(std::size_t offset) const {
  auto it = std::upper_bound(starts_.begin(), starts_.end(), offset);
  return static_cast<std::uint32_t>(it - starts_.begin());
}

std::uint32_t LineIndex::column_of(std::size_t offset) const {
  std::uint32_t line = line_of(offset);
  return static_cast<std::uint32_t>(offset - starts_[line - 1] + 1);
}

std::size_t LineIndex::line_start(std::uint32_t line) const {
  if (line == 0 || line > starts_.size()) return 0;
  return starts_[line - 1];
}

TextProfile profile_text(std::string_view text) {
  TextProfile profile;

  std::size_t crlf = 0, lf = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n') {
      if (i > 0 && text[i - 1] == '\r')
        ++crlf;
      else
        ++lf;
    }
  }
  profile.line_ending = crlf > lf ? "\r\n" : "\n";

  // Indent unit: tabs win if most indented lines use them; otherwise the
  // most frequent positive indentation step between consecutive lines.
  std::size_t tab_lines = 0, space_lines = 0;
  std::map<std::size_t, std::size_t> step_votes;
  std::size_t prev_width = 0;
  std::size_t line_begin = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i != text.size() && text[i] != '\n') continue;
    std::string_view line = text.substr(line_begin, i - line_begin);
    line_begin = i + 1;
    std::size_t w = 0;
    bool tabs = false;
    while (w < line.size() && (line[w] == ' ' || line[w] == '\t')) {
      if (line[w] == '\t') tabs = true;
      ++w;
    }
    if (w == line.size() || line[w] == '\r') continue;  // blank line
    if (w > 0) (tabs ? tab_lines : space_lines) += 1;
    if (!tabs && w > prev_width) step_votes[w - prev_width] += 1;
    prev_width = w;
  }
  if (tab_lines > space_lines) {
    profile.indent_unit = "\t";
  } else {
    std::size_t best_step = 2, best_votes = 0;
    for (auto &[step, votes] : step_votes) {
      if (step >= 1 && step <= 8 && votes > best_votes) {
        best_votes = votes;
        best_step = step;
      }
    }
    profile.indent_unit = std::string(best_step, ' ');
  }
  return profile;
}

std::string line_indent_at(std::string_view text, std::size_t offset) {
  std::size_t begin = offset > text.size() ? text.size() : offset;
  while (begin > 0 && text[begin - 1] != '\n') --begin;
  std::size_t end = begin;
  while (end < text.size() && (text[end] == ' ' || text[end] == '\t')) ++end;
  return std::string(text.substr(begin, end - begin));
}

std::string_view slice(std::string_view text, const Span &span) {
  return text.substr(span.start, span.end - span.start);
}

bool is_identifier_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         c == '$' || static_cast<unsigned char>(c) >= 0x80;
}

bool is_identifier_part(char c) {
  return is_identifier_start(c) || (c >= '0' && c <= '9');
}

}  // namespace unleak
