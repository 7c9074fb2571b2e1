//===--- diff.cpp ---------------------------------------------------------===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#include "unleak/diff.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace unleak {
namespace {

struct Lines {
  std::vector<std::string_view> lines;
  bool ends_with_newline = true;
};

Lines split_lines(std::string_view text) {
  Lines out;
  std::size_t begin = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n') {
      out.lines.push_back(text.substr(begin, i - begin));
      begin = i + 1;
    }
  }
  if (begin < text.size()) {
    out.lines.push_back(text.substr(begin));
    out.ends_with_newline = false;
  }
  return out;
}

// Myers O(ND) shortest edit script over lines. Returns per-line keep flags.
struct EditScript {
  std::vector<bool> keep_a;  // true -> line of `a` is unchanged
  std::vector<bool> keep_b;
};

EditScript myers(const std::vector<std::string_view> &a,
                 const std::vector<std::string_view> &b) {
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b.size());
  const int max = n + m;
  EditScript script;
  script.keep_a.assign(a.size(), false);
  script.keep_b.assign(b.size(), false);
  if (max == 0) return script;

  std::vector<std::vector<int>> trace;
  std::vector<int> v(2 * max + 1, 0);
  int final_d = -1;
  for (int d = 0; d <= max && final_d < 0; ++d) {
    for (int k = -d; k <= d; k += 2) {
      int idx = k + max;
      int x;
      if (k == -d || (k != d && v[idx - 1] < v[idx + 1]))
        x = v[idx + 1];
      else
        x = v[idx - 1] + 1;
      int y = x - k;
      while (x < n && y < m && a[x] == b[y]) {
        ++x;
        ++y;
      }
      v[idx] = x;
      if (x >= n && y >= m) {
        final_d = d;
        break;
      }
    }
    trace.push_back(v);
  }

  // Backtrack, marking matched lines.
  int x = n, y = m;
  for (int d = final_d; d > 0; --d) {
    const std::vector<int> &prev = trace[d - 1];
    int k = x - y;
    int idx = k + max;
    int prev_k;
    if (k == -d || (k != d && prev[idx - 1] < prev[idx + 1]))
      prev_k = k + 1;
    else
      prev_k = k - 1;
    int prev_x = prev[prev_k + max];
    int prev_y = prev_x - prev_k;
    while (x > prev_x && y > prev_y) {
      script.keep_a[x - 1] = true;
      script.keep_b[y - 1] = true;
      --x;
      --y;
    }
    x = prev_x;
    y = prev_y;
  }
  while (x > 0 && y > 0) {
    script.keep_a[x - 1] = true;
    script.keep_b[y - 1] = true;
    --x;
    --y;
  }
  return script;
}

struct Row {
  char tag;  // ' ', '-', '+'
  std::string_view text;
  bool missing_newline = false;
};

void append_range(std::string &out, const char *prefix, int start, int count) {
  out += prefix;
  out += std::to_string(count == 0 ? start : start + 1);
  if (count != 1) {
    out += ',';
    out += std::to_string(count);
  }
}

}  // namespace

std::string unified_diff(std::string_view before, std::string_view after,
                         std::string_view path) {
  if (before == after) return "";
  constexpr int kContext = 3;

  Lines a = split_lines(before);
  Lines b = split_lines(after);
  EditScript script = myers(a.lines, b.lines);

  // Merge into a single row stream: deletions first within a change block.
  std::vector<Row> rows;
  std::size_t i = 0, j = 0;
  while (i < a.lines.size() || j < b.lines.size()) {
    while (i < a.lines.size() && !script.keep_a[i]) {
      rows.push_back({'-', a.lines[i],
                      !a.ends_with_newline && i + 1 == a.lines.size()});
      ++i;
    }
    while (j < b.lines.size() && !script.keep_b[j]) {
      rows.push_back({'+', b.lines[j],
                      !b.ends_with_newline && j + 1 == b.lines.size()});
      ++j;
    }
    if (i < a.lines.size() && j < b.lines.size() && script.keep_a[i] &&
        script.keep_b[j]) {
      rows.push_back({' ', a.lines[i],
                      !a.ends_with_newline && i + 1 == a.lines.size()});
      ++i;
      ++j;
    }
  }

  // Group rows into hunks: changes padded with kContext lines, merged when
  // their context would touch.
  std::vector<std::pair<std::size_t, std::size_t>> hunks;  // row ranges
  std::size_t r = 0;
  while (r < rows.size()) {
    if (rows[r].tag == ' ') {
      ++r;
      continue;
    }
    std::size_t begin = r >= kContext ? r - kContext : 0;
    std::size_t end = r;
    std::size_t gap = 0;
    for (std::size_t k = r; k < rows.size(); ++k) {
      if (rows[k].tag == ' ') {
        ++gap;
        if (gap > 2 * kContext) break;
      } else {
        gap = 0;
        end = k;
      }
    }
    std::size_t close = std::min(rows.size(), end + 1 + kContext);
    hunks.emplace_back(begin, close);
    r = end + 1;
  }

  std::string out;
  out += "--- a/";
  out += path;
  out += "\n+++ b/";
  out += path;
  out += "\n";

  // Line numbers: walk rows once, tracking the source positions.
  std::vector<int> row_a_line(rows.size()), row_b_line(rows.size());
  {
    int la = 0, lb = 0;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      row_a_line[k] = la;
      row_b_line[k] = lb;
      if (rows[k].tag != '+') ++la;
      if (rows[k].tag != '-') ++lb;
    }
  }

  for (auto &[begin, end] : hunks) {
    int a_start = row_a_line[begin];
    int b_start = row_b_line[begin];
    int a_count = 0, b_count = 0;
    for (std::size_t k = begin; k < end; ++k) {
      if (rows[k].tag != '+') ++a_count;
      if (rows[k].tag != '-') ++b_count;
    }
    out += "@@ ";
    append_range(out, "-", a_start, a_count);
    append_range(out, " +", b_start, b_count);
    out += " @@\n";
    for (std::size_t k = begin; k < end; ++k) {
      out += rows[k].tag;
      out += rows[k].text;
      out += "\n";
      if (rows[k].missing_newline)
        out += "\\ No newline at end of file\n";
    }
  }
  return out;
}

}  // namespace unleak
