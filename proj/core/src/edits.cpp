//===--- edits.cpp --------------------------------------------------------===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#include "unleak/edits.hpp"

#include <algorithm>

namespace unleak {

OverlapError::OverlapError(const Edit &a, const Edit &b)
    : std::runtime_error("overlapping edits at [" + std::to_string(a.span.start) +
                         "," + std::to_string(a.span.end) + ") and [" +
                         std::to_string(b.span.start) + "," +
                         std::to_string(b.span.end) + ")") {}

std::string apply_edits(std::string_view text, const EditSet &edits) {
  std::vector<Edit> sorted = edits.edits();
  // Ascending by (start, end, seq); half-open spans sharing a boundary do
  // not overlap, and co-located insertions keep their seq order.
  std::sort(sorted.begin(), sorted.end(), [](const Edit &a, const Edit &b) {
    if (a.span.start != b.span.start) return a.span.start < b.span.start;
    if (a.span.end != b.span.end) return a.span.end < b.span.end;
    return a.seq < b.seq;
  });
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    const Edit &a = sorted[i];
    const Edit &b = sorted[i + 1];
    if (a.span.start < b.span.end && b.span.start < a.span.end)
      throw OverlapError(a, b);
  }
  for (const Edit &e : sorted) {
    if (e.span.end > text.size() || e.span.start > e.span.end)
      throw OverlapError(e, e);
  }

  std::string out;
  out.reserve(text.size() + 64);
  std::size_t cursor = 0;
  for (const Edit &e : sorted) {
    out.append(text.substr(cursor, e.span.start - cursor));
    out.append(e.replacement);
    cursor = e.span.end;
  }
  out.append(text.substr(cursor));
  return out;
}

}  // namespace unleak
