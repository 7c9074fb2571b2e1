//===--- edits.hpp - span-anchored text replacements -----------*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "unleak/text.hpp"

namespace unleak {

/// One replacement of a byte span. A zero-width span is a pure insertion at
/// `span.start`; co-located insertions apply in ascending `seq` order.
struct Edit {
  Span span;
  std::string replacement;
  std::uint32_t seq = 0;
};

class EditSet {
 public:
  void insert(std::size_t offset, std::string text) {
    Span s;
    s.start = s.end = offset;
    edits_.push_back({s, std::move(text), next_seq_++});
  }
  void replace(Span span, std::string text) {
    edits_.push_back({span, std::move(text), next_seq_++});
  }
  void append(const EditSet &other) {
    for (const Edit &e : other.edits_) {
      edits_.push_back({e.span, e.replacement, next_seq_++});
    }
  }

  bool empty() const { return edits_.empty(); }
  std::size_t size() const { return edits_.size(); }
  const std::vector<Edit> &edits() const { return edits_; }

 private:
  std::vector<Edit> edits_;
  std::uint32_t next_seq_ = 0;
};

/// Two edits cover intersecting byte ranges; the offending file is left
/// unmodified by callers.
class OverlapError : public std::runtime_error {
 public:
  OverlapError(const Edit &a, const Edit &b);
};

/// Applies all edits to `text`. Bytes outside the edited spans are copied
/// verbatim. Throws OverlapError when two spans intersect.
std::string apply_edits(std::string_view text, const EditSet &edits);

}  // namespace unleak
