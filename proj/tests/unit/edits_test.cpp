//===--- edits_test.cpp - span edit application ----------------*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#include "unleak/edits.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"

using namespace unleak;

namespace {

// Independent reference: sort ascending by (start, end, seq) and apply
// back to front, so earlier offsets stay valid.
std::string oracle_apply(std::string text, std::vector<Edit> edits) {
  std::sort(edits.begin(), edits.end(), [](const Edit &a, const Edit &b) {
    if (a.span.start != b.span.start) return a.span.start < b.span.start;
    if (a.span.end != b.span.end) return a.span.end < b.span.end;
    return a.seq < b.seq;
  });
  for (auto it = edits.rbegin(); it != edits.rend(); ++it)
    text.replace(it->span.start, it->span.end - it->span.start,
                 it->replacement);
  return text;
}

std::string random_text(std::mt19937 &rng) {
  std::uniform_int_distribution<int> len(0, 200);
  std::uniform_int_distribution<int> pick(0, 11);
  static const char alphabet[] = "ab c\nd{}();=";
  std::string out;
  int n = len(rng);
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(alphabet[pick(rng)]);
  return out;
}

EditSet random_edits(std::mt19937 &rng, std::size_t text_size) {
  // Walk left to right leaving gaps, so replacement spans never intersect;
  // sprinkle zero-width inserts at span boundaries afterwards.
  EditSet edits;
  std::uniform_int_distribution<int> gap(0, 12);
  std::uniform_int_distribution<int> width(0, 8);
  std::uniform_int_distribution<int> text_len(0, 6);
  std::uniform_int_distribution<int> coin(0, 1);
  auto payload = [&] {
    static const char alphabet[] = "XY\nZ";
    std::string s;
    int n = text_len(rng);
    for (int i = 0; i < n; ++i)
      s.push_back(alphabet[static_cast<std::size_t>(coin(rng)) * 2 +
                           static_cast<std::size_t>(coin(rng))]);
    return s;
  };
  std::size_t at = 0;
  std::vector<std::size_t> boundaries;
  while (at <= text_size) {
    at += static_cast<std::size_t>(gap(rng));
    if (at > text_size) break;
    std::size_t end = std::min(text_size, at + static_cast<std::size_t>(width(rng)));
    if (coin(rng)) {
      Span s;
      s.start = at;
      s.end = end;
      edits.replace(s, payload());
      boundaries.push_back(at);
      boundaries.push_back(end);
    }
    at = end + 1;
  }
  for (std::size_t b : boundaries)
    if (coin(rng) == 0) edits.insert(b, payload());
  return edits;
}

Span span_of(std::size_t start, std::size_t end) {
  Span s;
  s.start = start;
  s.end = end;
  return s;
}

}  // namespace

TEST_CASE("apply_edits matches a back-to-front oracle on random inputs") {
  std::mt19937 rng(20260817);
  for (int round = 0; round < 300; ++round) {
    std::string text = random_text(rng);
    EditSet edits = random_edits(rng, text.size());
    CHECK_EQ(apply_edits(text, edits), oracle_apply(text, edits.edits()));
  }
}

TEST_CASE("an empty edit set is the identity") {
  EditSet edits;
  CHECK_EQ(apply_edits("const a = 1;", edits), "const a = 1;");
  CHECK_EQ(apply_edits("", edits), "");
}

TEST_CASE("co-located insertions keep insertion order") {
  EditSet edits;
  edits.insert(3, "1");
  edits.insert(3, "2");
  edits.insert(3, "3");
  CHECK_EQ(apply_edits("abcdef", edits), "abc123def");
}

TEST_CASE("insertion at a replacement boundary is not an overlap") {
  EditSet edits;
  edits.replace(span_of(2, 4), "XX");
  edits.insert(2, "<");
  edits.insert(4, ">");
  CHECK_EQ(apply_edits("abcdef", edits), "ab<XX>ef");
}

TEST_CASE("adjacent replacements compose") {
  EditSet edits;
  edits.replace(span_of(0, 2), "AA");
  edits.replace(span_of(2, 4), "BB");
  CHECK_EQ(apply_edits("abcdef", edits), "AABBef");
}

TEST_CASE("deleting and inserting at the end of text") {
  EditSet edits;
  edits.replace(span_of(4, 6), "");
  edits.insert(6, "!");
  CHECK_EQ(apply_edits("abcdef", edits), "abcd!");
}

TEST_CASE("intersecting replacements throw OverlapError") {
  EditSet edits;
  edits.replace(span_of(1, 4), "A");
  edits.replace(span_of(3, 6), "B");
  CHECK_THROWS_AS(apply_edits("abcdefgh", edits), OverlapError);
}

TEST_CASE("identical non-empty spans throw OverlapError") {
  EditSet edits;
  edits.replace(span_of(1, 4), "A");
  edits.replace(span_of(1, 4), "B");
  CHECK_THROWS_AS(apply_edits("abcdefgh", edits), OverlapError);
}

TEST_CASE("insertion strictly inside a replacement throws OverlapError") {
  EditSet edits;
  edits.replace(span_of(1, 4), "A");
  edits.insert(2, "x");
  CHECK_THROWS_AS(apply_edits("abcdefgh", edits), OverlapError);
}

TEST_CASE("append renumbers sequence ids past existing ones") {
  EditSet first;
  first.insert(0, "a");
  EditSet second;
  second.insert(0, "b");
  second.insert(0, "c");
  first.append(second);
  CHECK_EQ(first.size(), 3);
  CHECK_EQ(apply_edits("-", first), "abc-");
}
