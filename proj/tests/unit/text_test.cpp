//===--- text_test.cpp - line maps and layout probes -----------*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#include "unleak/text.hpp"

#include <string>

#include "doctest.h"

using namespace unleak;

TEST_CASE("LineIndex maps offsets to 1-based lines and columns") {
  std::string text = "ab\ncd\n\nef";
  LineIndex idx(text);
  CHECK_EQ(idx.line_count(), 4);
  CHECK_EQ(idx.line_of(0), 1);
  CHECK_EQ(idx.column_of(0), 1);
  CHECK_EQ(idx.line_of(1), 1);
  CHECK_EQ(idx.column_of(1), 2);
  CHECK_EQ(idx.line_of(3), 2);   // 'c'
  CHECK_EQ(idx.column_of(3), 1);
  CHECK_EQ(idx.line_of(6), 3);   // the empty line's newline
  CHECK_EQ(idx.line_of(7), 4);   // 'e'
  CHECK_EQ(idx.line_start(2), 3);
  CHECK_EQ(idx.line_start(4), 7);
}

TEST_CASE("LineIndex on empty text") {
  LineIndex idx("");
  CHECK_EQ(idx.line_count(), 1);
  CHECK_EQ(idx.line_of(0), 1);
  CHECK_EQ(idx.column_of(0), 1);
}

TEST_CASE("profile_text detects the dominant line ending") {
  CHECK_EQ(profile_text("a\nb\nc\n").line_ending, "\n");
  CHECK_EQ(profile_text("a\r\nb\r\nc\r\n").line_ending, "\r\n");
  CHECK_EQ(profile_text("a\r\nb\nc\r\nd\r\n").line_ending, "\r\n");
  // Tie falls back to "\n".
  CHECK_EQ(profile_text("a\r\nb\n").line_ending, "\n");
  CHECK_EQ(profile_text("no newline").line_ending, "\n");
}

TEST_CASE("profile_text detects the dominant indent unit") {
  CHECK_EQ(profile_text("a\n  b\n  c\n    d\n").indent_unit, "  ");
  CHECK_EQ(profile_text("a\n    b\n    c\n").indent_unit, "    ");
  CHECK_EQ(profile_text("a\n\tb\n\tc\n").indent_unit, "\t");
  CHECK_EQ(profile_text("flat\n").indent_unit, "  ");
}

TEST_CASE("line_indent_at returns the leading whitespace of the line") {
  std::string text = "a {\n    b;\n\tc;\n}";
  CHECK_EQ(line_indent_at(text, 0), "");
  CHECK_EQ(line_indent_at(text, 8), "    ");   // inside "b;"
  CHECK_EQ(line_indent_at(text, 4), "    ");   // at the indent itself
  CHECK_EQ(line_indent_at(text, 12), "\t");    // inside "c;"
}

TEST_CASE("slice reads a half-open span") {
  Span s;
  s.start = 2;
  s.end = 5;
  CHECK_EQ(slice("abcdefg", s), "cde");
  s.end = 2;
  CHECK_EQ(slice("abcdefg", s), "");
}

TEST_CASE("identifier character classes") {
  CHECK(is_identifier_start('a'));
  CHECK(is_identifier_start('_'));
  CHECK(is_identifier_start('$'));
  CHECK_FALSE(is_identifier_start('1'));
  CHECK(is_identifier_part('1'));
  CHECK_FALSE(is_identifier_part('-'));
  CHECK_FALSE(is_identifier_part(' '));
}
