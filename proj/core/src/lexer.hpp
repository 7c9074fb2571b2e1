//===--- lexer.hpp - token scanner for ES-family sources -------*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace unleak {

enum class TokKind : std::uint8_t {
  End,
  Identifier,
  PrivateName,
  Number,
  String,
  TemplateFull,
  TemplateHead,
  TemplateMiddle,
  TemplateTail,
  Regex,
  Punct,
};

struct Token {
  TokKind kind = TokKind::End;
  std::size_t start = 0;
  std::size_t end = 0;
  bool newline_before = false;
  std::string_view text;

  bool is(std::string_view s) const {
    return kind == TokKind::Punct && text == s;
  }
  bool ident(std::string_view s) const {
    return kind == TokKind::Identifier && text == s;
  }
};

/// Thrown on malformed lexical input. Carries a byte offset; the parser
/// converts it to a line/column ParseError.
struct ScanError {
  std::size_t pos;
  std::string message;
};

/// Stateless scanner over one source buffer. The parser drives position and
/// context: a leading '/' is a regex only when the caller says one may start
/// here, and template literals are resumed explicitly after interpolations.
class Lexer {
 public:
  explicit Lexer(const std::string &src) : src_(src) {}

  Token scan(std::size_t pos, bool regex_ok) const;

  /// Resumes a template literal at the '}' that closes an interpolation.
  /// Returns TemplateMiddle or TemplateTail.
  Token scan_template_continue(std::size_t rbrace_pos) const;

 private:
  std::size_t skip_trivia(std::size_t pos, bool &newline) const;
  Token scan_string(std::size_t start, bool newline) const;
  Token scan_template(std::size_t start, bool newline) const;
  Token scan_number(std::size_t start, bool newline) const;
  Token scan_regex(std::size_t start, bool newline) const;
  Token make(TokKind kind, std::size_t start, std::size_t end,
             bool newline) const;

  const std::string &src_;
};

}  // namespace unleak
