//===--- lexer.cpp - token scanner for ES-family sources -------*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#include "lexer.hpp"

#include <array>
#include <cctype>

#include "unleak/text.hpp"

namespace unleak {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_hexish(char c) {
  return is_digit(c) || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         c == '_';
}

// Longest-match punctuator table, grouped by length.
constexpr std::array<std::string_view, 1> kPunct4 = {">>>="};
constexpr std::array<std::string_view, 10> kPunct3 = {
    "===", "!==", "**=", "<<=", ">>=", ">>>", "&&=", "||=", "??" "=", "...",
};
constexpr std::array<std::string_view, 22> kPunct2 = {
    "=>", "==", "!=", "<=", ">=", "&&", "||", "??", "?.", "++", "--",
    "**", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<", ">>",
};
constexpr std::string_view kPunct1 = "{}()[];,<>+-*/%&|^!~?:=.@#";

}  // namespace

Token Lexer::make(TokKind kind, std::size_t start, std::size_t end,
                  bool newline) const {
  Token tok;
  tok.kind = kind;
  tok.start = start;
  tok.end = end;
  tok.newline_before = newline;
  tok.text = std::string_view(src_).substr(start, end - start);
  return tok;
}

std::size_t Lexer::skip_trivia(std::size_t pos, bool &newline) const {
  const std::size_t n = src_.size();
  while (pos < n) {
    char c = src_[pos];
    if (c == '\n') {
      newline = true;
      ++pos;
    } else if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
      ++pos;
    } else if (c == '/' && pos + 1 < n && src_[pos + 1] == '/') {
      pos += 2;
      while (pos < n && src_[pos] != '\n') ++pos;
    } else if (c == '/' && pos + 1 < n && src_[pos + 1] == '*') {
      std::size_t open = pos;
      pos += 2;
      for (;;) {
        if (pos + 1 >= n) throw ScanError{open, "unterminated block comment"};
        if (src_[pos] == '*' && src_[pos + 1] == '/') break;
        if (src_[pos] == '\n') newline = true;
        ++pos;
      }
      pos += 2;
    } else {
      break;
    }
  }
  return pos;
}

Token Lexer::scan_string(std::size_t start, bool newline) const {
  const std::size_t n = src_.size();
  const char quote = src_[start];
  std::size_t pos = start + 1;
  while (pos < n) {
    char c = src_[pos];
    if (c == quote) return make(TokKind::String, start, pos + 1, newline);
    if (c == '\\') {
      pos += 2;
      continue;
    }
    if (c == '\n' || c == '\r') break;
    ++pos;
  }
  throw ScanError{start, "unterminated string literal"};
}

Token Lexer::scan_template(std::size_t start, bool newline) const {
  // `start` is at '`' (head) or '}' (continuation).
  const std::size_t n = src_.size();
  const bool head = src_[start] == '`';
  std::size_t pos = start + 1;
  while (pos < n) {
    char c = src_[pos];
    if (c == '`') {
      return make(head ? TokKind::TemplateFull : TokKind::TemplateTail, start,
                  pos + 1, newline);
    }
    if (c == '\\') {
      pos += 2;
      continue;
    }
    if (c == '$' && pos + 1 < n && src_[pos + 1] == '{') {
      return make(head ? TokKind::TemplateHead : TokKind::TemplateMiddle,
                  start, pos + 2, newline);
    }
    ++pos;
  }
  throw ScanError{start, "unterminated template literal"};
}

Token Lexer::scan_number(std::size_t start, bool newline) const {
  const std::size_t n = src_.size();
  std::size_t pos = start;
  if (src_[pos] == '0' && pos + 1 < n &&
      (src_[pos + 1] == 'x' || src_[pos + 1] == 'X' || src_[pos + 1] == 'o' ||
       src_[pos + 1] == 'O' || src_[pos + 1] == 'b' || src_[pos + 1] == 'B')) {
    pos += 2;
    while (pos < n && is_hexish(src_[pos])) ++pos;
    return make(TokKind::Number, start, pos, newline);
  }
  while (pos < n) {
    char c = src_[pos];
    if (is_digit(c) || c == '_') {
      ++pos;
    } else if (c == '.' && pos + 1 < n && is_digit(src_[pos + 1])) {
      pos += 2;
    } else if (c == '.' && pos == start) {
      ++pos;  // leading '.5' form enters here at the dot
    } else if ((c == 'e' || c == 'E') && pos + 1 < n &&
               (is_digit(src_[pos + 1]) || src_[pos + 1] == '+' ||
                src_[pos + 1] == '-')) {
      pos += 2;
    } else if (c == 'n') {
      ++pos;  // bigint suffix
      break;
    } else {
      break;
    }
  }
  return make(TokKind::Number, start, pos, newline);
}

Token Lexer::scan_regex(std::size_t start, bool newline) const {
  const std::size_t n = src_.size();
  std::size_t pos = start + 1;
  bool in_class = false;
  while (pos < n) {
    char c = src_[pos];
    if (c == '\\') {
      pos += 2;
      continue;
    }
    if (c == '\n' || c == '\r') break;
    if (c == '[') in_class = true;
    else if (c == ']') in_class = false;
    else if (c == '/' && !in_class) {
      ++pos;
      while (pos < n && is_identifier_part(src_[pos])) ++pos;  // flags
      return make(TokKind::Regex, start, pos, newline);
    }
    ++pos;
  }
  throw ScanError{start, "unterminated regular expression literal"};
}

Token Lexer::scan(std::size_t pos, bool regex_ok) const {
  bool newline = false;
  pos = skip_trivia(pos, newline);
  const std::size_t n = src_.size();
  if (pos >= n) return make(TokKind::End, n, n, newline);

  char c = src_[pos];
  if (is_identifier_start(c)) {
    std::size_t end = pos + 1;
    while (end < n && is_identifier_part(src_[end])) ++end;
    return make(TokKind::Identifier, pos, end, newline);
  }
  if (c == '#' && pos + 1 < n && is_identifier_start(src_[pos + 1])) {
    std::size_t end = pos + 1;
    while (end < n && is_identifier_part(src_[end])) ++end;
    return make(TokKind::PrivateName, pos, end, newline);
  }
  if (is_digit(c)) return scan_number(pos, newline);
  if (c == '.' && pos + 1 < n && is_digit(src_[pos + 1]))
    return scan_number(pos, newline);
  if (c == '"' || c == '\'') return scan_string(pos, newline);
  if (c == '`') return scan_template(pos, newline);
  if (c == '/' && regex_ok) return scan_regex(pos, newline);

  auto rest = std::string_view(src_).substr(pos);
  for (auto p : kPunct4)
    if (rest.substr(0, p.size()) == p)
      return make(TokKind::Punct, pos, pos + p.size(), newline);
  for (auto p : kPunct3)
    if (rest.substr(0, p.size()) == p)
      return make(TokKind::Punct, pos, pos + p.size(), newline);
  for (auto p : kPunct2) {
    if (rest.substr(0, p.size()) != p) continue;
    // '?.' followed by a digit is the ternary '?' before a number.
    if (p == "?." && pos + 2 < n && is_digit(src_[pos + 2])) break;
    return make(TokKind::Punct, pos, pos + p.size(), newline);
  }
  if (kPunct1.find(c) != std::string_view::npos)
    return make(TokKind::Punct, pos, pos + 1, newline);

  throw ScanError{pos, "unexpected character"};
}

Token Lexer::scan_template_continue(std::size_t rbrace_pos) const {
  return scan_template(rbrace_pos, false);
}

}  // namespace unleak
