//===--- parse.cpp - tolerant ES/TS/JSX recursive descent parser -*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
//
// Strict about well-formedness (unterminated literals, unbalanced
// delimiters), tolerant about constructs the repair passes never touch:
// those become Opaque nodes whose children keep nested expressions
// reachable. Every node is a span over the original text, never a reprint.
//
//===----------------------------------------------------------------------===//
#include <cassert>
#include <initializer_list>
#include <string>
#include <vector>

#include "lexer.hpp"
#include "unleak/tree.hpp"

namespace unleak {
namespace {

bool is_assign_op(std::string_view s) {
  return s == "=" || s == "+=" || s == "-=" || s == "*=" || s == "/=" ||
         s == "%=" || s == "**=" || s == "<<=" || s == ">>=" || s == ">>>=" ||
         s == "&=" || s == "|=" || s == "^=" || s == "&&=" || s == "||=" ||
         s == "??" "=";
}

bool is_binary_op(std::string_view s) {
  return s == "||" || s == "&&" || s == "??" || s == "|" || s == "^" ||
         s == "&" || s == "==" || s == "!=" || s == "===" || s == "!==" ||
         s == "<" || s == ">" || s == "<=" || s == ">=" || s == "<<" ||
         s == ">>" || s == ">>>" || s == "+" || s == "-" || s == "*" ||
         s == "/" || s == "%" || s == "**";
}

std::string decode_string_body(std::string_view text) {
  // text includes the quotes
  std::string out;
  if (text.size() < 2) return out;
  for (std::size_t i = 1; i + 1 < text.size(); ++i) {
    char c = text[i];
    if (c != '\\') {
      out.push_back(c);
      continue;
    }
    if (i + 2 >= text.size() + 1) break;
    char e = text[++i];
    switch (e) {
      case 'n': out.push_back('\n'); break;
      case 't': out.push_back('\t'); break;
      case 'r': out.push_back('\r'); break;
      case 'b': out.push_back('\b'); break;
      case 'f': out.push_back('\f'); break;
      case 'v': out.push_back('\v'); break;
      case '0': out.push_back('\0'); break;
      default: out.push_back(e); break;  // \' \" \\ \` and unknown escapes
    }
  }
  return out;
}

class Parser {
 public:
  explicit Parser(SyntaxTree &t) : t_(t), src_(t.source()), lex_(t.source()) {
    cur_ = lex_.scan(0, false);
  }

  void run() {
    Node root;
    root.kind = NodeKind::Root;
    root.span = make_span(0, src_.size());
    NodeId root_id = t_.add_node(std::move(root));
    std::vector<NodeId> stmts;
    while (cur_.kind != TokKind::End) stmts.push_back(parse_statement());
    t_.mutable_node(root_id).children = std::move(stmts);
  }

 private:
  SyntaxTree &t_;
  const std::string &src_;
  Lexer lex_;
  Token cur_;
  std::size_t prev_end_ = 0;
  bool no_in_ = false;
  bool in_ternary_branch_ = false;

  struct Mark {
    Token tok;
    std::size_t prev_end;
  };
  Mark mark() const { return {cur_, prev_end_}; }
  void reset(const Mark &m) {
    cur_ = m.tok;
    prev_end_ = m.prev_end;
  }

  // --- token plumbing ---

  void advance() {
    prev_end_ = cur_.end;
    cur_ = lex_.scan(cur_.end, false);
  }
  void advance_from(std::size_t pos) {
    prev_end_ = pos;
    cur_ = lex_.scan(pos, false);
  }
  void rescan_regex() {
    if (cur_.is("/") || cur_.is("/=")) cur_ = lex_.scan(cur_.start, true);
  }
  bool at(std::string_view s) const { return cur_.is(s); }
  bool at_ident(std::string_view s) const { return cur_.ident(s); }
  Token peek_after(const Token &tok) const { return lex_.scan(tok.end, false); }

  [[noreturn]] void fail(std::size_t pos, const std::string &msg) {
    throw ParseError(t_.lines().line_of(pos), t_.lines().column_of(pos), msg);
  }
  [[noreturn]] void fail_here(const std::string &msg) { fail(cur_.start, msg); }

  void expect(std::string_view s) {
    if (!cur_.is(s)) fail_here("expected '" + std::string(s) + "'");
    advance();
  }
  void semi() {
    if (at(";")) {
      advance();
      return;
    }
    if (cur_.kind == TokKind::End || at("}") || cur_.newline_before) return;
    fail_here("expected ';'");
  }

  bool typed() const { return dialect_is_typed(t_.dialect()); }
  bool jsx_ok() const { return dialect_allows_jsx(t_.dialect()); }

  Span make_span(std::size_t a, std::size_t b) {
    Span s;
    s.start = a;
    s.end = b;
    s.line = t_.lines().line_of(a);
    s.column = t_.lines().column_of(a);
    return s;
  }

  NodeId add(Node n) { return t_.add_node(std::move(n)); }

  NodeId opaque_leaf(std::size_t start) {
    Node n;
    n.kind = NodeKind::Opaque;
    n.span = make_span(start, prev_end_);
    return add(std::move(n));
  }

  NodeId opaque_wrap(std::size_t start, std::size_t end,
                     std::vector<NodeId> kids) {
    Node n;
    n.kind = NodeKind::Opaque;
    n.span = make_span(start, end);
    n.children = std::move(kids);
    return add(std::move(n));
  }

  NodeId param_ident(const std::string &name, std::size_t at_pos) {
    Node n;
    n.kind = NodeKind::Identifier;
    n.name = name;
    n.span = make_span(at_pos, at_pos);
    return add(std::move(n));
  }

  std::size_t span_end(NodeId id) const { return t_.node(id).span.end; }
  std::size_t span_start(NodeId id) const { return t_.node(id).span.start; }

  // --- balanced skipping ---

  static bool regex_can_follow(const Token &prev) {
    switch (prev.kind) {
      case TokKind::Identifier:
        return prev.ident("return") || prev.ident("typeof") ||
               prev.ident("instanceof") || prev.ident("in") ||
               prev.ident("of") || prev.ident("new") || prev.ident("delete") ||
               prev.ident("void") || prev.ident("throw") ||
               prev.ident("case") || prev.ident("do") || prev.ident("else") ||
               prev.ident("yield") || prev.ident("await");
      case TokKind::Number:
      case TokKind::String:
      case TokKind::Regex:
      case TokKind::TemplateFull:
      case TokKind::TemplateTail:
      case TokKind::PrivateName:
        return false;
      case TokKind::Punct:
        return !(prev.is(")") || prev.is("]") || prev.is("}") ||
                 prev.is("++") || prev.is("--"));
      default:
        return true;
    }
  }

  /// Skips a token region balanced over ( ) [ ] { }, starting at an opener.
  /// Template interpolations are tracked so their '}' resumes the literal.
  /// Leaves cur_ on the token after the matching closer. Identifier
  /// spellings inside are appended to `idents` when given.
  void skip_balanced(std::vector<std::string> *idents = nullptr) {
    const std::size_t open_pos = cur_.start;
    int depth = 0;
    std::vector<int> tpl;
    Token prev = cur_;
    bool first = true;
    for (;;) {
      if (cur_.kind == TokKind::End) fail(open_pos, "unbalanced delimiter");
      if (!first && (cur_.is("/") || cur_.is("/=")) && regex_can_follow(prev)) {
        cur_ = lex_.scan(cur_.start, true);
      }
      if (idents && !first && cur_.kind == TokKind::Identifier)
        idents->push_back(std::string(cur_.text));
      if (cur_.kind == TokKind::TemplateHead) {
        tpl.push_back(0);
        prev = cur_;
        advance();
        first = false;
        continue;
      }
      if (cur_.kind == TokKind::Punct && cur_.text.size() == 1) {
        char c = cur_.text[0];
        if (c == '(' || c == '[' || c == '{') {
          if (c == '{' && !tpl.empty()) ++tpl.back();
          ++depth;
        } else if (c == ')' || c == ']' || c == '}') {
          if (c == '}' && !tpl.empty() && tpl.back() == 0) {
            cur_ = lex_.scan_template_continue(cur_.start);
            if (cur_.kind == TokKind::TemplateTail) tpl.pop_back();
            prev = cur_;
            advance();
            continue;
          }
          if (c == '}' && !tpl.empty()) --tpl.back();
          --depth;
          if (depth == 0) {
            advance();
            return;
          }
        }
      }
      prev = cur_;
      advance();
      first = false;
    }
  }

  /// cur_ at '<'. Tries to consume a plausible type-argument list; on
  /// success cur_ is just after the closing '>'. Restores and returns false
  /// when the region reads like a comparison instead.
  bool try_skip_type_args() {
    Mark m = mark();
    int depth = 0;
    int guard = 0;
    while (cur_.kind != TokKind::End && ++guard < 4096) {
      if (cur_.kind == TokKind::Punct) {
        std::string_view s = cur_.text;
        int close = s == ">" ? 1 : s == ">>" ? 2 : s == ">>>" ? 3 : 0;
        if (s == "<") {
          ++depth;
        } else if (close) {
          depth -= close;
          if (depth == 0) {
            advance();
            return true;
          }
          if (depth < 0) break;
        } else if (s == "(" || s == "[" || s == "{") {
          if (depth == 0) break;
          skip_balanced();
          continue;
        } else if (s == ";" || s == ")" || s == "]" || s == "}" ||
                   s == "&&" || s == "||" || s == "??" || s == "=>" ||
                   s == "=" || s == ">=" || s == "==" || s == "===") {
          break;
        }
      }
      advance();
    }
    reset(m);
    return false;
  }

  /// Consumes a type annotation. Returns with cur_ on the first token that
  /// is listed in `stops` at top level, or on a top-level , ) ] } boundary,
  /// or at an inferred statement break.
  void skip_type_annotation(std::initializer_list<std::string_view> stops) {
    int angle = 0;
    bool prev_completes = false;
    while (cur_.kind != TokKind::End) {
      if (angle == 0 && cur_.kind == TokKind::Punct) {
        bool at_stop = false;
        for (auto s : stops)
          if (cur_.text == s) at_stop = true;
        if (at_stop && cur_.text == "{" && !prev_completes) at_stop = false;
        if (at_stop) return;
      }
      if (angle == 0 && cur_.newline_before && prev_completes &&
          (cur_.kind == TokKind::Identifier || cur_.kind == TokKind::Number)) {
        return;
      }
      if (cur_.is("(") || cur_.is("[") || cur_.is("{")) {
        skip_balanced();
        prev_completes = true;
        continue;
      }
      if (cur_.is("<")) {
        ++angle;
        prev_completes = false;
        advance();
        continue;
      }
      int close = cur_.is(">") ? 1 : cur_.is(">>") ? 2 : cur_.is(">>>") ? 3 : 0;
      if (close) {
        if (angle == 0) return;
        angle = angle >= close ? angle - close : 0;
        prev_completes = true;
        advance();
        continue;
      }
      if (angle == 0 && (cur_.is(")") || cur_.is("]") || cur_.is("}") ||
                         cur_.is(","))) {
        return;
      }
      prev_completes = cur_.kind == TokKind::Identifier ||
                       cur_.kind == TokKind::Number ||
                       cur_.kind == TokKind::String;
      advance();
    }
  }

  /// cur_ at '('. True when the parenthesized region is arrow parameters.
  /// The region is tokenized speculatively; parenthesized JSX is not token
  /// clean (closing tags read as regex starts), so any scan failure just
  /// means "not arrow parameters".
  bool peek_arrow_after_parens() {
    Mark m = mark();
    bool arrow = false;
    try {
      skip_balanced();
      if (at("=>")) {
        arrow = true;
      } else if (typed() && at(":") && !in_ternary_branch_) {
        advance();
        skip_type_annotation({"=>", ";", "="});
        arrow = at("=>");
      }
    } catch (const ScanError &) {
      arrow = false;
    } catch (const ParseError &) {
      arrow = false;
    }
    reset(m);
    return arrow;
  }

  // --- statements ---

  bool is_decl_start() {
    if (at_ident("const")) {
      if (typed() && peek_after(cur_).ident("enum")) return false;
      return true;
    }
    if (at_ident("var")) return true;
    if (at_ident("let")) {
      Token nx = peek_after(cur_);
      return nx.kind == TokKind::Identifier || nx.is("[") || nx.is("{");
    }
    return false;
  }

  NodeId parse_statement() {
    rescan_regex();
    if (at("{")) return parse_block();
    if (at(";")) {
      std::size_t s = cur_.start;
      advance();
      return opaque_leaf(s);
    }
    if (at("@")) return parse_decorated();
    if (cur_.kind == TokKind::Identifier) {
      std::string_view w = cur_.text;
      if (w == "import") {
        Token nx = peek_after(cur_);
        if (!nx.is("(") && !nx.is(".")) return parse_import();
      } else if (w == "export") {
        return parse_export();
      } else if (w == "class") {
        return parse_class(cur_.start, {}, false);
      } else if (w == "function") {
        return parse_function(cur_.start, false);
      } else if (w == "async") {
        Token nx = peek_after(cur_);
        if (nx.ident("function") && !nx.newline_before) {
          std::size_t s = cur_.start;
          advance();
          return parse_function(s, false);
        }
      } else if (w == "return") {
        return parse_return();
      } else if (w == "if") {
        return parse_if();
      } else if (w == "for") {
        return parse_for();
      } else if (w == "while") {
        return parse_while();
      } else if (w == "do") {
        return parse_do();
      } else if (w == "switch") {
        return parse_switch();
      } else if (w == "try") {
        return parse_try();
      } else if (w == "throw") {
        std::size_t s = cur_.start;
        advance();
        rescan_regex();
        NodeId e = parse_sequence();
        semi();
        return opaque_wrap(s, prev_end_, {e});
      } else if (w == "break" || w == "continue" || w == "debugger") {
        std::size_t s = cur_.start;
        advance();
        if (cur_.kind == TokKind::Identifier && !cur_.newline_before) advance();
        semi();
        return opaque_leaf(s);
      }
      if (is_decl_start()) return parse_var_statement();
      if (typed()) {
        NodeId ts = try_parse_ts_declaration();
        if (ts != kNoNode) return ts;
      }
      Token nx = peek_after(cur_);
      if (nx.is(":") && w != "default" && w != "case") {
        // labeled statement
        std::size_t s = cur_.start;
        advance();
        advance();
        NodeId body = parse_statement();
        return opaque_wrap(s, span_end(body), {body});
      }
    }
    return parse_expression_statement();
  }

  NodeId try_parse_ts_declaration() {
    std::string_view w = cur_.text;
    std::size_t s = cur_.start;
    Token nx = peek_after(cur_);
    if (w == "interface" && nx.kind == TokKind::Identifier) {
      advance();
      advance();
      if (at("<") && !try_skip_type_args()) fail_here("malformed type parameters");
      if (at_ident("extends")) {
        advance();
        skip_type_annotation({"{"});
      }
      if (!at("{")) fail_here("expected '{'");
      skip_balanced();
      semi();
      return opaque_leaf(s);
    }
    if (w == "type" && nx.kind == TokKind::Identifier) {
      Token after = peek_after(nx);
      if (after.is("=") || after.is("<")) {
        advance();
        advance();
        if (at("<") && !try_skip_type_args())
          fail_here("malformed type parameters");
        expect("=");
        skip_type_annotation({";"});
        semi();
        return opaque_leaf(s);
      }
      return kNoNode;
    }
    if (w == "enum" && nx.kind == TokKind::Identifier) {
      advance();
      advance();
      if (!at("{")) fail_here("expected '{'");
      skip_balanced();
      return opaque_leaf(s);
    }
    if (w == "const" && nx.ident("enum")) {
      advance();
      advance();
      if (cur_.kind != TokKind::Identifier) fail_here("expected identifier");
      advance();
      if (!at("{")) fail_here("expected '{'");
      skip_balanced();
      return opaque_leaf(s);
    }
    if ((w == "namespace" || w == "module") &&
        (nx.kind == TokKind::Identifier || nx.kind == TokKind::String)) {
      advance();
      advance();
      while (at(".")) {
        advance();
        if (cur_.kind == TokKind::Identifier) advance();
      }
      std::vector<NodeId> kids;
      if (at("{")) kids.push_back(parse_block());
      return opaque_wrap(s, prev_end_, std::move(kids));
    }
    if (w == "declare") {
      advance();
      NodeId inner = parse_statement();
      return opaque_wrap(s, span_end(inner), {inner});
    }
    if (w == "abstract" && nx.ident("class")) {
      advance();
      return parse_class(s, {}, false);
    }
    return kNoNode;
  }

  NodeId parse_block() {
    std::size_t start = cur_.start;
    expect("{");
    std::vector<NodeId> stmts;
    while (!at("}")) {
      if (cur_.kind == TokKind::End) fail(start, "unbalanced '{'");
      stmts.push_back(parse_statement());
    }
    std::size_t end = cur_.end;
    advance();
    Node n;
    n.kind = NodeKind::Block;
    n.span = make_span(start, end);
    n.children = std::move(stmts);
    return add(std::move(n));
  }

  NodeId parse_expression_statement() {
    std::size_t start = cur_.start;
    NodeId e = parse_sequence();
    semi();
    Node n;
    n.kind = NodeKind::ExpressionStatement;
    n.rel0 = e;
    n.span = make_span(start, prev_end_);
    return add(std::move(n));
  }

  NodeId parse_return() {
    std::size_t start = cur_.start;
    advance();
    Node n;
    n.kind = NodeKind::ReturnStatement;
    if (!at(";") && !at("}") && cur_.kind != TokKind::End &&
        !cur_.newline_before) {
      rescan_regex();
      n.rel0 = parse_sequence();
    }
    semi();
    n.span = make_span(start, prev_end_);
    return add(std::move(n));
  }

  NodeId parse_var_statement() {
    NodeId d = parse_var_decl(false);
    semi();
    Node &n = t_.mutable_node(d);
    n.span.end = prev_end_;
    return d;
  }

  NodeId parse_var_decl(bool in_for_header) {
    std::size_t start = cur_.start;
    Node n;
    n.kind = NodeKind::VariableDeclaration;
    n.name = cur_.text;
    advance();
    for (;;) {
      Node d;
      d.kind = NodeKind::VariableDeclarator;
      std::size_t dstart = cur_.start;
      if (cur_.kind == TokKind::Identifier) {
        d.name = cur_.text;
        advance();
      } else if (at("{") || at("[")) {
        std::vector<std::string> ids;
        skip_balanced(&ids);
        for (auto &id : ids) d.children.push_back(param_ident(id, dstart));
      } else {
        fail_here("expected binding");
      }
      if (typed() && at("!")) advance();
      if (typed() && at(":")) {
        advance();
        skip_type_annotation({"=", ";", ","});
      }
      if (in_for_header && (at_ident("of") || at_ident("in"))) {
        d.span = make_span(dstart, prev_end_);
        n.children.push_back(add(std::move(d)));
        break;
      }
      if (at("=")) {
        advance();
        rescan_regex();
        d.rel0 = parse_assignment();
      }
      d.span = make_span(dstart, prev_end_);
      n.children.push_back(add(std::move(d)));
      if (at(",")) {
        advance();
        continue;
      }
      break;
    }
    n.span = make_span(start, prev_end_);
    return add(std::move(n));
  }

  NodeId parse_if() {
    std::size_t s = cur_.start;
    advance();
    expect("(");
    rescan_regex();
    std::vector<NodeId> kids;
    kids.push_back(parse_sequence());
    expect(")");
    kids.push_back(parse_statement());
    if (at_ident("else")) {
      advance();
      kids.push_back(parse_statement());
    }
    return opaque_wrap(s, prev_end_, std::move(kids));
  }

  NodeId parse_while() {
    std::size_t s = cur_.start;
    advance();
    expect("(");
    rescan_regex();
    std::vector<NodeId> kids;
    kids.push_back(parse_sequence());
    expect(")");
    kids.push_back(parse_statement());
    return opaque_wrap(s, prev_end_, std::move(kids));
  }

  NodeId parse_do() {
    std::size_t s = cur_.start;
    advance();
    std::vector<NodeId> kids;
    kids.push_back(parse_statement());
    if (!at_ident("while")) fail_here("expected 'while'");
    advance();
    expect("(");
    rescan_regex();
    kids.push_back(parse_sequence());
    expect(")");
    semi();
    return opaque_wrap(s, prev_end_, std::move(kids));
  }

  NodeId parse_for() {
    std::size_t s = cur_.start;
    advance();
    if (at_ident("await")) advance();
    expect("(");
    std::vector<NodeId> kids;
    bool iterated = false;
    if (!at(";")) {
      if (is_decl_start()) {
        kids.push_back(parse_var_decl(true));
      } else {
        rescan_regex();
        bool saved = no_in_;
        no_in_ = true;
        kids.push_back(parse_sequence());
        no_in_ = saved;
      }
      if (at_ident("of") || at_ident("in")) {
        advance();
        rescan_regex();
        kids.push_back(parse_assignment());
        iterated = true;
      }
    }
    if (!iterated) {
      expect(";");
      if (!at(";")) {
        rescan_regex();
        kids.push_back(parse_sequence());
      }
      expect(";");
      if (!at(")")) {
        rescan_regex();
        kids.push_back(parse_sequence());
      }
    }
    expect(")");
    kids.push_back(parse_statement());
    return opaque_wrap(s, prev_end_, std::move(kids));
  }

  NodeId parse_switch() {
    std::size_t s = cur_.start;
    advance();
    expect("(");
    rescan_regex();
    std::vector<NodeId> kids;
    kids.push_back(parse_sequence());
    expect(")");
    std::size_t body = cur_.start;
    expect("{");
    while (!at("}")) {
      if (cur_.kind == TokKind::End) fail(body, "unbalanced '{'");
      if (at_ident("case")) {
        advance();
        rescan_regex();
        kids.push_back(parse_assignment());
        expect(":");
      } else if (at_ident("default")) {
        advance();
        expect(":");
      } else {
        kids.push_back(parse_statement());
      }
    }
    advance();
    return opaque_wrap(s, prev_end_, std::move(kids));
  }

  NodeId parse_try() {
    std::size_t s = cur_.start;
    advance();
    std::vector<NodeId> kids;
    if (!at("{")) fail_here("expected '{'");
    kids.push_back(parse_block());
    if (at_ident("catch")) {
      advance();
      if (at("(")) skip_balanced();
      if (!at("{")) fail_here("expected '{'");
      kids.push_back(parse_block());
    }
    if (at_ident("finally")) {
      advance();
      if (!at("{")) fail_here("expected '{'");
      kids.push_back(parse_block());
    }
    return opaque_wrap(s, prev_end_, std::move(kids));
  }

  // --- modules ---

  NodeId parse_import() {
    std::size_t start = cur_.start;
    advance();
    Node n;
    n.kind = NodeKind::ImportDeclaration;
    if (cur_.kind == TokKind::String) {
      n.str_value = decode_string_body(cur_.text);
      advance();
      semi();
      n.span = make_span(start, prev_end_);
      return add(std::move(n));
    }
    if (typed() && at_ident("type")) {
      Token nx = peek_after(cur_);
      if (!nx.ident("from") && !nx.is(",")) {
        n.kind = NodeKind::Opaque;  // type-only import, never merged into
        advance();
      }
    }
    bool have_clause = false;
    if (cur_.kind == TokKind::Identifier && !at_ident("from")) {
      advance();
      have_clause = true;
      if (at(",")) advance();
    }
    if (at("*")) {
      advance();
      if (!at_ident("as")) fail_here("expected 'as'");
      advance();
      if (cur_.kind != TokKind::Identifier) fail_here("expected identifier");
      advance();
      have_clause = true;
    } else if (at("{")) {
      std::size_t bstart = cur_.start;
      advance();
      std::vector<NodeId> named;
      while (!at("}")) {
        if (cur_.kind == TokKind::End) fail(bstart, "unbalanced '{'");
        if (at(",")) {
          advance();
          continue;
        }
        bool type_spec = false;
        if (typed() && at_ident("type")) {
          Token nx = peek_after(cur_);
          if (nx.kind == TokKind::Identifier || nx.kind == TokKind::String) {
            type_spec = true;
            advance();
          }
        }
        if (cur_.kind != TokKind::Identifier && cur_.kind != TokKind::String)
          fail_here("expected import specifier");
        Node spec;
        spec.kind = NodeKind::Identifier;
        spec.name = cur_.kind == TokKind::String
                        ? decode_string_body(cur_.text)
                        : std::string(cur_.text);
        spec.span = make_span(cur_.start, cur_.end);
        advance();
        if (at_ident("as")) {
          advance();
          if (cur_.kind != TokKind::Identifier) fail_here("expected identifier");
          advance();
        }
        if (!type_spec) named.push_back(add(std::move(spec)));
      }
      n.aux_span = make_span(bstart, cur_.end);
      advance();
      n.children = std::move(named);
      have_clause = true;
    }
    if (have_clause) {
      if (!at_ident("from")) fail_here("expected 'from'");
      advance();
      if (cur_.kind != TokKind::String) fail_here("expected module specifier");
      n.str_value = decode_string_body(cur_.text);
      advance();
    }
    semi();
    n.span = make_span(start, prev_end_);
    return add(std::move(n));
  }

  NodeId parse_export() {
    std::size_t start = cur_.start;
    advance();
    if (at("*")) {
      advance();
      if (at_ident("as")) {
        advance();
        advance();
      }
      if (!at_ident("from")) fail_here("expected 'from'");
      advance();
      if (cur_.kind != TokKind::String) fail_here("expected module specifier");
      advance();
      semi();
      return opaque_leaf(start);
    }
    if (at("{")) {
      skip_balanced();
      if (at_ident("from")) {
        advance();
        if (cur_.kind != TokKind::String) fail_here("expected module specifier");
        advance();
      }
      semi();
      return opaque_leaf(start);
    }
    if (at("=")) {
      advance();
      rescan_regex();
      parse_sequence();
      semi();
      return opaque_leaf(start);
    }
    bool dflt = false;
    if (at_ident("default")) {
      advance();
      dflt = true;
      bool decl_follows =
          at_ident("class") || at_ident("function") || at("@") ||
          (at_ident("async") && peek_after(cur_).ident("function")) ||
          (typed() && at_ident("abstract") && peek_after(cur_).ident("class"));
      if (!decl_follows) {
        rescan_regex();
        NodeId e = parse_assignment();
        semi();
        return opaque_wrap(start, prev_end_, {e});
      }
    }
    NodeId d = parse_statement();
    Node &dn = t_.mutable_node(d);
    dn.span = make_span(start, dn.span.end);
    if (dflt) dn.flags |= kDefaultExport;
    return d;
  }

  // --- classes ---

  NodeId parse_decorated() {
    std::size_t start = cur_.start;
    std::vector<NodeId> decorators;
    while (at("@")) decorators.push_back(parse_decorator());
    if (at_ident("export")) {
      advance();
      if (at_ident("default")) advance();
    }
    if (typed() && at_ident("abstract")) advance();
    if (!at_ident("class")) fail_here("expected 'class' after decorators");
    return parse_class(start, std::move(decorators), false);
  }

  NodeId parse_decorator() {
    std::size_t start = cur_.start;
    expect("@");
    NodeId expr = parse_primary();
    expr = parse_call_tail(expr, true);
    Node n;
    n.kind = NodeKind::Decorator;
    n.rel0 = expr;
    n.span = make_span(start, span_end(expr));
    return add(std::move(n));
  }

  NodeId parse_class(std::size_t start, std::vector<NodeId> decorators,
                     bool is_expression) {
    advance();  // past 'class'
    Node n;
    n.kind = NodeKind::ClassDeclaration;
    if (is_expression) n.flags |= kExpressionForm;
    if (cur_.kind == TokKind::Identifier && !at_ident("extends") &&
        !at_ident("implements")) {
      n.name = cur_.text;
      advance();
    }
    if (typed() && at("<") && !try_skip_type_args())
      fail_here("malformed type parameters");
    if (at_ident("extends")) {
      advance();
      NodeId heritage = parse_primary();
      heritage = parse_call_tail(heritage, true);
      n.rel0 = heritage;
      if (typed() && at("<")) try_skip_type_args();
    }
    if (typed() && at_ident("implements")) {
      advance();
      skip_type_annotation({"{"});
    }
    if (!at("{")) fail_here("expected '{' to open class body");
    std::size_t body_start = cur_.start;
    advance();
    std::vector<NodeId> members;
    while (!at("}")) {
      if (cur_.kind == TokKind::End) fail(body_start, "unbalanced '{'");
      NodeId m = parse_class_member();
      if (m != kNoNode) members.push_back(m);
    }
    std::size_t body_end = cur_.end;
    advance();
    n.aux_span = make_span(body_start, body_end);
    n.span = make_span(start, body_end);
    n.children = std::move(decorators);
    for (NodeId m : members) n.children.push_back(m);
    return add(std::move(n));
  }

  bool member_modifier_ahead() {
    Token nx = peek_after(cur_);
    // A modifier word is a property name when what follows closes the member.
    return !(nx.is("=") || nx.is("(") || nx.is(";") || nx.is(":") ||
             nx.is("}") || nx.is("?") || nx.is("!") || nx.is("<") ||
             nx.is(")") || nx.is(","));
  }

  NodeId parse_class_member() {
    if (at(";")) {
      advance();
      return kNoNode;
    }
    std::size_t start = cur_.start;
    while (at("@")) parse_decorator();
    std::uint16_t flags = 0;
    while (cur_.kind == TokKind::Identifier) {
      std::string_view w = cur_.text;
      bool is_mod = w == "static" || w == "public" || w == "private" ||
                    w == "protected" || w == "readonly" || w == "abstract" ||
                    w == "declare" || w == "override" || w == "accessor";
      if (!is_mod || !member_modifier_ahead()) break;
      if (w == "static") flags |= kStatic;
      advance();
    }
    if (at_ident("async") && member_modifier_ahead()) advance();
    if (at("*")) advance();
    if ((at_ident("get") || at_ident("set")) && member_modifier_ahead()) {
      flags |= kAccessor;
      advance();
    }
    std::string name;
    if (cur_.kind == TokKind::Identifier || cur_.kind == TokKind::PrivateName) {
      name = cur_.text;
      advance();
    } else if (cur_.kind == TokKind::String) {
      name = decode_string_body(cur_.text);
      advance();
    } else if (cur_.kind == TokKind::Number) {
      name = cur_.text;
      advance();
    } else if (at("[")) {
      flags |= kComputed;
      skip_balanced();
    } else {
      fail_here("unexpected token in class body");
    }
    if (at("?") || (typed() && at("!"))) advance();
    if (typed() && at("<") && !try_skip_type_args())
      fail_here("malformed type parameters");
    if (at("(")) {
      std::vector<std::string> params;
      skip_balanced(&params);
      if (typed() && at(":")) {
        advance();
        skip_type_annotation({"{", ";"});
      }
      Node n;
      n.kind = NodeKind::ClassMethod;
      n.flags = flags;
      if (name == "constructor" && !(flags & kStatic)) n.flags |= kConstructor;
      n.name = name;
      if (at("{")) {
        n.rel0 = parse_block();
      } else {
        semi();  // overload signature or abstract method
      }
      n.span = make_span(start, prev_end_);
      for (auto &p : params) n.children.push_back(param_ident(p, start));
      return add(std::move(n));
    }
    // property
    if (typed() && at(":")) {
      advance();
      skip_type_annotation({"=", ";"});
    }
    Node n;
    n.kind = NodeKind::ClassProperty;
    n.flags = flags;
    n.name = name;
    if (at("=")) {
      advance();
      rescan_regex();
      n.rel0 = parse_assignment();
    }
    if (at(";")) {
      advance();
    } else if (!at("}") && !cur_.newline_before && cur_.kind != TokKind::End) {
      fail_here("expected ';' after class property");
    }
    n.span = make_span(start, prev_end_);
    return add(std::move(n));
  }

  // --- functions ---

  NodeId parse_function(std::size_t start, bool is_expression) {
    advance();  // past 'function'
    if (at("*")) advance();
    Node n;
    n.kind = NodeKind::FunctionDeclaration;
    if (is_expression) n.flags |= kExpressionForm;
    if (cur_.kind == TokKind::Identifier) {
      n.name = cur_.text;
      advance();
    }
    if (typed() && at("<") && !try_skip_type_args())
      fail_here("malformed type parameters");
    if (!at("(")) fail_here("expected '(' in function");
    std::vector<std::string> params;
    skip_balanced(&params);
    if (typed() && at(":")) {
      advance();
      skip_type_annotation({"{", ";"});
    }
    if (at("{")) {
      n.rel0 = parse_block();
    } else {
      semi();  // declaration signature (overloads, ambient)
    }
    n.span = make_span(start, prev_end_);
    for (auto &p : params) n.children.push_back(param_ident(p, start));
    return add(std::move(n));
  }

  NodeId parse_arrow(std::size_t start) {
    Node n;
    n.kind = NodeKind::ArrowFunction;
    std::vector<std::string> params;
    if (at("(")) {
      skip_balanced(&params);
    } else {
      params.push_back(std::string(cur_.text));
      advance();
    }
    if (typed() && at(":")) {
      advance();
      skip_type_annotation({"=>", ";", "="});
    }
    expect("=>");
    if (at("{")) {
      n.flags |= kBlockBody;
      n.rel0 = parse_block();
    } else {
      rescan_regex();
      n.rel0 = parse_assignment();
    }
    n.span = make_span(start, span_end(n.rel0));
    for (auto &p : params) n.children.push_back(param_ident(p, start));
    return add(std::move(n));
  }

  // --- expressions ---

  NodeId parse_sequence() {
    NodeId first = parse_assignment();
    if (!at(",")) return first;
    std::vector<NodeId> parts{first};
    while (at(",")) {
      advance();
      rescan_regex();
      parts.push_back(parse_assignment());
    }
    std::size_t s = span_start(first);
    std::size_t e = span_end(parts.back());
    return opaque_wrap(s, e, std::move(parts));
  }

  NodeId parse_assignment() {
    rescan_regex();
    if (at_ident("yield")) {
      std::size_t s = cur_.start;
      advance();
      if (at("*")) advance();
      std::vector<NodeId> kids;
      if (!at(";") && !at(")") && !at("]") && !at("}") && !at(",") &&
          cur_.kind != TokKind::End && !cur_.newline_before) {
        rescan_regex();
        kids.push_back(parse_assignment());
      }
      return opaque_wrap(s, prev_end_, std::move(kids));
    }
    if (at_ident("async")) {
      Token nx = peek_after(cur_);
      if (!nx.newline_before) {
        if (nx.kind == TokKind::Identifier && !nx.ident("function") &&
            peek_after(nx).is("=>")) {
          std::size_t s = cur_.start;
          advance();
          return parse_arrow(s);
        }
        if (nx.is("(")) {
          Mark m = mark();
          std::size_t s = cur_.start;
          advance();
          if (peek_arrow_after_parens()) return parse_arrow(s);
          reset(m);
        }
      }
    }
    if (cur_.kind == TokKind::Identifier && peek_after(cur_).is("=>"))
      return parse_arrow(cur_.start);
    if (at("(") && peek_arrow_after_parens()) return parse_arrow(cur_.start);

    NodeId left = parse_conditional();
    if (cur_.kind == TokKind::Punct && is_assign_op(cur_.text)) {
      Node n;
      n.kind = NodeKind::AssignmentExpression;
      n.name = cur_.text;
      advance();
      rescan_regex();
      NodeId right = parse_assignment();
      n.rel0 = left;
      n.rel1 = right;
      n.span = make_span(span_start(left), span_end(right));
      return add(std::move(n));
    }
    return left;
  }

  NodeId parse_conditional() {
    NodeId c = parse_binary();
    if (!at("?")) return c;
    advance();
    bool saved = in_ternary_branch_;
    in_ternary_branch_ = true;
    rescan_regex();
    NodeId t1 = parse_assignment();
    in_ternary_branch_ = saved;
    expect(":");
    rescan_regex();
    NodeId t2 = parse_assignment();
    return opaque_wrap(span_start(c), span_end(t2), {c, t1, t2});
  }

  NodeId parse_binary() {
    NodeId first = parse_unary();
    std::vector<NodeId> operands{first};
    for (;;) {
      if (cur_.kind == TokKind::Punct && is_binary_op(cur_.text)) {
        advance();
        rescan_regex();
        operands.push_back(parse_unary());
        continue;
      }
      if (at_ident("instanceof") || (at_ident("in") && !no_in_)) {
        advance();
        rescan_regex();
        operands.push_back(parse_unary());
        continue;
      }
      if (typed() && (at_ident("as") || at_ident("satisfies")) &&
          !cur_.newline_before) {
        advance();
        if (at_ident("const")) {
          advance();
        } else {
          skip_type_annotation({";", "=", "?", ":", "&&", "||", "??", "==",
                                "===", "!=", "!==", "+", "-", "*", "/", "%",
                                "<=", ">=", "=>"});
        }
        continue;
      }
      break;
    }
    if (operands.size() == 1) return first;
    std::size_t s = span_start(first);
    std::size_t e = span_end(operands.back());
    return opaque_wrap(s, e, std::move(operands));
  }

  NodeId parse_unary() {
    if (cur_.kind == TokKind::Punct &&
        (at("!") || at("~") || at("+") || at("-") || at("++") || at("--"))) {
      std::size_t s = cur_.start;
      advance();
      rescan_regex();
      NodeId arg = parse_unary();
      return opaque_wrap(s, span_end(arg), {arg});
    }
    if (at_ident("typeof") || at_ident("void") || at_ident("delete") ||
        at_ident("await")) {
      std::size_t s = cur_.start;
      advance();
      rescan_regex();
      NodeId arg = parse_unary();
      return opaque_wrap(s, span_end(arg), {arg});
    }
    if (at_ident("new")) return parse_new(cur_.start);
    if (typed() && !jsx_ok() && at("<")) {
      // angle-bracket type assertion: <T>expr
      std::size_t end = scan_angle_chars(cur_.start);
      advance_from(end);
      return parse_unary();
    }
    NodeId e = parse_primary();
    e = parse_call_tail(e, true);
    if ((at("++") || at("--")) && !cur_.newline_before) {
      std::size_t end = cur_.end;
      advance();
      return opaque_wrap(span_start(e), end, {e});
    }
    return e;
  }

  NodeId parse_new(std::size_t start) {
    advance();  // past 'new'
    if (at(".")) {
      advance();
      if (cur_.kind == TokKind::Identifier) advance();
      return opaque_leaf(start);
    }
    NodeId callee =
        at_ident("new") ? parse_new(cur_.start) : parse_primary();
    callee = parse_call_tail(callee, false);
    if (typed() && at("<")) {
      Mark m = mark();
      if (!(try_skip_type_args() && at("("))) reset(m);
    }
    Node n;
    n.kind = NodeKind::CallExpression;
    n.flags |= kNew;
    n.rel0 = callee;
    if (at("(")) parse_arguments(n.children);
    n.span = make_span(start, prev_end_ > start ? prev_end_ : span_end(callee));
    NodeId id = add(std::move(n));
    return parse_call_tail(id, true);
  }

  void parse_arguments(std::vector<NodeId> &args) {
    std::size_t open = cur_.start;
    expect("(");
    while (!at(")")) {
      if (cur_.kind == TokKind::End) fail(open, "unbalanced '('");
      if (at("...")) {
        std::size_t s = cur_.start;
        advance();
        rescan_regex();
        NodeId a = parse_assignment();
        args.push_back(opaque_wrap(s, span_end(a), {a}));
      } else {
        rescan_regex();
        args.push_back(parse_assignment());
      }
      if (at(",")) advance();
      else break;
    }
    expect(")");
  }

  NodeId finish_call(NodeId callee, std::size_t start, bool optional) {
    Node n;
    n.kind = NodeKind::CallExpression;
    if (optional) n.flags |= kOptionalMember;
    n.rel0 = callee;
    parse_arguments(n.children);
    n.span = make_span(start, prev_end_);
    return add(std::move(n));
  }

  NodeId parse_call_tail(NodeId expr, bool allow_call) {
    for (;;) {
      std::size_t start = span_start(expr);
      if (at(".")) {
        advance();
        if (cur_.kind != TokKind::Identifier &&
            cur_.kind != TokKind::PrivateName)
          fail_here("expected property name after '.'");
        Node m;
        m.kind = NodeKind::MemberExpression;
        m.name = cur_.text;
        m.rel0 = expr;
        m.span = make_span(start, cur_.end);
        advance();
        expr = add(std::move(m));
        continue;
      }
      if (at("?.")) {
        advance();
        if (at("(")) {
          if (!allow_call) break;
          expr = finish_call(expr, start, true);
          continue;
        }
        if (at("[")) {
          advance();
          rescan_regex();
          NodeId idx = parse_sequence();
          expect("]");
          Node m;
          m.kind = NodeKind::MemberExpression;
          m.flags |= kComputed | kOptionalMember;
          m.rel0 = expr;
          m.children.push_back(idx);
          m.span = make_span(start, prev_end_);
          expr = add(std::move(m));
          continue;
        }
        if (cur_.kind != TokKind::Identifier &&
            cur_.kind != TokKind::PrivateName)
          fail_here("expected property name after '?.'");
        Node m;
        m.kind = NodeKind::MemberExpression;
        m.flags |= kOptionalMember;
        m.name = cur_.text;
        m.rel0 = expr;
        m.span = make_span(start, cur_.end);
        advance();
        expr = add(std::move(m));
        continue;
      }
      if (at("[")) {
        advance();
        rescan_regex();
        NodeId idx = parse_sequence();
        expect("]");
        Node m;
        m.kind = NodeKind::MemberExpression;
        m.flags |= kComputed;
        m.rel0 = expr;
        m.children.push_back(idx);
        m.span = make_span(start, prev_end_);
        expr = add(std::move(m));
        continue;
      }
      if (at("(") && allow_call) {
        expr = finish_call(expr, start, false);
        continue;
      }
      if (cur_.kind == TokKind::TemplateFull ||
          cur_.kind == TokKind::TemplateHead) {
        NodeId tpl = parse_template();
        expr = opaque_wrap(start, span_end(tpl), {expr, tpl});
        continue;
      }
      if (typed() && at("!") && !peek_after(cur_).is("=")) {
        advance();  // non-null assertion
        continue;
      }
      if (typed() && at("<")) {
        Mark m = mark();
        if (try_skip_type_args() &&
            (at("(") || cur_.kind == TokKind::TemplateFull ||
             cur_.kind == TokKind::TemplateHead)) {
          continue;
        }
        reset(m);
        break;
      }
      break;
    }
    return expr;
  }

  NodeId parse_template() {
    Node n;
    n.kind = NodeKind::TemplateLiteral;
    std::size_t start = cur_.start;
    if (cur_.kind == TokKind::TemplateFull) {
      n.span = make_span(start, cur_.end);
      advance();
      return add(std::move(n));
    }
    advance();  // past head
    for (;;) {
      rescan_regex();
      n.children.push_back(parse_sequence());
      if (!at("}")) fail_here("expected '}' in template literal");
      cur_ = lex_.scan_template_continue(cur_.start);
      bool tail = cur_.kind == TokKind::TemplateTail;
      std::size_t piece_end = cur_.end;
      advance();
      if (tail) {
        n.span = make_span(start, piece_end);
        break;
      }
    }
    return add(std::move(n));
  }

  NodeId parse_object_literal() {
    std::size_t start = cur_.start;
    advance();
    std::vector<NodeId> kids;
    while (!at("}")) {
      if (cur_.kind == TokKind::End) fail(start, "unbalanced '{'");
      if (at(",")) {
        advance();
        continue;
      }
      if (at("...")) {
        advance();
        rescan_regex();
        kids.push_back(parse_assignment());
        continue;
      }
      if (at_ident("async") && !peek_after(cur_).is(":") &&
          !peek_after(cur_).is(",") && !peek_after(cur_).is("}") &&
          !peek_after(cur_).is("(")) {
        advance();
      }
      if (at("*")) advance();
      if ((at_ident("get") || at_ident("set")) && !peek_after(cur_).is(":") &&
          !peek_after(cur_).is(",") && !peek_after(cur_).is("}") &&
          !peek_after(cur_).is("(")) {
        advance();
      }
      NodeId key = kNoNode;
      std::size_t key_start = cur_.start;
      std::string key_name;
      if (at("[")) {
        advance();
        rescan_regex();
        key = parse_assignment();
        expect("]");
      } else if (cur_.kind == TokKind::Identifier) {
        key_name = cur_.text;
        Node k;
        k.kind = NodeKind::Identifier;
        k.name = key_name;
        k.span = make_span(cur_.start, cur_.end);
        key = add(std::move(k));
        advance();
      } else if (cur_.kind == TokKind::String ||
                 cur_.kind == TokKind::Number) {
        key_name = cur_.kind == TokKind::String
                       ? decode_string_body(cur_.text)
                       : std::string(cur_.text);
        advance();
      } else {
        fail_here("unexpected token in object literal");
      }
      if (at("?")) advance();
      if (typed() && at("<") && !try_skip_type_args())
        fail_here("malformed type parameters");
      if (at("(")) {
        // object method; modeled as a function expression for traversal
        std::vector<std::string> params;
        skip_balanced(&params);
        if (typed() && at(":")) {
          advance();
          skip_type_annotation({"{", ";"});
        }
        if (!at("{")) fail_here("expected '{' in object method");
        Node fn;
        fn.kind = NodeKind::FunctionDeclaration;
        fn.flags |= kExpressionForm;
        fn.name = key_name;
        fn.rel0 = parse_block();
        fn.span = make_span(key_start, prev_end_);
        for (auto &p : params) fn.children.push_back(param_ident(p, key_start));
        kids.push_back(add(std::move(fn)));
      } else if (at(":")) {
        advance();
        rescan_regex();
        kids.push_back(parse_assignment());
      } else if (at("=")) {
        // destructuring default inside a pattern-shaped literal
        advance();
        rescan_regex();
        NodeId v = parse_assignment();
        if (key != kNoNode) kids.push_back(key);
        kids.push_back(v);
      } else {
        if (key != kNoNode) kids.push_back(key);  // shorthand reference
      }
      if (!at(",") && !at("}")) fail_here("expected ',' in object literal");
    }
    std::size_t end = cur_.end;
    advance();
    return opaque_wrap(start, end, std::move(kids));
  }

  NodeId parse_primary() {
    rescan_regex();
    switch (cur_.kind) {
      case TokKind::Number: {
        Node n;
        n.kind = NodeKind::NumberLiteral;
        n.span = make_span(cur_.start, cur_.end);
        advance();
        return add(std::move(n));
      }
      case TokKind::String: {
        Node n;
        n.kind = NodeKind::StringLiteral;
        n.str_value = decode_string_body(cur_.text);
        n.span = make_span(cur_.start, cur_.end);
        advance();
        return add(std::move(n));
      }
      case TokKind::Regex: {
        Node n;
        n.kind = NodeKind::RegexLiteral;
        n.span = make_span(cur_.start, cur_.end);
        advance();
        return add(std::move(n));
      }
      case TokKind::TemplateFull:
      case TokKind::TemplateHead:
        return parse_template();
      case TokKind::PrivateName: {
        Node n;
        n.kind = NodeKind::Identifier;
        n.name = cur_.text;
        n.span = make_span(cur_.start, cur_.end);
        advance();
        return add(std::move(n));
      }
      case TokKind::Identifier: {
        if (at_ident("function")) return parse_function(cur_.start, true);
        if (at_ident("async") && peek_after(cur_).ident("function")) {
          std::size_t s = cur_.start;
          advance();
          return parse_function(s, true);
        }
        if (at_ident("class")) return parse_class(cur_.start, {}, true);
        Node n;
        n.kind = NodeKind::Identifier;
        n.name = cur_.text;
        n.span = make_span(cur_.start, cur_.end);
        advance();
        return add(std::move(n));
      }
      case TokKind::Punct: {
        if (at("(")) {
          advance();
          rescan_regex();
          NodeId inner = parse_sequence();
          expect(")");
          t_.mutable_node(inner).flags |= kParen;
          return inner;
        }
        if (at("[")) {
          std::size_t start = cur_.start;
          advance();
          std::vector<NodeId> kids;
          while (!at("]")) {
            if (cur_.kind == TokKind::End) fail(start, "unbalanced '['");
            if (at(",")) {
              advance();
              continue;
            }
            if (at("...")) {
              advance();
              rescan_regex();
              kids.push_back(parse_assignment());
            } else {
              rescan_regex();
              kids.push_back(parse_assignment());
            }
          }
          std::size_t end = cur_.end;
          advance();
          return opaque_wrap(start, end, std::move(kids));
        }
        if (at("{")) return parse_object_literal();
        if (at("<") && jsx_ok()) return parse_jsx_element_entry();
        break;
      }
      default:
        break;
    }
    fail_here("unexpected token");
  }

  // --- angle-bracket type assertions (ts, non-jsx) ---

  std::size_t scan_angle_chars(std::size_t pos) {
    int depth = 0;
    std::size_t p = pos;
    const std::size_t n = src_.size();
    while (p < n) {
      char c = src_[p];
      if (c == '<') {
        ++depth;
      } else if (c == '>') {
        if (p > 0 && src_[p - 1] == '=') {
          ++p;
          continue;
        }
        --depth;
        if (depth == 0) return p + 1;
      } else if (c == '"' || c == '\'' || c == '`') {
        char q = c;
        ++p;
        while (p < n && src_[p] != q) {
          if (src_[p] == '\\') ++p;
          ++p;
        }
      } else if (c == ';') {
        break;
      }
      ++p;
    }
    fail(pos, "unbalanced '<'");
  }

  // --- JSX (character level: tags and text are not ES tokens) ---

  std::size_t jsx_ws(std::size_t p) const {
    const std::size_t n = src_.size();
    while (p < n && (src_[p] == ' ' || src_[p] == '\t' || src_[p] == '\n' ||
                     src_[p] == '\r'))
      ++p;
    return p;
  }

  std::string jsx_name(std::size_t &p) {
    const std::size_t n = src_.size();
    std::size_t s = p;
    while (p < n && (is_identifier_part(src_[p]) || src_[p] == '.' ||
                     src_[p] == '-' || src_[p] == ':'))
      ++p;
    return src_.substr(s, p - s);
  }

  NodeId parse_jsx_element_entry() {
    std::size_t pos = cur_.start;
    std::vector<NodeId> kids;
    std::size_t end = jsx_element(pos, kids);
    Node n;
    n.kind = NodeKind::Opaque;
    n.span = make_span(pos, end);
    n.children = std::move(kids);
    NodeId id = add(std::move(n));
    advance_from(end);
    return id;
  }

  std::size_t jsx_element(std::size_t pos, std::vector<NodeId> &kids) {
    const std::size_t n = src_.size();
    std::size_t p = pos + 1;  // past '<'
    p = jsx_ws(p);
    if (p < n && src_[p] == '>') return jsx_children(p + 1, "", pos, kids);
    std::string name = jsx_name(p);
    if (name.empty()) fail(pos, "malformed JSX element");
    for (;;) {
      p = jsx_ws(p);
      if (p >= n) fail(pos, "unterminated JSX element");
      char c = src_[p];
      if (c == '/') {
        if (p + 1 >= n || src_[p + 1] != '>')
          fail(p, "malformed JSX self-closing tag");
        return p + 2;
      }
      if (c == '>') return jsx_children(p + 1, name, pos, kids);
      if (c == '{') {
        p = jsx_expr_container(p, kids);
        continue;
      }
      std::string attr = jsx_name(p);
      if (attr.empty()) fail(p, "malformed JSX attribute");
      p = jsx_ws(p);
      if (p < n && src_[p] == '=') {
        p = jsx_ws(p + 1);
        if (p >= n) fail(pos, "unterminated JSX element");
        char q = src_[p];
        if (q == '"' || q == '\'') {
          ++p;
          while (p < n && src_[p] != q) ++p;
          if (p >= n) fail(pos, "unterminated JSX attribute value");
          ++p;
        } else if (q == '{') {
          p = jsx_expr_container(p, kids);
        } else {
          fail(p, "malformed JSX attribute value");
        }
      }
    }
  }

  std::size_t jsx_children(std::size_t p, const std::string &name,
                           std::size_t open_pos, std::vector<NodeId> &kids) {
    const std::size_t n = src_.size();
    for (;;) {
      if (p >= n) fail(open_pos, "unterminated JSX element");
      char c = src_[p];
      if (c == '<') {
        if (p + 1 < n && src_[p + 1] == '/') {
          std::size_t q = jsx_ws(p + 2);
          std::string close = jsx_name(q);
          q = jsx_ws(q);
          if (q >= n || src_[q] != '>') fail(p, "malformed JSX closing tag");
          if (close != name) fail(p, "mismatched JSX closing tag");
          return q + 1;
        }
        p = jsx_element(p, kids);
        continue;
      }
      if (c == '{') {
        p = jsx_expr_container(p, kids);
        continue;
      }
      ++p;
    }
  }

  std::size_t jsx_expr_container(std::size_t p, std::vector<NodeId> &kids) {
    Mark saved = mark();
    prev_end_ = p + 1;
    cur_ = lex_.scan(p + 1, true);
    std::size_t end;
    if (at("}")) {
      end = cur_.end;  // {} or a lone comment
    } else {
      if (at("...")) {
        advance();
        rescan_regex();
      }
      NodeId e = parse_assignment();
      kids.push_back(e);
      if (!at("}")) fail_here("expected '}' in JSX expression");
      end = cur_.end;
    }
    reset(saved);
    return end;
  }
};

}  // namespace

SyntaxTree parse(std::string source, SourceDialect dialect) {
  SyntaxTree tree(std::move(source), dialect);
  try {
    Parser parser(tree);
    parser.run();
  } catch (const ScanError &e) {
    throw ParseError(tree.lines().line_of(e.pos), tree.lines().column_of(e.pos),
                     e.message);
  }
  tree.set_parent_links();
  return tree;
}

}  // namespace unleak
