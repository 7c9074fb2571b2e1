//===--- parse_test.cpp - tolerant parser structure and limits -*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#include <string>
#include <vector>

#include "doctest.h"
#include "unleak/tree.hpp"

using namespace unleak;

namespace {

SyntaxTree parse_as(const std::string &src, SourceDialect d) {
  return parse(src, d);
}

std::vector<NodeId> collect(const SyntaxTree &t, NodeKind kind) {
  std::vector<NodeId> out;
  t.walk(t.root(), [&](NodeId id) {
    if (t.node(id).kind == kind) out.push_back(id);
    return true;
  });
  return out;
}

NodeId first(const SyntaxTree &t, NodeKind kind) {
  auto all = collect(t, kind);
  REQUIRE_FALSE(all.empty());
  return all.front();
}

}  // namespace

TEST_CASE("dialect is inferred from the file extension") {
  CHECK_EQ(dialect_from_path("src/app.js"), SourceDialect::Plain);
  CHECK_EQ(dialect_from_path("src/app.jsx"), SourceDialect::Jsx);
  CHECK_EQ(dialect_from_path("src/app.ts"), SourceDialect::Typed);
  CHECK_EQ(dialect_from_path("src/app.tsx"), SourceDialect::TypedJsx);
  CHECK(dialect_allows_jsx(SourceDialect::Jsx));
  CHECK(dialect_allows_jsx(SourceDialect::TypedJsx));
  CHECK_FALSE(dialect_allows_jsx(SourceDialect::Plain));
  CHECK(dialect_is_typed(SourceDialect::Typed));
  CHECK_FALSE(dialect_is_typed(SourceDialect::Jsx));
}

TEST_CASE("every node is a span over the unmodified source") {
  const char *sources[] = {
      "const a = 1;\nfunction f(x) { return x + a; }\nf(2);\n",
      "class A { m() { this.x = [1, 2].map(v => v * 2); } }\n",
      "for (let i = 0; i < 3; ++i) { setTimeout(() => go(i), i * 10); }\n",
      "const s = `tpl ${a + b} end`; const r = /ab+c/g;\n",
  };
  for (const char *src : sources) {
    SyntaxTree t = parse_as(src, SourceDialect::Plain);
    CHECK_EQ(t.render(), src);
    t.walk(t.root(), [&](NodeId id) {
      const Node &n = t.node(id);
      CHECK_LE(n.span.start, n.span.end);
      CHECK_LE(n.span.end, t.source().size());
      if (n.parent != kNoNode)
        CHECK(t.node(n.parent).span.encloses(n.span));
      CHECK_EQ(n.span.line, t.lines().line_of(n.span.start));
      CHECK_EQ(n.span.column, t.lines().column_of(n.span.start));
      return true;
    });
  }
}

TEST_CASE("class declarations expose name, heritage, body, and members") {
  std::string src =
      "class Widget extends React.Component {\n"
      "  constructor(props) { super(props); }\n"
      "  componentDidMount() {}\n"
      "  render() { return null; }\n"
      "}\n";
  SyntaxTree t = parse_as(src, SourceDialect::Plain);
  NodeId cls = first(t, NodeKind::ClassDeclaration);
  const Node &c = t.node(cls);
  CHECK_EQ(c.name, "Widget");
  REQUIRE_NE(c.rel0, kNoNode);
  CHECK_EQ(t.text(c.rel0), "React.Component");
  CHECK_EQ(t.text(c.aux_span).front(), '{');
  CHECK_EQ(t.text(c.aux_span).back(), '}');

  auto methods = collect(t, NodeKind::ClassMethod);
  REQUIRE_EQ(methods.size(), 3);
  CHECK(t.node(methods[0]).has_flag(kConstructor));
  CHECK_EQ(t.node(methods[1]).name, "componentDidMount");
  CHECK_EQ(t.node(methods[2]).name, "render");
  REQUIRE_NE(t.node(methods[1]).rel0, kNoNode);
  CHECK_EQ(t.node(t.node(methods[1]).rel0).kind, NodeKind::Block);
}

TEST_CASE("decorated typescript classes keep decorators as children") {
  std::string src =
      "@Component({ selector: 'app-x' })\n"
      "export class XComponent {\n"
      "  private readonly limit: number = 3;\n"
      "  ngOnInit(): void {}\n"
      "}\n";
  SyntaxTree t = parse_as(src, SourceDialect::Typed);
  const Node &c = t.node(first(t, NodeKind::ClassDeclaration));
  CHECK_EQ(c.name, "XComponent");
  REQUIRE_FALSE(c.children.empty());
  const Node &deco = t.node(c.children.front());
  CHECK_EQ(deco.kind, NodeKind::Decorator);
  REQUIRE_NE(deco.rel0, kNoNode);
  const Node &call = t.node(deco.rel0);
  CHECK_EQ(call.kind, NodeKind::CallExpression);
  CHECK_EQ(t.text(t.node(call.rel0).span), "Component");

  const Node &prop = t.node(first(t, NodeKind::ClassProperty));
  CHECK_EQ(prop.name, "limit");
  REQUIRE_NE(prop.rel0, kNoNode);
  CHECK_EQ(t.text(prop.rel0), "3");
}

TEST_CASE("arrow functions distinguish block and expression bodies") {
  SyntaxTree t =
      parse_as("const f = () => 1;\nconst g = (a, b) => { return a + b; };\n",
               SourceDialect::Plain);
  auto arrows = collect(t, NodeKind::ArrowFunction);
  REQUIRE_EQ(arrows.size(), 2);
  CHECK_FALSE(t.node(arrows[0]).has_flag(kBlockBody));
  CHECK_EQ(t.text(t.node(arrows[0]).rel0), "1");
  CHECK(t.node(arrows[1]).has_flag(kBlockBody));
  CHECK_EQ(t.node(t.node(arrows[1]).rel0).kind, NodeKind::Block);
  // Parameter markers carry the bound names.
  REQUIRE_EQ(t.node(arrows[1]).children.size(), 2);
  CHECK_EQ(t.node(t.node(arrows[1]).children[0]).name, "a");
  CHECK_EQ(t.node(t.node(arrows[1]).children[1]).name, "b");
}

TEST_CASE("function expressions carry the expression-form flag") {
  SyntaxTree t = parse_as("const h = function named() { return 1; };\n",
                          SourceDialect::Plain);
  const Node &fn = t.node(first(t, NodeKind::FunctionDeclaration));
  CHECK(fn.has_flag(kExpressionForm));
  CHECK_EQ(fn.name, "named");
}

TEST_CASE("call chains nest through member callees") {
  SyntaxTree t = parse_as("svc.stream().pipe(map(f)).subscribe(onNext);\n",
                          SourceDialect::Plain);
  // Outermost call is the subscribe; its callee's object is the pipe call.
  auto calls = collect(t, NodeKind::CallExpression);
  NodeId outer = kNoNode;
  for (NodeId id : calls) {
    const Node &callee = t.node(t.node(id).rel0);
    if (callee.kind == NodeKind::MemberExpression && callee.name == "subscribe")
      outer = id;
  }
  REQUIRE_NE(outer, kNoNode);
  const Node &callee = t.node(t.node(outer).rel0);
  const Node &pipe_call = t.node(callee.rel0);
  CHECK_EQ(pipe_call.kind, NodeKind::CallExpression);
  CHECK_EQ(t.node(pipe_call.rel0).name, "pipe");
  REQUIRE_EQ(t.node(outer).children.size(), 1);
  CHECK_EQ(t.text(t.node(outer).children[0]), "onNext");
}

TEST_CASE("new and computed-member flags") {
  SyntaxTree t = parse_as("const s = new Subject(); t[k] = s;\n",
                          SourceDialect::Plain);
  const Node &call = t.node(first(t, NodeKind::CallExpression));
  CHECK(call.has_flag(kNew));
  bool saw_computed = false;
  for (NodeId id : collect(t, NodeKind::MemberExpression))
    if (t.node(id).has_flag(kComputed)) {
      saw_computed = true;
      CHECK(t.node(id).name.empty());
      REQUIRE_EQ(t.node(id).children.size(), 1);
      CHECK_EQ(t.text(t.node(id).children[0]), "k");
    }
  CHECK(saw_computed);
}

TEST_CASE("parenthesized receivers are transparent but flagged") {
  SyntaxTree t = parse_as("(svc.stream()).subscribe(f);\n",
                          SourceDialect::Plain);
  auto members = collect(t, NodeKind::MemberExpression);
  REQUIRE_FALSE(members.empty());
  const Node &sub = t.node(members.front());
  CHECK_EQ(sub.name, "subscribe");
  const Node &recv = t.node(sub.rel0);
  CHECK(recv.has_flag(kParen));
  CHECK_EQ(t.text(recv.span), "svc.stream()");
}

TEST_CASE("imports expose module, named specifiers, and brace span") {
  std::string src =
      "import React, { useEffect as ue, useState } from 'react';\n"
      "import './side.css';\n"
      "import * as d3 from \"d3\";\n";
  SyntaxTree t = parse_as(src, SourceDialect::Plain);
  auto imports = collect(t, NodeKind::ImportDeclaration);
  REQUIRE_EQ(imports.size(), 3);

  const Node &react = t.node(imports[0]);
  CHECK_EQ(react.str_value, "react");
  REQUIRE_EQ(react.children.size(), 2);
  CHECK_EQ(t.node(react.children[0]).name, "useEffect");
  CHECK_EQ(t.node(react.children[1]).name, "useState");
  CHECK_EQ(t.text(react.aux_span).front(), '{');

  CHECK_EQ(t.node(imports[1]).str_value, "./side.css");
  CHECK(t.node(imports[1]).children.empty());
  CHECK_EQ(t.node(imports[2]).str_value, "d3");
}

TEST_CASE("string literals decode their value") {
  SyntaxTree t = parse_as("f('hash\\'change', \"a\\\"b\");\n",
                          SourceDialect::Plain);
  auto strs = collect(t, NodeKind::StringLiteral);
  REQUIRE_EQ(strs.size(), 2);
  CHECK_EQ(t.node(strs[0]).str_value, "hash'change");
  CHECK_EQ(t.node(strs[1]).str_value, "a\"b");
}

TEST_CASE("jsx parses only under jsx dialects") {
  std::string src = "const el = <div onClick={f}>{x}</div>;\n";
  CHECK_THROWS_AS(parse_as(src, SourceDialect::Plain), ParseError);
  SyntaxTree t = parse_as(src, SourceDialect::Jsx);
  CHECK_EQ(t.render(), src);
}

TEST_CASE("parenthesized multi-line jsx is not mistaken for arrow params") {
  // Closing tags after text or expression children are not token clean;
  // the paren-vs-arrow lookahead must back off instead of failing.
  std::string src =
      "function List({ items }) {\n"
      "  return (\n"
      "    <ul className=\"list\">\n"
      "      <h3>Refine</h3>\n"
      "      {items.map(i => (\n"
      "        <li key={i.id}>{i.name}</li>\n"
      "      ))}\n"
      "    </ul>\n"
      "  );\n"
      "}\n";
  SyntaxTree t = parse_as(src, SourceDialect::Jsx);
  CHECK_EQ(t.render(), src);
  std::string apostrophe =
      "const el = (\n  <p>it's fine</p>\n);\n";
  SyntaxTree t2 = parse_as(apostrophe, SourceDialect::Jsx);
  CHECK_EQ(t2.render(), apostrophe);
}

TEST_CASE("type annotations parse only under typed dialects") {
  std::string src = "const n: number = 1;\n";
  CHECK_THROWS_AS(parse_as(src, SourceDialect::Plain), ParseError);
  SyntaxTree t = parse_as(src, SourceDialect::Typed);
  const Node &decl = t.node(first(t, NodeKind::VariableDeclarator));
  CHECK_EQ(decl.name, "n");
  CHECK_EQ(t.text(decl.rel0), "1");
}

TEST_CASE("parse errors carry position and reach the caller") {
  try {
    parse_as("function broken( {\n  return 1;\n", SourceDialect::Plain);
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK_EQ(e.line, 1);
    CHECK_GT(e.column, 1);
    CHECK(std::string(e.what()).find("unbalanced") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_as("const = 1;\n", SourceDialect::Plain), ParseError);
  CHECK_THROWS_AS(parse_as("f());\n", SourceDialect::Plain), ParseError);
  CHECK_THROWS_AS(parse_as("const s = 'unterminated;\n", SourceDialect::Plain),
                  ParseError);
}

TEST_CASE("control flow and odd expressions stay traversable") {
  std::string src =
      "async function weird(a = {}, ...rest) {\n"
      "  try { await go(); } catch (e) { log(e); } finally { done(); }\n"
      "  switch (a.k) { case 1: poll(); break; default: break; }\n"
      "  do { tick(); } while (a.n-- > 0);\n"
      "  const handle = setInterval(function () { tick(); }, 50);\n"
      "  label: for (const k in a) { if (!k) continue label; }\n"
      "  return a?.b ?? [...rest].length;\n"
      "}\n";
  SyntaxTree t = parse_as(src, SourceDialect::Plain);
  bool found_interval = false;
  t.walk(t.root(), [&](NodeId id) {
    const Node &n = t.node(id);
    if (n.kind == NodeKind::CallExpression &&
        t.node(n.rel0).kind == NodeKind::Identifier &&
        t.node(n.rel0).name == "setInterval")
      found_interval = true;
    return true;
  });
  CHECK(found_interval);
}

TEST_CASE("typescript-only constructs parse as opaque statements") {
  std::string src =
      "interface Shape { area(): number; }\n"
      "type Maybe<T> = T | undefined;\n"
      "enum Color { Red, Green }\n"
      "declare const VERSION: string;\n"
      "export class C implements Shape { area(): number { return 0; } }\n";
  SyntaxTree t = parse_as(src, SourceDialect::Typed);
  CHECK_EQ(t.render(), src);
  CHECK_EQ(t.node(first(t, NodeKind::ClassDeclaration)).name, "C");
}

TEST_CASE("generics, casts, and non-null assertions in typed code") {
  std::string src =
      "const xs = new Map<string, number[]>();\n"
      "const y = (get() as Widget).size!;\n"
      "function pick<T extends object>(v: T): T { return v; }\n";
  SyntaxTree t = parse_as(src, SourceDialect::Typed);
  CHECK_EQ(t.render(), src);
}

TEST_CASE("template literals may contain braces and quotes") {
  std::string src = "const q = `a ${f({ k: '}' })} b`;\nleak();\n";
  SyntaxTree t = parse_as(src, SourceDialect::Plain);
  auto calls = collect(t, NodeKind::CallExpression);
  bool saw_leak = false;
  for (NodeId id : calls)
    if (t.node(t.node(id).rel0).name == "leak") saw_leak = true;
  CHECK(saw_leak);
}
