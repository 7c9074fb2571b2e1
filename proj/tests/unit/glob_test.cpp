//===--- glob_test.cpp - path pattern matching -----------------*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#include "unleak/glob.hpp"

#include <vector>

#include "doctest.h"

using namespace unleak;

TEST_CASE("single-segment wildcards") {
  Glob g("src/*.ts");
  CHECK(g.match("src/app.ts"));
  CHECK_FALSE(g.match("src/sub/app.ts"));
  CHECK_FALSE(g.match("app.ts"));
  CHECK_FALSE(g.match("src/app.tsx"));
}

TEST_CASE("question mark matches one character within a segment") {
  Glob g("a?.js");
  CHECK(g.match("ab.js"));
  CHECK_FALSE(g.match("a.js"));
  CHECK_FALSE(g.match("abc.js"));
  CHECK_FALSE(Glob("a?b").match("a/b"));
}

TEST_CASE("double star spans zero or more segments") {
  Glob g("**/*.ts");
  CHECK(g.match("app.ts"));
  CHECK(g.match("src/app.ts"));
  CHECK(g.match("src/a/b/c/app.ts"));
  CHECK_FALSE(g.match("src/app.js"));

  Glob inner("src/**/test/*.ts");
  CHECK(inner.match("src/test/a.ts"));
  CHECK(inner.match("src/x/y/test/a.ts"));
  CHECK_FALSE(inner.match("src/x/test/sub/a.ts"));
}

TEST_CASE("node_modules exclusion shape") {
  Glob g("**/node_modules/**");
  CHECK(g.match("node_modules/react/index.js"));
  CHECK(g.match("packages/app/node_modules/x/y.ts"));
  CHECK_FALSE(g.match("src/node_modules.ts"));
}

TEST_CASE("brace alternation") {
  Glob g("**/*.{js,jsx,ts,tsx}");
  CHECK(g.match("a.js"));
  CHECK(g.match("deep/pile/b.tsx"));
  CHECK_FALSE(g.match("a.mjs"));
  CHECK_FALSE(g.match("a.d.tsx.bak"));
}

TEST_CASE("declaration-file exclusion composes with includes") {
  std::vector<Glob> include;
  include.emplace_back("**/*.{js,jsx,ts,tsx}");
  std::vector<Glob> exclude;
  exclude.emplace_back("**/*.d.ts");
  exclude.emplace_back("**/dist/**");

  CHECK(matches_any(include, "src/app.ts"));
  CHECK(matches_any(exclude, "src/app.d.ts"));
  CHECK_FALSE(matches_any(exclude, "src/app.ts"));
  CHECK(matches_any(exclude, "dist/app.ts"));
}

TEST_CASE("literal dots are not wildcards") {
  Glob g("*.ts");
  CHECK_FALSE(g.match("ats"));
  CHECK(g.match("x.ts"));
}

TEST_CASE("validity check rejects unbalanced alternation") {
  CHECK(Glob::valid("src/**/*.{ts,tsx}"));
  CHECK_FALSE(Glob::valid("src/*.{ts,tsx"));
}
