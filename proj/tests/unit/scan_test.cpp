//===--- scan_test.cpp - leak pattern matching -----------------*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#include "unleak/scan.hpp"

#include <string>
#include <vector>

#include "doctest.h"
#include "unleak/detect.hpp"
#include "unleak/tree.hpp"

using namespace unleak;

namespace {

std::vector<Finding> scan_one(const std::string &src, SourceDialect d,
                              const ScanOptions &opts = {}) {
  static std::vector<SyntaxTree> keep;  // keep trees alive for Finding nodes
  keep.emplace_back(parse(src, d));
  const SyntaxTree &t = keep.back();
  auto comps = detect_components(t);
  REQUIRE_EQ(comps.size(), 1);
  return scan_component(t, comps[0], opts);
}

}  // namespace

TEST_CASE("kind ids round-trip") {
  for (LeakKind k :
       {LeakKind::Fp1RxjsSubscription, LeakKind::Fp2EventListener,
        LeakKind::Fp3aTimeout, LeakKind::Fp3bInterval,
        LeakKind::Fp4AnimationFrame}) {
    LeakKind back;
    REQUIRE(leak_kind_from_id(leak_kind_id(k), &back));
    CHECK_EQ(back, k);
  }
  LeakKind k;
  CHECK_FALSE(leak_kind_from_id("fp9", &k));
  CHECK_EQ(leak_kind_id(LeakKind::Fp3aTimeout), "fp3a");
}

TEST_CASE("fp1: bare subscribe in an angular class is a missing candidate") {
  std::string src =
      "@Component({ selector: 'x' })\n"
      "export class XComponent {\n"
      "  ngOnInit(): void {\n"
      "    this.svc.stream().subscribe(v => this.use(v));\n"
      "  }\n"
      "}\n";
  auto findings = scan_one(src, SourceDialect::Typed);
  REQUIRE_EQ(findings.size(), 1);
  CHECK_EQ(findings[0].kind, LeakKind::Fp1RxjsSubscription);
  CHECK_EQ(findings[0].cleanup, CleanupState::Missing);
  CHECK(findings[0].repairable);
  CHECK_EQ(findings[0].line, 4);
  CHECK_EQ(findings[0].binding.kind, BindingKind::None);
}

TEST_CASE("fp1: chains already bounded by a terminating operator are clean") {
  std::string src =
      "@Component({})\n"
      "export class XComponent {\n"
      "  go(): void {\n"
      "    this.a.pipe(takeUntil(this.destroy$)).subscribe(f);\n"
      "    this.b.pipe(take(1)).subscribe(f);\n"
      "    this.c.pipe(first()).subscribe(f);\n"
      "    this.d.pipe(takeWhile(p)).subscribe(f);\n"
      "  }\n"
      "}\n";
  CHECK(scan_one(src, SourceDialect::Typed).empty());
}

TEST_CASE("fp1: a stored subscription unsubscribed in teardown is present") {
  std::string src =
      "@Component({})\n"
      "export class XComponent {\n"
      "  private sub: any;\n"
      "  ngOnInit(): void {\n"
      "    this.sub = this.svc.stream().subscribe(f);\n"
      "  }\n"
      "  ngOnDestroy(): void {\n"
      "    this.sub.unsubscribe();\n"
      "  }\n"
      "}\n";
  auto findings = scan_one(src, SourceDialect::Typed);
  REQUIRE_EQ(findings.size(), 1);
  CHECK_EQ(findings[0].cleanup, CleanupState::Present);
  CHECK_EQ(findings[0].binding.kind, BindingKind::InstanceProperty);
  CHECK_EQ(findings[0].binding.name, "sub");
}

TEST_CASE("fp1: react classes are scanned only when opted in") {
  std::string src =
      "class W extends React.Component {\n"
      "  componentDidMount() {\n"
      "    store.changes().subscribe(s => this.setState(s));\n"
      "  }\n"
      "}\n";
  CHECK(scan_one(src, SourceDialect::Plain).empty());
  ScanOptions opts;
  opts.fp1_all_classes = true;
  auto findings = scan_one(src, SourceDialect::Plain, opts);
  REQUIRE_EQ(findings.size(), 1);
  CHECK_EQ(findings[0].kind, LeakKind::Fp1RxjsSubscription);
}

TEST_CASE("fp2: window listener without removal is a missing candidate") {
  std::string src =
      "class W extends React.Component {\n"
      "  componentDidMount() {\n"
      "    window.addEventListener('hashchange', this.onHashChange);\n"
      "  }\n"
      "}\n";
  auto findings = scan_one(src, SourceDialect::Plain);
  REQUIRE_EQ(findings.size(), 1);
  const Finding &f = findings[0];
  CHECK_EQ(f.kind, LeakKind::Fp2EventListener);
  CHECK_EQ(f.cleanup, CleanupState::Missing);
  CHECK_EQ(f.target_path, "window");
  CHECK_EQ(f.event_arg, "'hashchange'");
  CHECK_NE(f.handler, kNoNode);
  CHECK_EQ(f.options_arg, "");
}

TEST_CASE("fp2: matching removal in the teardown hook marks it present") {
  std::string src =
      "class W extends React.Component {\n"
      "  componentDidMount() {\n"
      "    window.addEventListener('resize', this.onResize);\n"
      "  }\n"
      "  componentWillUnmount() {\n"
      "    window.removeEventListener('resize', this.onResize);\n"
      "  }\n"
      "}\n";
  auto findings = scan_one(src, SourceDialect::Plain);
  REQUIRE_EQ(findings.size(), 1);
  CHECK_EQ(findings[0].cleanup, CleanupState::Present);
}

TEST_CASE("fp2: removal of a different event does not count") {
  std::string src =
      "class W extends React.Component {\n"
      "  componentDidMount() {\n"
      "    window.addEventListener('resize', this.onResize);\n"
      "  }\n"
      "  componentWillUnmount() {\n"
      "    window.removeEventListener('scroll', this.onResize);\n"
      "  }\n"
      "}\n";
  auto findings = scan_one(src, SourceDialect::Plain);
  REQUIRE_EQ(findings.size(), 1);
  CHECK_EQ(findings[0].cleanup, CleanupState::Missing);
}

TEST_CASE("fp2: long-lived targets include document and this members") {
  std::string src =
      "class W extends React.Component {\n"
      "  componentDidMount() {\n"
      "    document.addEventListener('click', this.onClick);\n"
      "    document.body.addEventListener('scroll', this.onScroll);\n"
      "    this.el.addEventListener('focus', this.onFocus);\n"
      "  }\n"
      "}\n";
  auto findings = scan_one(src, SourceDialect::Plain);
  REQUIRE_EQ(findings.size(), 3);
  CHECK_EQ(findings[0].target_path, "document");
  CHECK_EQ(findings[1].target_path, "document.body");
  CHECK_EQ(findings[2].target_path, "this.el");
}

TEST_CASE("fp2: listeners on locally created nodes are not candidates") {
  std::string src =
      "import { useEffect } from 'react';\n"
      "function Sketch() {\n"
      "  useEffect(() => {\n"
      "    const canvas = document.createElement('canvas');\n"
      "    canvas.addEventListener('pointerdown', onDown);\n"
      "  }, []);\n"
      "  return null;\n"
      "}\n";
  CHECK(scan_one(src, SourceDialect::Plain).empty());
}

TEST_CASE("fp2: free identifiers that look like app-lifetime targets count") {
  std::string src =
      "import { useEffect } from 'react';\n"
      "function Keys() {\n"
      "  useEffect(() => {\n"
      "    emitter.addEventListener('key', handle);\n"
      "  }, []);\n"
      "  return null;\n"
      "}\n";
  auto findings = scan_one(src, SourceDialect::Plain);
  REQUIRE_EQ(findings.size(), 1);
  CHECK_EQ(findings[0].target_path, "emitter");
  CHECK_EQ(findings[0].effect_index, 0);
}

TEST_CASE("fp2: non-literal event names are not matched") {
  std::string src =
      "class W extends React.Component {\n"
      "  componentDidMount() {\n"
      "    window.addEventListener(this.props.eventName, this.onAny);\n"
      "  }\n"
      "}\n";
  CHECK(scan_one(src, SourceDialect::Plain).empty());
}

TEST_CASE("fp2: boolean options argument is carried along") {
  std::string src =
      "class W extends React.Component {\n"
      "  componentDidMount() {\n"
      "    window.addEventListener('wheel', this.onWheel, true);\n"
      "  }\n"
      "}\n";
  auto findings = scan_one(src, SourceDialect::Plain);
  REQUIRE_EQ(findings.size(), 1);
  CHECK_EQ(findings[0].options_arg, "true");
}

TEST_CASE("fp3a/fp3b/fp4: timer and frame acquisitions without release") {
  std::string src =
      "class W extends React.Component {\n"
      "  componentDidMount() {\n"
      "    setTimeout(this.warm, 50);\n"
      "    this.poll = setInterval(this.tick, 1000);\n"
      "    const raf = window.requestAnimationFrame(this.draw);\n"
      "    this.keep(raf);\n"
      "  }\n"
      "}\n";
  auto findings = scan_one(src, SourceDialect::Plain);
  REQUIRE_EQ(findings.size(), 3);
  CHECK_EQ(findings[0].kind, LeakKind::Fp3aTimeout);
  CHECK_EQ(findings[0].binding.kind, BindingKind::None);
  CHECK_EQ(findings[1].kind, LeakKind::Fp3bInterval);
  CHECK_EQ(findings[1].binding.kind, BindingKind::InstanceProperty);
  CHECK_EQ(findings[1].binding.name, "poll");
  CHECK_EQ(findings[2].kind, LeakKind::Fp4AnimationFrame);
  CHECK_EQ(findings[2].binding.kind, BindingKind::LocalVariable);
  CHECK_EQ(findings[2].binding.name, "raf");
}

TEST_CASE("fp3b: clearInterval on the stored handle marks it present") {
  std::string src =
      "class W extends React.Component {\n"
      "  componentDidMount() {\n"
      "    this.poll = setInterval(this.tick, 1000);\n"
      "  }\n"
      "  componentWillUnmount() {\n"
      "    clearInterval(this.poll);\n"
      "  }\n"
      "}\n";
  auto findings = scan_one(src, SourceDialect::Plain);
  REQUIRE_EQ(findings.size(), 1);
  CHECK_EQ(findings[0].cleanup, CleanupState::Present);
}

TEST_CASE("fp3a: clearing inside an effect cleanup marks it present") {
  std::string src =
      "import { useEffect } from 'react';\n"
      "function Warm() {\n"
      "  useEffect(() => {\n"
      "    const id = setTimeout(go, 10);\n"
      "    return () => { clearTimeout(id); };\n"
      "  }, []);\n"
      "  return null;\n"
      "}\n";
  auto findings = scan_one(src, SourceDialect::Plain);
  REQUIRE_EQ(findings.size(), 1);
  CHECK_EQ(findings[0].cleanup, CleanupState::Present);
}

TEST_CASE("acquisitions outside any effect are reported, not repairable") {
  std::string src =
      "import { useEffect } from 'react';\n"
      "function Board() {\n"
      "  setInterval(tick, 500);\n"
      "  useEffect(() => { mount(); }, []);\n"
      "  return null;\n"
      "}\n";
  auto findings = scan_one(src, SourceDialect::Plain);
  REQUIRE_EQ(findings.size(), 1);
  CHECK_EQ(findings[0].cleanup, CleanupState::Missing);
  CHECK_FALSE(findings[0].repairable);
  CHECK_EQ(findings[0].reason, "outside effect");
  CHECK_EQ(findings[0].effect_index, -1);
}

TEST_CASE("kind filtering narrows the scan") {
  std::string src =
      "class W extends React.Component {\n"
      "  componentDidMount() {\n"
      "    window.addEventListener('resize', this.onResize);\n"
      "    this.poll = setInterval(this.tick, 1000);\n"
      "  }\n"
      "}\n";
  ScanOptions opts;
  opts.kinds = {LeakKind::Fp3bInterval};
  auto findings = scan_one(src, SourceDialect::Plain, opts);
  REQUIRE_EQ(findings.size(), 1);
  CHECK_EQ(findings[0].kind, LeakKind::Fp3bInterval);
}

TEST_CASE("new-qualified calls are not acquisitions") {
  std::string src =
      "class W extends React.Component {\n"
      "  componentDidMount() {\n"
      "    const w = new setTimeout(this.x, 1);\n"
      "  }\n"
      "}\n";
  CHECK(scan_one(src, SourceDialect::Plain).empty());
}

TEST_CASE("declaring_scope resolves parameters, lets, and functions") {
  std::string src =
      "import { useEffect } from 'react';\n"
      "function Grid({ el }) {\n"
      "  const local = make();\n"
      "  function helper() {}\n"
      "  useEffect(() => {\n"
      "    el.addEventListener('a', h1);\n"
      "    local.addEventListener('b', h2);\n"
      "    helper.addEventListener('c', h3);\n"
      "    free.addEventListener('d', h4);\n"
      "  }, []);\n"
      "  return null;\n"
      "}\n";
  SyntaxTree t = parse(src, SourceDialect::Plain);
  auto comps = detect_components(t);
  REQUIRE_EQ(comps.size(), 1);
  auto findings = scan_component(t, comps[0], {});
  // Only the free identifier survives as a long-lived target.
  REQUIRE_EQ(findings.size(), 1);
  CHECK_EQ(findings[0].target_path, "free");
}
