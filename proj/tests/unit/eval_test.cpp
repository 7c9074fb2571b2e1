//===--- eval_test.cpp - corpus scoring ------------------------*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#include "unleak/eval.hpp"

#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"

using namespace unleak;
namespace fs = std::filesystem;

namespace {

struct TempCorpus {
  fs::path root;

  TempCorpus() {
    static int n = 0;
    root = fs::temp_directory_path() / ("unleak-corpus-" + std::to_string(n++));
    fs::create_directories(root);
  }
  ~TempCorpus() { fs::remove_all(root); }

  void add_case(const std::string &rel, const std::string &input,
                const std::string &expected, const std::string &meta,
                const char *ext = ".jsx") {
    fs::path dir = root / rel;
    fs::create_directories(dir);
    std::ofstream(dir / (std::string("input") + ext)) << input;
    std::ofstream(dir / (std::string("expected") + ext)) << expected;
    std::ofstream(dir / "meta.json") << meta;
  }
};

const char *kLeaky =
    "class W extends React.Component {\n"
    "  componentDidMount() {\n"
    "    window.addEventListener('resize', this.onResize);\n"
    "  }\n"
    "}\n";

const char *kRepaired =
    "class W extends React.Component {\n"
    "  componentDidMount() {\n"
    "    window.addEventListener('resize', this.onResize);\n"
    "  }\n"
    "  componentWillUnmount() {\n"
    "    window.removeEventListener('resize', this.onResize);\n"
    "  }\n"
    "}\n";

const char *kMeta =
    "{\n"
    "  \"id\": \"fp2-resize\",\n"
    "  \"kinds\": [\"fp2\"],\n"
    "  \"framework\": \"react\",\n"
    "  \"labels\": [{ \"kind\": \"fp2\", \"line\": 3, \"status\": \"repaired\" }]\n"
    "}\n";

}  // namespace

TEST_CASE("load_corpus reads cases sorted by id") {
  TempCorpus c;
  c.add_case("fp2/react/resize", kLeaky, kRepaired, kMeta);
  c.add_case("clean/react/quiet", "const a = 1;\n", "const a = 1;\n",
             "{ \"id\": \"clean-quiet\", \"kinds\": [], \"framework\": "
             "\"react\", \"labels\": [] }\n",
             ".js");
  auto cases = load_corpus(c.root.string());
  REQUIRE_EQ(cases.size(), 2);
  CHECK_EQ(cases[0].id, "clean-quiet");
  CHECK_EQ(cases[1].id, "fp2-resize");
  REQUIRE_EQ(cases[1].labels.size(), 1);
  CHECK_EQ(cases[1].labels[0].kind, LeakKind::Fp2EventListener);
  CHECK_EQ(cases[1].labels[0].line, 3);
  CHECK_EQ(cases[1].labels[0].status, CandidateStatus::Repaired);
  CHECK_EQ(cases[1].framework, "react");
  CHECK_FALSE(cases[1].fp1_all_classes);
}

TEST_CASE("a matching corpus scores perfect precision and recall") {
  TempCorpus c;
  c.add_case("fp2/react/resize", kLeaky, kRepaired, kMeta);
  CorpusMetrics m = run_corpus(c.root.string());
  CHECK_EQ(m.cases, 1);
  const KindCounts &k =
      m.counts[static_cast<std::size_t>(LeakKind::Fp2EventListener)];
  CHECK_EQ(k.tp, 1);
  CHECK_EQ(k.fp, 0);
  CHECK_EQ(k.fn, 0);
  CHECK(m.golden_mismatches.empty());
  CHECK(m.idempotence_failures.empty());
  CHECK(m.reparse_failures.empty());
  CHECK(corpus_passed(m));
}

TEST_CASE("golden divergence is reported with the first differing byte") {
  TempCorpus c;
  std::string wrong = kRepaired;
  wrong.replace(wrong.find("resize"), 6, "scroll");
  c.add_case("fp2/react/resize", kLeaky, wrong, kMeta);
  CorpusMetrics m = run_corpus(c.root.string());
  REQUIRE_EQ(m.golden_mismatches.size(), 1);
  CHECK_EQ(m.golden_mismatches[0].case_id, "fp2-resize");
  CHECK_FALSE(corpus_passed(m));
}

TEST_CASE("an unexpected candidate counts as a false positive") {
  TempCorpus c;
  std::string meta_no_labels =
      "{ \"id\": \"fp2-unlabeled\", \"kinds\": [\"fp2\"], \"framework\": "
      "\"react\", \"labels\": [] }\n";
  c.add_case("fp2/react/unlabeled", kLeaky, kRepaired, meta_no_labels);
  CorpusMetrics m = run_corpus(c.root.string());
  const KindCounts &k =
      m.counts[static_cast<std::size_t>(LeakKind::Fp2EventListener)];
  CHECK_EQ(k.tp, 0);
  CHECK_EQ(k.fp, 1);
  CHECK_FALSE(corpus_passed(m));
}

TEST_CASE("a label with no candidate counts as a false negative") {
  TempCorpus c;
  std::string clean = "const quiet = 1;\n";
  std::string meta =
      "{ \"id\": \"fp3a-ghost\", \"kinds\": [\"fp3a\"], \"framework\": "
      "\"react\", \"labels\": [{ \"kind\": \"fp3a\", \"line\": 1, \"status\": "
      "\"repaired\" }] }\n";
  c.add_case("fp3a/react/ghost", clean, clean, meta, ".js");
  CorpusMetrics m = run_corpus(c.root.string());
  const KindCounts &k =
      m.counts[static_cast<std::size_t>(LeakKind::Fp3aTimeout)];
  CHECK_EQ(k.fn, 1);
  CHECK_EQ(recall(k), 0.0);
  CHECK_FALSE(corpus_passed(m));
}

TEST_CASE("precision and recall degrade to 1.0 on empty denominators") {
  KindCounts zero;
  CHECK_EQ(precision(zero), 1.0);
  CHECK_EQ(recall(zero), 1.0);
}

TEST_CASE("summarize renders scores and verdicts") {
  TempCorpus c;
  c.add_case("fp2/react/resize", kLeaky, kRepaired, kMeta);
  CorpusMetrics m = run_corpus(c.root.string());
  std::string text = summarize(m);
  CHECK(text.find("1 cases") != std::string::npos);
  CHECK(text.find("fp2") != std::string::npos);
  CHECK(text.find("1.00") != std::string::npos);
  CHECK(text.find("golden       pass") != std::string::npos);
  CHECK(text.find("idempotence  pass") != std::string::npos);
  CHECK(text.find("reparse      pass") != std::string::npos);
}

TEST_CASE("an empty corpus passes vacuously") {
  TempCorpus c;
  CorpusMetrics m = run_corpus(c.root.string());
  CHECK_EQ(m.cases, 0);
  CHECK(corpus_passed(m));
}

TEST_CASE("malformed metadata is a load error, not a crash") {
  TempCorpus c;
  c.add_case("fp2/react/bad", kLeaky, kRepaired,
             "{ \"id\": \"bad\", \"kinds\": [\"fp9\"], \"framework\": "
             "\"react\", \"labels\": [] }\n");
  CorpusMetrics m = run_corpus(c.root.string());
  REQUIRE_EQ(m.load_errors.size(), 1);
  CHECK_FALSE(corpus_passed(m));
}

TEST_CASE("check_idempotence repairs a project to a fixed point") {
  TempCorpus p;  // reused as a plain temp dir
  std::ofstream(p.root / "w.jsx") << kLeaky;
  EngineConfig config;
  CHECK(check_idempotence(p.root.string(), config));
  std::ifstream in(p.root / "w.jsx");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK_EQ(text, kRepaired);
}

TEST_CASE("per-case engine knobs come from the metadata") {
  TempCorpus c;
  std::string input =
      "class S extends React.Component {\n"
      "  componentDidMount() {\n"
      "    bus.events().subscribe(e => this.on(e));\n"
      "  }\n"
      "}\n";
  std::string meta =
      "{ \"id\": \"fp1-react-class\", \"kinds\": [\"fp1\"], \"framework\": "
      "\"react\", \"fp1_scope\": \"all-classes\", \"labels\": [{ \"kind\": "
      "\"fp1\", \"line\": 3, \"status\": \"repaired\" }] }\n";
  // With the default angular-only scope this case would be a false
  // negative; the meta flag widens it.
  std::string expected =
      "import { Subject, takeUntil } from 'rxjs';\n"
      "class S extends React.Component {\n"
      "  constructor() {\n"
      "    super(...arguments);\n"
      "    this.destroy$ = new Subject();\n"
      "  }\n"
      "  componentDidMount() {\n"
      "    bus.events().pipe(takeUntil(this.destroy$)).subscribe(e => "
      "this.on(e));\n"
      "  }\n"
      "  componentWillUnmount() {\n"
      "    this.destroy$.next();\n"
      "    this.destroy$.complete();\n"
      "  }\n"
      "}\n";
  c.add_case("fp1/react/classic", input, expected, meta);
  CorpusMetrics m = run_corpus(c.root.string());
  CHECK(m.golden_mismatches.empty());
  CHECK(corpus_passed(m));
}
