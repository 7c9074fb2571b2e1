//===--- eval.hpp - labeled-corpus evaluation ------------------*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#pragma once

#include <array>
#include <string>
#include <vector>

#include "unleak/engine.hpp"
#include "unleak/report.hpp"
#include "unleak/scan.hpp"

namespace unleak {

/// One expected candidate in a corpus case.
struct CaseLabel {
  LeakKind kind = LeakKind::Fp1RxjsSubscription;
  std::uint32_t line = 0;
  CandidateStatus status = CandidateStatus::Repaired;
};

/// One corpus case: an input file, the byte-exact expected output, and the
/// candidates the scanner must report. Kept as
/// `<root>/<kind>/<framework>/<case>/` with input.<ext>, expected.<ext>,
/// and meta.json.
struct CorpusCase {
  std::string id;
  std::vector<LeakKind> leak_kinds;
  std::string framework;  // "react" | "angular"
  std::string input_path;
  std::string expected_path;
  std::vector<CaseLabel> labels;
  // Per-case engine knobs, from optional meta.json fields.
  bool fp1_all_classes = false;
  std::string operator_import_path = "rxjs";
};

struct KindCounts {
  int tp = 0;
  int fp = 0;
  int fn = 0;
};

struct CaseFailure {
  std::string case_id;
  std::string detail;
};

struct CorpusMetrics {
  int cases = 0;
  std::array<KindCounts, kLeakKindCount> counts{};
  std::vector<CaseFailure> golden_mismatches;
  std::vector<CaseFailure> idempotence_failures;
  std::vector<CaseFailure> reparse_failures;
  std::vector<CaseFailure> load_errors;
};

/// Cases under `corpus_root`, discovered by their meta.json files and
/// sorted by id. Malformed metadata throws std::runtime_error.
std::vector<CorpusCase> load_corpus(const std::string &corpus_root);

/// Repairs every case and scores it: candidates against labels (matched on
/// kind, line, and status), output against the golden bytes, a second run
/// for idempotence, and a reparse of the repaired text.
CorpusMetrics run_corpus(const std::string &corpus_root);

/// Applies `config` to `project_root` twice in Write mode; true when the
/// second pass repairs nothing.
bool check_idempotence(const std::string &project_root, EngineConfig config);

/// TP / (TP + FP); 1.0 when the denominator is zero.
double precision(const KindCounts &counts);
/// TP / (TP + FN); 1.0 when the denominator is zero.
double recall(const KindCounts &counts);

/// True when every kind scores 1.00 precision and recall and no golden,
/// idempotence, reparse, or load failures were recorded.
bool corpus_passed(const CorpusMetrics &metrics);

/// Per-kind score table plus one verdict line per suite check.
std::string summarize(const CorpusMetrics &metrics);

}  // namespace unleak
