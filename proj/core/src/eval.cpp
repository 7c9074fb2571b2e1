//===--- eval.cpp - labeled-corpus evaluation ------------------*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#include "unleak/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace unleak {

namespace fs = std::filesystem;

namespace {

constexpr LeakKind kAllKinds[kLeakKindCount] = {
    LeakKind::Fp1RxjsSubscription, LeakKind::Fp2EventListener,
    LeakKind::Fp3aTimeout,         LeakKind::Fp3bInterval,
    LeakKind::Fp4AnimationFrame,
};

std::string read_file(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

fs::path sibling_source(const fs::path &dir, std::string_view stem) {
  for (const char *ext : {".js", ".jsx", ".ts", ".tsx"}) {
    fs::path p = dir / (std::string(stem) + ext);
    if (fs::exists(p)) return p;
  }
  throw std::runtime_error("no " + std::string(stem) +
                           ".{js,jsx,ts,tsx} in " + dir.string());
}

CorpusCase load_case(const fs::path &dir) {
  CorpusCase c;
  nlohmann::json meta;
  {
    std::ifstream in(dir / "meta.json");
    if (!in) throw std::runtime_error("cannot read " + (dir / "meta.json").string());
    in >> meta;
  }
  c.id = meta.at("id").get<std::string>();
  for (const auto &k : meta.at("kinds")) {
    LeakKind kind;
    if (!leak_kind_from_id(k.get<std::string>(), &kind))
      throw std::runtime_error(c.id + ": unknown kind " + k.get<std::string>());
    c.leak_kinds.push_back(kind);
  }
  c.framework = meta.at("framework").get<std::string>();
  for (const auto &l : meta.at("labels")) {
    CaseLabel label;
    std::string kind_id = l.at("kind").get<std::string>();
    if (!leak_kind_from_id(kind_id, &label.kind))
      throw std::runtime_error(c.id + ": unknown label kind " + kind_id);
    label.line = l.at("line").get<std::uint32_t>();
    std::string status = l.at("status").get<std::string>();
    if (!candidate_status_from_name(status, &label.status))
      throw std::runtime_error(c.id + ": unknown label status " + status);
    c.labels.push_back(label);
  }
  if (meta.contains("fp1_scope"))
    c.fp1_all_classes = meta["fp1_scope"].get<std::string>() == "all-classes";
  if (meta.contains("operator_import"))
    c.operator_import_path = meta["operator_import"].get<std::string>();

  c.input_path = sibling_source(dir, "input").string();
  c.expected_path = sibling_source(dir, "expected").string();
  return c;
}

EngineConfig case_config(const CorpusCase &c) {
  EngineConfig config;
  config.fp1_scope =
      c.fp1_all_classes ? Fp1Scope::AllClasses : Fp1Scope::AngularOnly;
  config.operator_import_path = c.operator_import_path;
  config.mode = RunMode::DryRun;
  return config;
}

std::string score_case(const CorpusCase &c, CorpusMetrics *m) {
  EngineConfig config = case_config(c);
  std::string input = read_file(c.input_path);
  std::string expected = read_file(c.expected_path);
  // Candidates are located against the input file; the path only has to
  // carry the right extension for dialect selection.
  std::string rel = fs::path(c.input_path).filename().string();

  FileOutcome first = repair_file(input, rel, config);
  if (!first.report.parse_error.empty())
    m->load_errors.push_back(
        {c.id, "input parse error: " + first.report.parse_error});

  // Greedy one-to-one matching on (kind, line, status).
  std::vector<bool> used(c.labels.size(), false);
  for (const CandidateReport &cand : first.report.candidates) {
    bool matched = false;
    for (std::size_t i = 0; i < c.labels.size(); ++i) {
      const CaseLabel &label = c.labels[i];
      if (used[i] || label.kind != cand.kind || label.line != cand.line ||
          label.status != cand.status)
        continue;
      used[i] = true;
      matched = true;
      break;
    }
    KindCounts &k = m->counts[static_cast<std::size_t>(cand.kind)];
    if (matched)
      ++k.tp;
    else
      ++k.fp;
  }
  for (std::size_t i = 0; i < c.labels.size(); ++i)
    if (!used[i]) ++m->counts[static_cast<std::size_t>(c.labels[i].kind)].fn;

  if (first.new_text != expected) {
    std::size_t at = 0;
    std::size_t limit = std::min(first.new_text.size(), expected.size());
    while (at < limit && first.new_text[at] == expected[at]) ++at;
    m->golden_mismatches.push_back(
        {c.id, "output diverges from golden at byte " + std::to_string(at)});
  }

  FileOutcome second = repair_file(first.new_text, rel, config);
  if (!second.report.parse_error.empty()) {
    m->reparse_failures.push_back(
        {c.id, "repaired output does not parse: " + second.report.parse_error});
    return first.new_text;
  }
  bool rescored = std::any_of(
      second.report.candidates.begin(), second.report.candidates.end(),
      [](const CandidateReport &cand) {
        return cand.status == CandidateStatus::Repaired;
      });
  if (rescored || second.new_text != first.new_text)
    m->idempotence_failures.push_back(
        {c.id, rescored ? "second pass repairs again"
                        : "second pass changes bytes"});
  return first.new_text;
}

}  // namespace

std::vector<CorpusCase> load_corpus(const std::string &corpus_root) {
  fs::path root(corpus_root);
  if (!fs::is_directory(root))
    throw std::runtime_error("not a directory: " + corpus_root);
  std::vector<CorpusCase> cases;
  for (const auto &entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file() || entry.path().filename() != "meta.json")
      continue;
    cases.push_back(load_case(entry.path().parent_path()));
  }
  std::sort(cases.begin(), cases.end(),
            [](const CorpusCase &a, const CorpusCase &b) { return a.id < b.id; });
  return cases;
}

CorpusMetrics run_corpus(const std::string &corpus_root) {
  CorpusMetrics metrics;
  std::vector<CorpusCase> cases;
  try {
    cases = load_corpus(corpus_root);
  } catch (const std::exception &e) {
    metrics.load_errors.push_back({"<corpus>", e.what()});
    return metrics;
  }
  for (const CorpusCase &c : cases) {
    ++metrics.cases;
    try {
      score_case(c, &metrics);
    } catch (const std::exception &e) {
      metrics.load_errors.push_back({c.id, e.what()});
    }
  }
  return metrics;
}

bool check_idempotence(const std::string &project_root, EngineConfig config) {
  config.root = project_root;
  config.mode = RunMode::Write;
  scan_project(config);
  RepairReport second = scan_project(config);
  for (const KindTotals &t : second.totals)
    if (t.repaired != 0) return false;
  return true;
}

double precision(const KindCounts &counts) {
  int denom = counts.tp + counts.fp;
  return denom == 0 ? 1.0 : static_cast<double>(counts.tp) / denom;
}

double recall(const KindCounts &counts) {
  int denom = counts.tp + counts.fn;
  return denom == 0 ? 1.0 : static_cast<double>(counts.tp) / denom;
}

bool corpus_passed(const CorpusMetrics &metrics) {
  for (const KindCounts &k : metrics.counts)
    if (precision(k) != 1.0 || recall(k) != 1.0) return false;
  return metrics.golden_mismatches.empty() &&
         metrics.idempotence_failures.empty() &&
         metrics.reparse_failures.empty() && metrics.load_errors.empty();
}

std::string summarize(const CorpusMetrics &metrics) {
  std::string out;
  char row[128];
  std::snprintf(row, sizeof(row), "%d cases\n", metrics.cases);
  out += row;
  out += "kind    tp   fp   fn  precision  recall\n";
  for (LeakKind kind : kAllKinds) {
    const KindCounts &k = metrics.counts[static_cast<std::size_t>(kind)];
    std::snprintf(row, sizeof(row), "%-4s  %4d %4d %4d       %.2f    %.2f\n",
                  std::string(leak_kind_id(kind)).c_str(), k.tp, k.fp, k.fn,
                  precision(k), recall(k));
    out += row;
  }
  auto verdict = [&](const char *name, const std::vector<CaseFailure> &fails) {
    std::snprintf(row, sizeof(row), "%-12s %s\n", name,
                  fails.empty() ? "pass" : "FAIL");
    out += row;
    for (const CaseFailure &f : fails) {
      out += "  ";
      out += f.case_id;
      out += ": ";
      out += f.detail;
      out += '\n';
    }
  };
  verdict("golden", metrics.golden_mismatches);
  verdict("idempotence", metrics.idempotence_failures);
  verdict("reparse", metrics.reparse_failures);
  verdict("load", metrics.load_errors);
  return out;
}

}  // namespace unleak
