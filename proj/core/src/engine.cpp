//===--- engine.cpp - project-wide scan and repair driver ------*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#include "unleak/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "unleak/detect.hpp"
#include "unleak/diff.hpp"
#include "unleak/glob.hpp"
#include "unleak/patch.hpp"
#include "unleak/tree.hpp"

#if defined(_WIN32)
#include <io.h>
#define UNLEAK_ISATTY _isatty(1)
#else
#include <unistd.h>
#define UNLEAK_ISATTY isatty(1)
#endif

namespace unleak {

namespace fs = std::filesystem;

namespace {

bool framework_selected(Framework f, FrameworkFilter filter) {
  switch (filter) {
    case FrameworkFilter::Auto:
      return true;
    case FrameworkFilter::React:
      return f == Framework::ReactClass || f == Framework::ReactFunction;
    case FrameworkFilter::Angular:
      return f == Framework::AngularClass;
  }
  return true;
}

std::string read_file(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::runtime_error("read failed");
  return std::move(buf).str();
}

/// Writes via a sibling temp file and renames over the target, so readers
/// never observe a half-written file.
void write_file_atomic(const fs::path &path, const std::string &text) {
  fs::path tmp = path;
  tmp += ".unleak-tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("write failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ec2;
    fs::remove(tmp, ec2);
    throw std::runtime_error("rename failed: " + ec.message());
  }
}

void add_candidate(FileReport *report, const SyntaxTree &tree,
                   const Component &component, const Finding &finding,
                   CandidateStatus status) {
  CandidateReport row;
  row.kind = finding.kind;
  row.line = finding.line;
  row.column = finding.column;
  row.component = component.name;
  row.binding = finding.binding.kind == BindingKind::None
                    ? std::string("-")
                    : finding.binding.name;
  row.status = status;
  row.offset = tree.node(finding.call).span.start;
  report->candidates.push_back(std::move(row));
}

}  // namespace

FileOutcome repair_file(const std::string &text, const std::string &path,
                        const EngineConfig &config) {
  FileOutcome out;
  out.report.path = path;

  SourceDialect dialect = dialect_from_path(path);
  std::unique_ptr<SyntaxTree> tree;
  try {
    tree = std::make_unique<SyntaxTree>(parse(text, dialect));
  } catch (const ParseError &e) {
    out.report.parse_error = e.what();
    out.new_text = text;
    return out;
  }

  ScanOptions scan_opts;
  scan_opts.fp1_all_classes = config.fp1_scope == Fp1Scope::AllClasses;
  scan_opts.kinds = config.kinds;
  PatchOptions patch_opts;
  patch_opts.operator_import_path = config.operator_import_path;

  std::vector<ImportNeed> imports;
  for (const Component &component : detect_components(*tree)) {
    if (!framework_selected(component.framework, config.framework)) continue;

    std::string fw(framework_name(component.framework));
    if (std::find(out.report.frameworks.begin(), out.report.frameworks.end(),
                  fw) == out.report.frameworks.end())
      out.report.frameworks.push_back(std::move(fw));

    std::vector<Finding> candidates;
    for (Finding &f : scan_component(*tree, component, scan_opts)) {
      if (f.cleanup == CleanupState::Present)
        add_candidate(&out.report, *tree, component, f,
                      CandidateStatus::SkippedExistingCleanup);
      else if (!f.repairable)
        add_candidate(&out.report, *tree, component, f,
                      CandidateStatus::ReportedOnly);
      else
        candidates.push_back(std::move(f));
    }
    if (candidates.empty()) continue;

    RepairPlan plan = plan_repair(*tree, component, candidates, patch_opts);
    for (const Finding &f : plan.repaired)
      add_candidate(&out.report, *tree, component, f,
                    CandidateStatus::Repaired);
    for (const SkippedCandidate &s : plan.skipped)
      add_candidate(&out.report, *tree, component, s.finding,
                    s.reason == "overlap" ? CandidateStatus::SkippedOverlap
                                          : CandidateStatus::ReportedOnly);
    out.edits.append(plan.edits);
    for (ImportNeed &need : plan.imports_added)
      imports.push_back(std::move(need));
  }

  if (!out.edits.empty()) out.edits.append(ensure_imports(*tree, imports));
  out.new_text = out.edits.empty() ? text : apply_edits(text, out.edits);

  std::stable_sort(out.report.candidates.begin(), out.report.candidates.end(),
                   [](const CandidateReport &a, const CandidateReport &b) {
                     return a.offset < b.offset;
                   });
  return out;
}

RepairReport scan_project(const EngineConfig &config) {
  RepairReport report;
  report.root = config.root;

  fs::path root(config.root);
  std::error_code ec;
  if (!fs::is_directory(root, ec))
    throw std::runtime_error("not a directory: " + config.root);

  std::vector<Glob> include, exclude;
  include.reserve(config.include_globs.size());
  for (const std::string &g : config.include_globs) include.emplace_back(g);
  exclude.reserve(config.exclude_globs.size());
  for (const std::string &g : config.exclude_globs) exclude.emplace_back(g);

  struct Entry {
    std::string rel;
    fs::path abs;
  };
  std::vector<Entry> files;
  for (auto it = fs::recursive_directory_iterator(
           root, fs::directory_options::skip_permission_denied, ec);
       it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (ec) break;
    if (!it->is_regular_file(ec)) continue;
    std::string rel = fs::relative(it->path(), root, ec).generic_string();
    if (ec || rel.empty()) continue;
    if (!matches_any(include, rel)) continue;
    if (matches_any(exclude, rel)) continue;
    files.push_back({std::move(rel), it->path()});
  }
  std::sort(files.begin(), files.end(),
            [](const Entry &a, const Entry &b) { return a.rel < b.rel; });

  std::vector<FileReport> results(files.size());
  std::vector<std::string> new_texts(files.size());
  std::vector<char> changed(files.size(), 0);
  std::mutex errors_mutex;
  std::atomic<std::size_t> cursor{0};

  auto worker = [&] {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= files.size()) return;
      try {
        std::string text = read_file(files[i].abs);
        FileOutcome outcome = repair_file(text, files[i].rel, config);
        changed[i] = outcome.new_text != text ? 1 : 0;
        new_texts[i] = std::move(outcome.new_text);
        results[i] = std::move(outcome.report);
      } catch (const std::exception &e) {
        results[i].path = files[i].rel;
        std::lock_guard<std::mutex> lock(errors_mutex);
        report.errors.emplace_back(files[i].rel, e.what());
      }
    }
  };

  unsigned thread_count = std::max(1u, config.workers);
  if (thread_count == 1 || files.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    thread_count = std::min<unsigned>(
        thread_count, static_cast<unsigned>(files.size()));
    pool.reserve(thread_count);
    for (unsigned i = 0; i < thread_count; ++i) pool.emplace_back(worker);
    for (std::thread &t : pool) t.join();
  }

  if (config.mode == RunMode::Write) {
    for (std::size_t i = 0; i < files.size(); ++i) {
      if (!changed[i]) continue;
      try {
        write_file_atomic(files[i].abs, new_texts[i]);
      } catch (const std::exception &e) {
        report.errors.emplace_back(files[i].rel, e.what());
      }
    }
  }

  report.files = std::move(results);
  std::sort(report.errors.begin(), report.errors.end());
  tally_report(&report);
  return report;
}

void emit_report(const RepairReport &report, const EngineConfig &config,
                 std::ostream &out) {
  if (config.emit_diff && config.mode != RunMode::Write) {
    fs::path root(config.root);
    for (const FileReport &file : report.files) {
      if (!file.parse_error.empty()) continue;
      bool repaired = std::any_of(
          file.candidates.begin(), file.candidates.end(),
          [](const CandidateReport &c) {
            return c.status == CandidateStatus::Repaired;
          });
      if (!repaired) continue;
      try {
        std::string text = read_file(root / file.path);
        FileOutcome outcome = repair_file(text, file.path, config);
        out << unified_diff(text, outcome.new_text, file.path);
      } catch (const std::exception &) {
        // The scan pass already recorded unreadable files.
      }
    }
  }

  bool color = &out == &std::cout && UNLEAK_ISATTY &&
               std::getenv("NO_COLOR") == nullptr;
  out << report_summary(report, color);

  if (!config.json_out.empty()) {
    std::ofstream json(config.json_out, std::ios::binary | std::ios::trunc);
    if (!json)
      throw std::runtime_error("cannot write JSON report: " + config.json_out);
    std::string body = report_to_json(report);
    json.write(body.data(), static_cast<std::streamsize>(body.size()));
  }
}

int exit_code(const RepairReport &report, const EngineConfig &config) {
  if (config.mode != RunMode::Check) return 0;
  for (const FileReport &file : report.files)
    for (const CandidateReport &c : file.candidates)
      if (c.status != CandidateStatus::SkippedExistingCleanup) return 1;
  return 0;
}

}  // namespace unleak
