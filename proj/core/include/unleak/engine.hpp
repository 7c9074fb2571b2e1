//===--- engine.hpp - project-wide scan and repair driver ------*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "unleak/edits.hpp"
#include "unleak/report.hpp"
#include "unleak/scan.hpp"

namespace unleak {

enum class RunMode : std::uint8_t {
  Write,   // apply repairs in place
  DryRun,  // compute everything, write nothing
  Check,   // like DryRun, but exit_code signals missing cleanup
};

enum class FrameworkFilter : std::uint8_t { Auto, React, Angular };

/// Whether subscription repair applies to every detected class component or
/// only Angular ones (React class components rarely hold rxjs streams).
enum class Fp1Scope : std::uint8_t { AngularOnly, AllClasses };

struct EngineConfig {
  std::string root = ".";
  std::vector<std::string> include_globs = {"**/*.{js,jsx,ts,tsx}"};
  std::vector<std::string> exclude_globs = {
      "**/node_modules/**", "**/dist/**", "**/build/**", "**/*.d.ts"};
  std::vector<LeakKind> kinds;  // empty selects every kind
  FrameworkFilter framework = FrameworkFilter::Auto;
  Fp1Scope fp1_scope = Fp1Scope::AngularOnly;
  std::string operator_import_path = "rxjs";
  RunMode mode = RunMode::Write;
  bool emit_diff = false;
  std::string json_out;  // path for the JSON report; empty disables it
  unsigned workers = 1;  // repair_file threads; output is schedule-invariant
};

/// Result of repairing one file's text in memory.
struct FileOutcome {
  std::string new_text;  // equals the input when nothing applied
  FileReport report;
  EditSet edits;  // the applied edits, in original-text coordinates
};

/// Parses, scans, and plans repairs for one file. A parse failure sets
/// `report.parse_error` and returns the text unchanged; it never throws.
/// `path` selects the dialect and becomes `report.path` verbatim.
FileOutcome repair_file(const std::string &text, const std::string &path,
                        const EngineConfig &config);

/// Discovers files under `config.root` (include minus exclude globs,
/// lexicographic), repairs each, and writes changed files back atomically
/// when the mode is Write. The returned report is identical across modes
/// and worker counts. Throws std::runtime_error when root is not a
/// directory; per-file IO failures land in `report.errors` instead.
RepairReport scan_project(const EngineConfig &config);

/// Renders the human summary (and per-file diffs when `config.emit_diff`
/// and the mode is not Write) to `out`, and writes the JSON report to
/// `config.json_out` when set. ANSI color is used only when `out` is a
/// terminal-attached stdout and NO_COLOR is unset.
void emit_report(const RepairReport &report, const EngineConfig &config,
                 std::ostream &out);

/// 0 normally; 1 in Check mode when any candidate lacks existing cleanup.
int exit_code(const RepairReport &report, const EngineConfig &config);

}  // namespace unleak
