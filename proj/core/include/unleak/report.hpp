//===--- report.hpp - per-run result model and rendering -------*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "unleak/scan.hpp"

namespace unleak {

enum class CandidateStatus : std::uint8_t {
  Repaired,
  SkippedExistingCleanup,
  ReportedOnly,
  SkippedOverlap,
};

std::string_view candidate_status_name(CandidateStatus status);
bool candidate_status_from_name(std::string_view name, CandidateStatus *out);

/// One acquisition the scanner surfaced, with the fate the planner gave it.
struct CandidateReport {
  LeakKind kind = LeakKind::Fp1RxjsSubscription;
  std::uint32_t line = 0;
  std::uint32_t column = 0;
  std::string component;
  std::string binding = "-";
  CandidateStatus status = CandidateStatus::ReportedOnly;
  std::size_t offset = 0;  // source ordering key; not serialized
};

struct FileReport {
  std::string path;  // project-relative, '/'-separated
  std::vector<std::string> frameworks;
  std::vector<CandidateReport> candidates;
  std::string parse_error;  // empty when the file parsed
};

struct KindTotals {
  int detected = 0;
  int repaired = 0;
  int skipped = 0;
};

constexpr std::size_t kLeakKindCount = 5;

struct RepairReport {
  int version = 1;
  std::string root;
  std::vector<FileReport> files;  // sorted by path
  std::array<KindTotals, kLeakKindCount> totals{};
  std::vector<std::pair<std::string, std::string>> errors;  // path, message
};

/// Recomputes `totals` from the file list.
void tally_report(RepairReport *report);

/// The report as a JSON document: fixed key order, two-space indent, UTF-8,
/// trailing newline.
std::string report_to_json(const RepairReport &report);

/// Human-readable run summary: one line per repaired file, a per-kind totals
/// table, and a closing "N detected, N repaired, N skipped" line. ANSI color
/// only when `color` is set.
std::string report_summary(const RepairReport &report, bool color);

}  // namespace unleak
