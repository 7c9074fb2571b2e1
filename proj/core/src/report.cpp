//===--- report.cpp - per-run result model and rendering -------*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#include "unleak/report.hpp"

#include <algorithm>
#include <cstdio>

#include "json.hpp"

namespace unleak {

namespace {

constexpr LeakKind kAllKinds[kLeakKindCount] = {
    LeakKind::Fp1RxjsSubscription, LeakKind::Fp2EventListener,
    LeakKind::Fp3aTimeout,         LeakKind::Fp3bInterval,
    LeakKind::Fp4AnimationFrame,
};

}  // namespace

std::string_view candidate_status_name(CandidateStatus status) {
  switch (status) {
    case CandidateStatus::Repaired:
      return "repaired";
    case CandidateStatus::SkippedExistingCleanup:
      return "skipped_existing_cleanup";
    case CandidateStatus::ReportedOnly:
      return "reported_only";
    case CandidateStatus::SkippedOverlap:
      return "skipped_overlap";
  }
  return "reported_only";
}

bool candidate_status_from_name(std::string_view name, CandidateStatus *out) {
  for (CandidateStatus status :
       {CandidateStatus::Repaired, CandidateStatus::SkippedExistingCleanup,
        CandidateStatus::ReportedOnly, CandidateStatus::SkippedOverlap}) {
    if (candidate_status_name(status) == name) {
      *out = status;
      return true;
    }
  }
  return false;
}

void tally_report(RepairReport *report) {
  report->totals = {};
  for (const FileReport &file : report->files) {
    for (const CandidateReport &c : file.candidates) {
      KindTotals &t = report->totals[static_cast<std::size_t>(c.kind)];
      ++t.detected;
      if (c.status == CandidateStatus::Repaired)
        ++t.repaired;
      else
        ++t.skipped;
    }
  }
}

std::string report_to_json(const RepairReport &report) {
  nlohmann::ordered_json doc;
  doc["version"] = report.version;
  doc["root"] = report.root;
  doc["files"] = nlohmann::ordered_json::array();
  for (const FileReport &file : report.files) {
    nlohmann::ordered_json f;
    f["path"] = file.path;
    f["framework"] = file.frameworks;
    f["candidates"] = nlohmann::ordered_json::array();
    for (const CandidateReport &c : file.candidates) {
      nlohmann::ordered_json cj;
      cj["kind"] = std::string(leak_kind_id(c.kind));
      cj["line"] = c.line;
      cj["column"] = c.column;
      cj["component"] = c.component;
      cj["binding"] = c.binding;
      cj["status"] = std::string(candidate_status_name(c.status));
      f["candidates"].push_back(std::move(cj));
    }
    if (file.parse_error.empty())
      f["parse_error"] = nullptr;
    else
      f["parse_error"] = file.parse_error;
    doc["files"].push_back(std::move(f));
  }
  doc["totals"] = nlohmann::ordered_json::object();
  for (LeakKind kind : kAllKinds) {
    const KindTotals &t = report.totals[static_cast<std::size_t>(kind)];
    nlohmann::ordered_json tj;
    tj["detected"] = t.detected;
    tj["repaired"] = t.repaired;
    tj["skipped"] = t.skipped;
    doc["totals"][std::string(leak_kind_id(kind))] = std::move(tj);
  }
  doc["errors"] = nlohmann::ordered_json::array();
  for (const auto &err : report.errors) {
    nlohmann::ordered_json ej;
    ej["path"] = err.first;
    ej["message"] = err.second;
    doc["errors"].push_back(std::move(ej));
  }
  return doc.dump(2) + "\n";
}

std::string report_summary(const RepairReport &report, bool color) {
  const char *green = color ? "\x1b[32m" : "";
  const char *red = color ? "\x1b[31m" : "";
  const char *reset = color ? "\x1b[0m" : "";

  std::string out;
  for (const FileReport &file : report.files) {
    bool repaired = std::any_of(
        file.candidates.begin(), file.candidates.end(),
        [](const CandidateReport &c) {
          return c.status == CandidateStatus::Repaired;
        });
    if (repaired) {
      out += green;
      out += "repaired";
      out += reset;
      out += ' ';
      out += file.path;
      out += '\n';
    }
  }
  for (const FileReport &file : report.files) {
    if (!file.parse_error.empty()) {
      out += red;
      out += "parse error";
      out += reset;
      out += ' ';
      out += file.path;
      out += ": ";
      out += file.parse_error;
      out += '\n';
    }
  }
  for (const auto &err : report.errors) {
    out += red;
    out += "error";
    out += reset;
    out += ' ';
    out += err.first;
    out += ": ";
    out += err.second;
    out += '\n';
  }

  out += "kind  detected  repaired  skipped\n";
  int detected = 0, repaired = 0, skipped = 0;
  char row[96];
  for (LeakKind kind : kAllKinds) {
    const KindTotals &t = report.totals[static_cast<std::size_t>(kind)];
    std::snprintf(row, sizeof(row), "%-4s  %8d  %8d  %7d\n",
                  std::string(leak_kind_id(kind)).c_str(), t.detected,
                  t.repaired, t.skipped);
    out += row;
    detected += t.detected;
    repaired += t.repaired;
    skipped += t.skipped;
  }
  std::snprintf(row, sizeof(row), "%d detected, %d repaired, %d skipped\n",
                detected, repaired, skipped);
  out += row;
  return out;
}

}  // namespace unleak
