//===--- report_test.cpp - result model and serialization ------*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#include "unleak/report.hpp"

#include <string>

#include "doctest.h"

using namespace unleak;

namespace {

RepairReport sample_report() {
  RepairReport report;
  report.root = "/work/app";

  FileReport a;
  a.path = "src/clock.ts";
  a.frameworks = {"angular-class"};
  CandidateReport c1;
  c1.kind = LeakKind::Fp3bInterval;
  c1.line = 6;
  c1.column = 5;
  c1.component = "ClockComponent";
  c1.binding = "id";
  c1.status = CandidateStatus::Repaired;
  CandidateReport c2;
  c2.kind = LeakKind::Fp1RxjsSubscription;
  c2.line = 9;
  c2.column = 5;
  c2.component = "ClockComponent";
  c2.status = CandidateStatus::SkippedExistingCleanup;
  a.candidates = {c1, c2};

  FileReport b;
  b.path = "src/broken.js";
  b.parse_error = "3:1: unbalanced '{'";

  report.files = {a, b};
  report.errors = {{"src/locked.ts", "cannot open for reading"}};
  tally_report(&report);
  return report;
}

}  // namespace

TEST_CASE("status names round-trip") {
  CHECK_EQ(candidate_status_name(CandidateStatus::Repaired), "repaired");
  CHECK_EQ(candidate_status_name(CandidateStatus::SkippedExistingCleanup),
           "skipped_existing_cleanup");
  CHECK_EQ(candidate_status_name(CandidateStatus::ReportedOnly),
           "reported_only");
  CHECK_EQ(candidate_status_name(CandidateStatus::SkippedOverlap),
           "skipped_overlap");
  for (CandidateStatus s :
       {CandidateStatus::Repaired, CandidateStatus::SkippedExistingCleanup,
        CandidateStatus::ReportedOnly, CandidateStatus::SkippedOverlap}) {
    CandidateStatus back;
    REQUIRE(candidate_status_from_name(candidate_status_name(s), &back));
    CHECK_EQ(back, s);
  }
  CandidateStatus s;
  CHECK_FALSE(candidate_status_from_name("fixed", &s));
}

TEST_CASE("tally_report sums candidates per kind") {
  RepairReport report = sample_report();
  const KindTotals &fp3b =
      report.totals[static_cast<std::size_t>(LeakKind::Fp3bInterval)];
  CHECK_EQ(fp3b.detected, 1);
  CHECK_EQ(fp3b.repaired, 1);
  CHECK_EQ(fp3b.skipped, 0);
  const KindTotals &fp1 =
      report.totals[static_cast<std::size_t>(LeakKind::Fp1RxjsSubscription)];
  CHECK_EQ(fp1.detected, 1);
  CHECK_EQ(fp1.repaired, 0);
  CHECK_EQ(fp1.skipped, 1);
  const KindTotals &fp2 =
      report.totals[static_cast<std::size_t>(LeakKind::Fp2EventListener)];
  CHECK_EQ(fp2.detected, 0);
}

TEST_CASE("json serialization has a fixed shape") {
  std::string json = report_to_json(sample_report());
  CHECK_EQ(json,
           "{\n"
           "  \"version\": 1,\n"
           "  \"root\": \"/work/app\",\n"
           "  \"files\": [\n"
           "    {\n"
           "      \"path\": \"src/clock.ts\",\n"
           "      \"framework\": [\n"
           "        \"angular-class\"\n"
           "      ],\n"
           "      \"candidates\": [\n"
           "        {\n"
           "          \"kind\": \"fp3b\",\n"
           "          \"line\": 6,\n"
           "          \"column\": 5,\n"
           "          \"component\": \"ClockComponent\",\n"
           "          \"binding\": \"id\",\n"
           "          \"status\": \"repaired\"\n"
           "        },\n"
           "        {\n"
           "          \"kind\": \"fp1\",\n"
           "          \"line\": 9,\n"
           "          \"column\": 5,\n"
           "          \"component\": \"ClockComponent\",\n"
           "          \"binding\": \"-\",\n"
           "          \"status\": \"skipped_existing_cleanup\"\n"
           "        }\n"
           "      ],\n"
           "      \"parse_error\": null\n"
           "    },\n"
           "    {\n"
           "      \"path\": \"src/broken.js\",\n"
           "      \"framework\": [],\n"
           "      \"candidates\": [],\n"
           "      \"parse_error\": \"3:1: unbalanced '{'\"\n"
           "    }\n"
           "  ],\n"
           "  \"totals\": {\n"
           "    \"fp1\": {\n"
           "      \"detected\": 1,\n"
           "      \"repaired\": 0,\n"
           "      \"skipped\": 1\n"
           "    },\n"
           "    \"fp2\": {\n"
           "      \"detected\": 0,\n"
           "      \"repaired\": 0,\n"
           "      \"skipped\": 0\n"
           "    },\n"
           "    \"fp3a\": {\n"
           "      \"detected\": 0,\n"
           "      \"repaired\": 0,\n"
           "      \"skipped\": 0\n"
           "    },\n"
           "    \"fp3b\": {\n"
           "      \"detected\": 1,\n"
           "      \"repaired\": 1,\n"
           "      \"skipped\": 0\n"
           "    },\n"
           "    \"fp4\": {\n"
           "      \"detected\": 0,\n"
           "      \"repaired\": 0,\n"
           "      \"skipped\": 0\n"
           "    }\n"
           "  },\n"
           "  \"errors\": [\n"
           "    {\n"
           "      \"path\": \"src/locked.ts\",\n"
           "      \"message\": \"cannot open for reading\"\n"
           "    }\n"
           "  ]\n"
           "}\n");
}

TEST_CASE("summary lists repaired files, failures, and totals") {
  std::string text = report_summary(sample_report(), false);
  CHECK(text.find("repaired src/clock.ts\n") != std::string::npos);
  CHECK(text.find("parse error src/broken.js: 3:1: unbalanced '{'\n") !=
        std::string::npos);
  CHECK(text.find("error src/locked.ts: cannot open for reading\n") !=
        std::string::npos);
  CHECK(text.find("2 detected, 1 repaired, 1 skipped\n") != std::string::npos);
  CHECK_EQ(text.find("\x1b["), std::string::npos);
}

TEST_CASE("an empty report still prints a zero summary") {
  RepairReport report;
  report.root = ".";
  tally_report(&report);
  std::string text = report_summary(report, false);
  CHECK(text.find("0 detected, 0 repaired, 0 skipped\n") != std::string::npos);
  CHECK(!text.starts_with("repaired "));
  CHECK_EQ(text.find("\nrepaired "), std::string::npos);
}

TEST_CASE("color mode wraps markers in ansi codes") {
  std::string text = report_summary(sample_report(), true);
  CHECK(text.find("\x1b[32mrepaired\x1b[0m src/clock.ts\n") !=
        std::string::npos);
}
