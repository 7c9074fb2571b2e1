//===--- unleak_main.cpp - command line entry point ------------*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "unleak/engine.hpp"
#include "unleak/glob.hpp"

namespace {

bool parse_patterns(const std::string &spec, std::vector<unleak::LeakKind> *out,
                    std::string *bad) {
  std::size_t at = 0;
  while (at <= spec.size()) {
    std::size_t comma = spec.find(',', at);
    if (comma == std::string::npos) comma = spec.size();
    std::string id = spec.substr(at, comma - at);
    while (!id.empty() && id.front() == ' ') id.erase(id.begin());
    while (!id.empty() && id.back() == ' ') id.pop_back();
    if (!id.empty()) {
      unleak::LeakKind kind;
      if (!unleak::leak_kind_from_id(id, &kind)) {
        *bad = id;
        return false;
      }
      out->push_back(kind);
    }
    at = comma + 1;
  }
  return true;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Pattern-based memory leak repair for React and Angular sources"};

  unleak::EngineConfig config;
  bool dry_run = false;
  bool check = false;
  std::string patterns;
  std::string framework = "auto";
  std::string fp1_scope = "angular-only";
  std::vector<std::string> includes;
  std::vector<std::string> excludes;

  app.add_option("ROOT", config.root, "Project root to scan")
      ->capture_default_str();
  auto *dry_flag =
      app.add_flag("--dry-run", dry_run, "Plan repairs without writing files");
  auto *check_flag = app.add_flag(
      "--check", check, "Like --dry-run, but exit 1 when cleanup is missing");
  dry_flag->excludes(check_flag);
  check_flag->excludes(dry_flag);
  app.add_flag("--diff", config.emit_diff,
               "Print unified diffs (dry-run and check modes)");
  app.add_option("--json", config.json_out, "Write the JSON report to PATH");
  app.add_option("--patterns", patterns,
                 "Comma separated subset of fp1,fp2,fp3a,fp3b,fp4");
  app.add_option("--include", includes,
                 "File glob to scan; replaces the default include set")
      ->allow_extra_args(false);
  app.add_option("--exclude", excludes,
                 "File glob to skip, in addition to the defaults")
      ->allow_extra_args(false);
  app.add_option("--framework", framework, "Component model to repair")
      ->check(CLI::IsMember({"auto", "react", "angular"}))
      ->capture_default_str();
  app.add_option("--fp1-scope", fp1_scope,
                 "Classes eligible for subscription repair")
      ->check(CLI::IsMember({"angular-only", "all-classes"}))
      ->capture_default_str();
  app.add_option("--operator-import", config.operator_import_path,
                 "Module takeUntil is imported from")
      ->check(CLI::IsMember({"rxjs", "rxjs/operators"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (!patterns.empty()) {
    std::string bad;
    if (!parse_patterns(patterns, &config.kinds, &bad)) {
      std::cerr << "unleak: unknown pattern '" << bad << "'\n";
      return 2;
    }
  }
  if (!includes.empty()) config.include_globs = includes;
  for (std::string &g : excludes) config.exclude_globs.push_back(std::move(g));
  for (const std::string &g : config.include_globs)
    if (!unleak::Glob::valid(g)) {
      std::cerr << "unleak: bad glob '" << g << "'\n";
      return 2;
    }
  for (const std::string &g : config.exclude_globs)
    if (!unleak::Glob::valid(g)) {
      std::cerr << "unleak: bad glob '" << g << "'\n";
      return 2;
    }
  config.framework = framework == "react"     ? unleak::FrameworkFilter::React
                     : framework == "angular" ? unleak::FrameworkFilter::Angular
                                              : unleak::FrameworkFilter::Auto;
  config.fp1_scope = fp1_scope == "all-classes" ? unleak::Fp1Scope::AllClasses
                                                : unleak::Fp1Scope::AngularOnly;
  config.mode = check     ? unleak::RunMode::Check
                : dry_run ? unleak::RunMode::DryRun
                          : unleak::RunMode::Write;

  try {
    unleak::RepairReport report = unleak::scan_project(config);
    unleak::emit_report(report, config, std::cout);
    return unleak::exit_code(report, config);
  } catch (const std::exception &e) {
    std::cerr << "unleak: " << e.what() << "\n";
    return 2;
  }
}
