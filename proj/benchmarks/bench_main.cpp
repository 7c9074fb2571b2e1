//===--- bench_main.cpp - engine microbenchmarks ---------------*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#include <benchmark/benchmark.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "unleak/edits.hpp"
#include "unleak/engine.hpp"
#include "unleak/tree.hpp"

namespace fs = std::filesystem;

namespace {

std::string component_source(int i) {
  std::string n = std::to_string(i);
  return "import React, { useEffect, useState } from 'react';\n"
         "\n"
         "export function Widget" + n + "({ feed }) {\n"
         "  const [count, setCount] = useState(0);\n"
         "  useEffect(() => {\n"
         "    window.addEventListener('resize', () => setCount(c => c + 1));\n"
         "    const poll = setInterval(() => feed.refresh(), 1000);\n"
         "    console.log(poll);\n"
         "  }, [feed]);\n"
         "  useEffect(() => {\n"
         "    setTimeout(() => feed.warm(), 50);\n"
         "  }, [feed]);\n"
         "  return <div onClick={() => setCount(0)}>{count}</div>;\n"
         "}\n";
}

const std::string &sample() {
  static const std::string src = component_source(0);
  return src;
}

void BM_Parse(benchmark::State &state) {
  for (auto _ : state) {
    unleak::SyntaxTree tree = unleak::parse(sample(), unleak::SourceDialect::Jsx);
    benchmark::DoNotOptimize(tree.node_count());
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(sample().size()));
}
BENCHMARK(BM_Parse);

void BM_ApplyEdits(benchmark::State &state) {
  std::string text(64 * 1024, 'x');
  for (std::size_t i = 0; i < text.size(); i += 80) text[i] = '\n';
  unleak::EditSet edits;
  for (std::size_t at = 40; at < text.size(); at += 1024)
    edits.insert(at, "inserted");
  for (auto _ : state) {
    std::string out = unleak::apply_edits(text, edits);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_ApplyEdits);

void BM_RepairFile(benchmark::State &state) {
  unleak::EngineConfig config;
  config.mode = unleak::RunMode::DryRun;
  for (auto _ : state) {
    unleak::FileOutcome out =
        unleak::repair_file(sample(), "widget.jsx", config);
    benchmark::DoNotOptimize(out.new_text.data());
  }
}
BENCHMARK(BM_RepairFile);

void BM_ScanProject(benchmark::State &state) {
  fs::path root = fs::temp_directory_path() / "unleak-bench-project";
  fs::create_directories(root / "src");
  for (int i = 0; i < 100; ++i) {
    std::ofstream out(root / "src" / ("widget" + std::to_string(i) + ".jsx"));
    out << component_source(i);
  }
  unleak::EngineConfig config;
  config.root = root.string();
  config.mode = unleak::RunMode::DryRun;
  config.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    unleak::RepairReport report = unleak::scan_project(config);
    benchmark::DoNotOptimize(report.files.size());
  }
  fs::remove_all(root);
}
BENCHMARK(BM_ScanProject)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
