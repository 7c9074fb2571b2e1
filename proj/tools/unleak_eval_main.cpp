//===--- unleak_eval_main.cpp - corpus scoring entry point -----*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "unleak/eval.hpp"

int main(int argc, char **argv) {
  CLI::App app{"Score the repair engine against a labeled corpus"};
  std::string corpus_root;
  app.add_option("CORPUS_ROOT", corpus_root, "Directory holding corpus cases")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    unleak::CorpusMetrics metrics = unleak::run_corpus(corpus_root);
    std::cout << unleak::summarize(metrics);
    return unleak::corpus_passed(metrics) ? 0 : 1;
  } catch (const std::exception &e) {
    std::cerr << "unleak-eval: " << e.what() << "\n";
    return 2;
  }
}
