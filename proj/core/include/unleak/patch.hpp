//===--- patch.hpp - plan leak repairs as span edits -----------*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unleak/detect.hpp"
#include "unleak/edits.hpp"
#include "unleak/scan.hpp"
#include "unleak/tree.hpp"

namespace unleak {

/// A named import the repaired file must have for its new code to resolve.
struct ImportNeed {
  std::string module;
  std::string name;
};

struct PatchOptions {
  /// Module specifier takeUntil is imported from. rxjs 7 exports operators
  /// from the package root; older projects use "rxjs/operators".
  std::string operator_import_path = "rxjs";
};

struct SkippedCandidate {
  Finding finding;
  std::string reason;
};

/// Everything plan_repair decided for one component: the edits to apply,
/// the imports those edits assume, and the fate of every input candidate.
struct RepairPlan {
  EditSet edits;
  /// (purpose, identifier) for each name the plan invented.
  std::vector<std::pair<std::string, std::string>> generated_names;
  std::vector<ImportNeed> imports_added;
  std::vector<Finding> repaired;
  std::vector<SkippedCandidate> skipped;
};

/// Result of ensuring a place for cleanup statements exists.
struct TeardownPlan {
  /// True when the component already had the lifecycle hook; `site` is then
  /// valid against the original tree and `edits` is empty.
  bool existed = false;
  TeardownSite site;
  EditSet edits;
};

/// Returns the existing teardown hook, or one edit appending an empty
/// componentWillUnmount() {} / ngOnDestroy() {} as the last class member.
TeardownPlan ensure_teardown(const SyntaxTree &tree, const Component &component);

/// Effect analogue: returns the existing cleanup return's site, or one edit
/// appending "return () => {};" to the effect callback body.
TeardownPlan ensure_effect_cleanup(const SyntaxTree &tree,
                                   const EffectSite &effect);

/// Inserts named imports that are absent from the file's import
/// declarations: merged into an existing clause for the same module when one
/// exists, otherwise emitted as a new import line after the last import (at
/// offset 0 in a file without imports).
EditSet ensure_imports(const SyntaxTree &tree,
                       const std::vector<ImportNeed> &needed);

/// `base` if it does not occur as an identifier anywhere in the component's
/// body text, else base2, base3, ... (smallest free suffix).
std::string fresh_identifier(std::string_view base, const SyntaxTree &tree,
                             const Component &component);

/// Plans repairs for every cleanup-Missing candidate of one component.
/// Candidates whose recipe cannot apply are moved to `skipped` with a
/// reason; a candidate whose edits would overlap an earlier candidate's is
/// skipped with reason "overlap" (first in source order wins).
RepairPlan plan_repair(const SyntaxTree &tree, const Component &component,
                       const std::vector<Finding> &candidates,
                       const PatchOptions &options = {});

}  // namespace unleak
