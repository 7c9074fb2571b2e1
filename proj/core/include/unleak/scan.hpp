//===--- scan.hpp - match leak-prone acquisition patterns ------*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "unleak/detect.hpp"
#include "unleak/tree.hpp"

namespace unleak {

/// The five repairable acquisition patterns.
enum class LeakKind : std::uint8_t {
  Fp1RxjsSubscription,   // .subscribe(...) without teardown-bounded chain
  Fp2EventListener,      // addEventListener on a long-lived target
  Fp3aTimeout,           // setTimeout without clearTimeout
  Fp3bInterval,          // setInterval without clearInterval
  Fp4AnimationFrame,     // requestAnimationFrame without cancel
};

std::string_view leak_kind_id(LeakKind kind);  // "fp1", "fp2", "fp3a", ...
bool leak_kind_from_id(std::string_view id, LeakKind *out);

/// How the acquisition's return value is captured at the call site.
enum class BindingKind : std::uint8_t { InstanceProperty, LocalVariable, None };

struct HandleBinding {
  BindingKind kind = BindingKind::None;
  std::string name;       // property path after `this.`, or variable name
  NodeId site = kNoNode;  // the assignment or declarator, when bound
};

enum class CleanupState : std::uint8_t { Present, Missing };

/// One matched acquisition inside one component.
struct Finding {
  LeakKind kind = LeakKind::Fp1RxjsSubscription;
  NodeId call = kNoNode;
  std::uint32_t line = 0;
  std::uint32_t column = 0;
  HandleBinding binding;
  CleanupState cleanup = CleanupState::Missing;
  bool repairable = true;
  std::string reason;  // set when not repairable ("outside effect", ...)

  // FP2 details
  std::string target_path;  // dotted receiver path ("window", "this.el", ...)
  std::string event_arg;    // first-argument source text
  std::string options_arg;  // third-argument source text, "true"/"false" only
  NodeId handler = kNoNode;

  int effect_index = -1;  // owning effect for function components
};

struct ScanOptions {
  bool fp1_all_classes = false;    // extend FP1 beyond Angular classes
  std::vector<LeakKind> kinds;     // empty selects every kind
};

/// Classifies how a call's result is captured: `this.x = call` is an
/// instance property, a declarator or plain-identifier assignment is a
/// local variable, anything else is unbound.
HandleBinding classify_handle_binding(const SyntaxTree &tree, NodeId call);

/// Nearest node on the path from `from` up to the component root that binds
/// `name` (variable declaration, function statement, or parameter). Returns
/// the binding block or function node, or kNoNode when the name is free
/// within the component.
NodeId declaring_scope(const SyntaxTree &tree, const Component &component,
                       NodeId from, std::string_view name);

/// Findings for one component, in source order.
std::vector<Finding> scan_component(const SyntaxTree &tree,
                                    const Component &component,
                                    const ScanOptions &options = {});

}  // namespace unleak
