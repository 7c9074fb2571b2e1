//===--- detect.hpp - find components and their teardown hooks -*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "unleak/tree.hpp"

namespace unleak {

enum class Framework : std::uint8_t { ReactClass, ReactFunction, AngularClass };

std::string_view framework_name(Framework f);  // "react-class", ...

/// One repairable unit: a class component or a function component.
struct Component {
  Framework framework = Framework::ReactClass;
  std::string name;      // "<default>" when anonymous
  NodeId node = kNoNode; // ClassDeclaration, or the bound function node
};

/// Components in source order. Classes qualify by an Angular @Component or
/// @Directive decorator, or by extending Component / PureComponent /
/// React.Component / React.PureComponent. Functions qualify when bound to
/// an uppercase-initial name and calling useEffect or useLayoutEffect.
std::vector<Component> detect_components(const SyntaxTree &tree);

/// Lifecycle hook that hosts cleanup for class components; "" for function
/// components, which clean up from effect return functions instead.
std::string_view teardown_hook_name(Framework f);

/// Existing teardown hook of a class component.
struct TeardownSite {
  bool found = false;
  NodeId member = kNoNode;  // the ClassMethod, or arrow-valued ClassProperty
  NodeId body = kNoNode;    // the hook's body Block
  std::size_t insertion_offset = 0;  // just before the body's closing brace
};

TeardownSite find_teardown(const SyntaxTree &tree, const Component &component);

/// One useEffect/useLayoutEffect call inside a function component.
struct EffectSite {
  NodeId call = kNoNode;
  NodeId callback = kNoNode;  // first-argument function, kNoNode if absent
  NodeId body = kNoNode;      // callback block; kNoNode when expression-bodied
  NodeId cleanup = kNoNode;   // function returned by the callback, if any
  bool cleanup_opaque = false;  // callback returns something non-literal
};

/// Effect calls in source order, excluding any nested inside another
/// detected component.
std::vector<EffectSite> find_effects(const SyntaxTree &tree,
                                     const Component &component);

// Small tree probes shared by detection and scanning.
/// True when `fn` is a function bound to an uppercase-initial name, either
/// a named declaration or the initializer of a declarator; outputs the name.
bool component_binding_name(const SyntaxTree &t, NodeId fn, std::string *out);
bool is_function_like(const Node &n);
NodeId function_body_block(const SyntaxTree &t, NodeId fn);
/// Dotted path of a non-computed identifier/member chain ("this.a.b");
/// empty when the expression is anything else.
std::string member_path(const SyntaxTree &t, NodeId expr);
/// Terminal name of a call target: identifier name or member property name.
std::string_view callee_name(const SyntaxTree &t, NodeId callee);

}  // namespace unleak
