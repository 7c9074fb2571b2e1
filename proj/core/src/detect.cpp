//===--- detect.cpp - find components and their teardown hooks -*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#include "unleak/detect.hpp"

namespace unleak {

namespace {

bool uppercase_initial(std::string_view name) {
  return !name.empty() && name[0] >= 'A' && name[0] <= 'Z';
}

bool is_react_heritage(const SyntaxTree &t, NodeId heritage) {
  if (heritage == kNoNode) return false;
  const Node &h = t.node(heritage);
  if (h.kind == NodeKind::Identifier)
    return h.name == "Component" || h.name == "PureComponent";
  if (h.kind == NodeKind::MemberExpression && !h.has_flag(kComputed)) {
    if (h.name != "Component" && h.name != "PureComponent") return false;
    const Node &obj = t.node(h.rel0);
    return obj.kind == NodeKind::Identifier && obj.name == "React";
  }
  return false;
}

bool has_angular_decorator(const SyntaxTree &t, const Node &cls) {
  for (NodeId child : cls.children) {
    const Node &c = t.node(child);
    if (c.kind != NodeKind::Decorator) continue;
    NodeId expr = c.rel0;
    const Node &e = t.node(expr);
    NodeId target = e.kind == NodeKind::CallExpression ? e.rel0 : expr;
    std::string_view name = callee_name(t, target);
    if (name == "Component" || name == "Directive") return true;
  }
  return false;
}

bool is_effect_callee(const SyntaxTree &t, NodeId callee) {
  const Node &c = t.node(callee);
  if (c.kind == NodeKind::Identifier)
    return c.name == "useEffect" || c.name == "useLayoutEffect";
  if (c.kind == NodeKind::MemberExpression && !c.has_flag(kComputed)) {
    if (c.name != "useEffect" && c.name != "useLayoutEffect") return false;
    const Node &obj = t.node(c.rel0);
    return obj.kind == NodeKind::Identifier && obj.name == "React";
  }
  return false;
}

bool subtree_calls_effect(const SyntaxTree &t, NodeId fn) {
  bool found = false;
  t.walk(fn, [&](NodeId id) {
    if (found) return false;
    const Node &n = t.node(id);
    if (id != fn && n.kind == NodeKind::ClassDeclaration) return false;
    if (n.kind == NodeKind::CallExpression && !n.has_flag(kNew) &&
        is_effect_callee(t, n.rel0)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace

bool component_binding_name(const SyntaxTree &t, NodeId fn, std::string *out) {
  const Node &n = t.node(fn);
  if (n.kind == NodeKind::FunctionDeclaration && !n.has_flag(kExpressionForm)) {
    if (!uppercase_initial(n.name)) return false;
    *out = n.name;
    return true;
  }
  if (n.parent == kNoNode) return false;
  const Node &p = t.node(n.parent);
  if (p.kind == NodeKind::VariableDeclarator && p.rel0 == fn &&
      uppercase_initial(p.name)) {
    *out = p.name;
    return true;
  }
  return false;
}

std::string_view framework_name(Framework f) {
  switch (f) {
    case Framework::ReactClass:
      return "react-class";
    case Framework::ReactFunction:
      return "react-function";
    case Framework::AngularClass:
      return "angular-class";
  }
  return "react-class";
}

std::string_view teardown_hook_name(Framework f) {
  switch (f) {
    case Framework::ReactClass:
      return "componentWillUnmount";
    case Framework::AngularClass:
      return "ngOnDestroy";
    case Framework::ReactFunction:
      return "";
  }
  return "";
}

std::vector<Component> detect_components(const SyntaxTree &tree) {
  std::vector<Component> out;
  tree.walk(tree.root(), [&](NodeId id) {
    const Node &n = tree.node(id);
    if (n.kind == NodeKind::ClassDeclaration) {
      Component c;
      c.node = id;
      c.name = n.name.empty() ? "<default>" : n.name;
      if (has_angular_decorator(tree, n)) {
        c.framework = Framework::AngularClass;
        out.push_back(std::move(c));
      } else if (is_react_heritage(tree, n.rel0)) {
        c.framework = Framework::ReactClass;
        out.push_back(std::move(c));
      }
      return true;
    }
    if (is_function_like(n)) {
      std::string name;
      if (component_binding_name(tree, id, &name) &&
          subtree_calls_effect(tree, id)) {
        Component c;
        c.framework = Framework::ReactFunction;
        c.name = std::move(name);
        c.node = id;
        out.push_back(std::move(c));
      }
      return true;
    }
    return true;
  });
  return out;
}

TeardownSite find_teardown(const SyntaxTree &tree, const Component &component) {
  TeardownSite site;
  std::string_view hook = teardown_hook_name(component.framework);
  if (hook.empty()) return site;
  const Node &cls = tree.node(component.node);
  for (NodeId child : cls.children) {
    const Node &m = tree.node(child);
    NodeId body = kNoNode;
    if (m.kind == NodeKind::ClassMethod && m.name == hook &&
        !m.has_flag(kStatic) && !m.has_flag(kAccessor)) {
      body = m.rel0;
    } else if (m.kind == NodeKind::ClassProperty && m.name == hook &&
               m.rel0 != kNoNode && is_function_like(tree.node(m.rel0))) {
      body = function_body_block(tree, m.rel0);
    } else {
      continue;
    }
    if (body == kNoNode) continue;
    site.found = true;
    site.member = child;
    site.body = body;
    site.insertion_offset = tree.node(body).span.end - 1;
    return site;
  }
  return site;
}

std::vector<EffectSite> find_effects(const SyntaxTree &tree,
                                     const Component &component) {
  std::vector<EffectSite> out;
  if (component.framework != Framework::ReactFunction) return out;
  tree.walk(component.node, [&](NodeId id) {
    const Node &n = tree.node(id);
    if (n.kind == NodeKind::ClassDeclaration) return false;
    if (id != component.node && is_function_like(n)) {
      // do not descend into nested components
      std::string other;
      if (component_binding_name(tree, id, &other)) return false;
    }
    if (n.kind != NodeKind::CallExpression || n.has_flag(kNew) ||
        !is_effect_callee(tree, n.rel0)) {
      return true;
    }
    EffectSite site;
    site.call = id;
    if (!n.children.empty() && is_function_like(tree.node(n.children[0]))) {
      site.callback = n.children[0];
      site.body = function_body_block(tree, site.callback);
      if (site.body != kNoNode) {
        for (NodeId stmt : tree.node(site.body).children) {
          const Node &s = tree.node(stmt);
          if (s.kind != NodeKind::ReturnStatement) continue;
          if (s.rel0 != kNoNode && is_function_like(tree.node(s.rel0))) {
            site.cleanup = s.rel0;
          } else {
            site.cleanup_opaque = true;
          }
          break;
        }
      }
    }
    out.push_back(site);
    return true;
  });
  return out;
}

bool is_function_like(const Node &n) {
  return n.kind == NodeKind::ArrowFunction ||
         n.kind == NodeKind::FunctionDeclaration;
}

NodeId function_body_block(const SyntaxTree &t, NodeId fn) {
  const Node &n = t.node(fn);
  if (n.kind == NodeKind::FunctionDeclaration) return n.rel0;
  if (n.kind == NodeKind::ArrowFunction)
    return n.has_flag(kBlockBody) ? n.rel0 : kNoNode;
  if (n.kind == NodeKind::ClassMethod) return n.rel0;
  return kNoNode;
}

std::string member_path(const SyntaxTree &t, NodeId expr) {
  const Node &n = t.node(expr);
  if (n.kind == NodeKind::Identifier) return n.name;
  if (n.kind == NodeKind::MemberExpression && !n.has_flag(kComputed)) {
    std::string base = member_path(t, n.rel0);
    if (base.empty()) return base;
    base += '.';
    base += n.name;
    return base;
  }
  return {};
}

std::string_view callee_name(const SyntaxTree &t, NodeId callee) {
  const Node &n = t.node(callee);
  if (n.kind == NodeKind::Identifier) return n.name;
  if (n.kind == NodeKind::MemberExpression && !n.has_flag(kComputed))
    return n.name;
  return {};
}

}  // namespace unleak
