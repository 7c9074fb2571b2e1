//===--- scan.cpp - match leak-prone acquisition patterns ------*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#include "unleak/scan.hpp"

#include <algorithm>
#include <functional>

namespace unleak {

namespace {

const char *const kChainStoppers[] = {"takeUntil", "take", "first",
                                      "takeWhile"};

/// Applies component boundaries: never descend into nested classes or into
/// functions that look like sibling components.
void walk_component(const SyntaxTree &t, const Component &comp,
                    const std::function<bool(NodeId)> &visit) {
  t.walk(comp.node, [&](NodeId id) {
    const Node &n = t.node(id);
    if (id != comp.node) {
      if (n.kind == NodeKind::ClassDeclaration) return false;
      if (is_function_like(n)) {
        std::string other;
        if (component_binding_name(t, id, &other)) return false;
      }
    }
    return visit(id);
  });
}

/// bare name, or the same qualified by window. / globalThis.
bool global_fn_callee(const SyntaxTree &t, NodeId callee,
                      std::string_view name) {
  const Node &c = t.node(callee);
  if (c.kind == NodeKind::Identifier) return c.name == name;
  if (c.kind == NodeKind::MemberExpression && !c.has_flag(kComputed) &&
      c.name == name) {
    const Node &obj = t.node(c.rel0);
    return obj.kind == NodeKind::Identifier &&
           (obj.name == "window" || obj.name == "globalThis");
  }
  return false;
}

bool chain_has_stopper(const SyntaxTree &t, NodeId receiver) {
  bool found = false;
  t.walk(receiver, [&](NodeId id) {
    if (found) return false;
    const Node &n = t.node(id);
    if (n.kind == NodeKind::CallExpression && !n.has_flag(kNew)) {
      std::string_view name = callee_name(t, n.rel0);
      for (const char *stopper : kChainStoppers) {
        if (name == stopper) {
          found = true;
          return false;
        }
      }
    }
    return true;
  });
  return found;
}

bool declares_name(const SyntaxTree &t, NodeId decl, std::string_view name) {
  for (NodeId d : t.node(decl).children) {
    const Node &dn = t.node(d);
    if (dn.name == name) return true;
    for (NodeId pat : dn.children) {
      if (t.node(pat).kind == NodeKind::Identifier &&
          t.node(pat).name == name)
        return true;
    }
  }
  return false;
}

bool declared_in_scope(const SyntaxTree &t, const Component &comp, NodeId from,
                       std::string_view name) {
  return declaring_scope(t, comp, from, name) != kNoNode;
}

std::string binding_path(const HandleBinding &binding) {
  if (binding.kind == BindingKind::InstanceProperty)
    return "this." + binding.name;
  return binding.name;
}

bool handle_cleanup_present(const SyntaxTree &t, const Component &comp,
                            std::string_view cleanup_fn,
                            const std::string &handle) {
  if (handle.empty()) return false;
  bool found = false;
  walk_component(t, comp, [&](NodeId id) {
    if (found) return false;
    const Node &n = t.node(id);
    if (n.kind == NodeKind::CallExpression && !n.has_flag(kNew) &&
        global_fn_callee(t, n.rel0, cleanup_fn) && !n.children.empty() &&
        member_path(t, n.children[0]) == handle) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

bool unsubscribe_present(const SyntaxTree &t, const Component &comp,
                         const std::string &handle) {
  if (handle.empty()) return false;
  bool found = false;
  walk_component(t, comp, [&](NodeId id) {
    if (found) return false;
    const Node &n = t.node(id);
    if (n.kind != NodeKind::CallExpression || n.has_flag(kNew)) return true;
    const Node &callee = t.node(n.rel0);
    if (callee.kind == NodeKind::MemberExpression &&
        !callee.has_flag(kComputed) && callee.name == "unsubscribe" &&
        member_path(t, callee.rel0) == handle) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

bool removal_present(const SyntaxTree &t, const Component &comp,
                     const std::string &target, std::string_view event_text) {
  bool found = false;
  walk_component(t, comp, [&](NodeId id) {
    if (found) return false;
    const Node &n = t.node(id);
    if (n.kind != NodeKind::CallExpression || n.has_flag(kNew)) return true;
    const Node &callee = t.node(n.rel0);
    if (callee.kind == NodeKind::MemberExpression &&
        !callee.has_flag(kComputed) && callee.name == "removeEventListener" &&
        member_path(t, callee.rel0) == target && !n.children.empty() &&
        t.text(n.children[0]) == event_text) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

int owning_effect(const SyntaxTree &t, const std::vector<EffectSite> &effects,
                  NodeId call) {
  const Span &cs = t.node(call).span;
  int best = -1;
  std::size_t best_start = 0;
  for (std::size_t i = 0; i < effects.size(); ++i) {
    if (effects[i].callback == kNoNode) continue;
    const Span &es = t.node(effects[i].callback).span;
    if (es.encloses(cs) && effects[i].call != call &&
        (best < 0 || es.start >= best_start)) {
      best = static_cast<int>(i);
      best_start = es.start;
    }
  }
  return best;
}

}  // namespace

std::string_view leak_kind_id(LeakKind kind) {
  switch (kind) {
    case LeakKind::Fp1RxjsSubscription:
      return "fp1";
    case LeakKind::Fp2EventListener:
      return "fp2";
    case LeakKind::Fp3aTimeout:
      return "fp3a";
    case LeakKind::Fp3bInterval:
      return "fp3b";
    case LeakKind::Fp4AnimationFrame:
      return "fp4";
  }
  return "fp1";
}

bool leak_kind_from_id(std::string_view id, LeakKind *out) {
  if (id == "fp1") *out = LeakKind::Fp1RxjsSubscription;
  else if (id == "fp2") *out = LeakKind::Fp2EventListener;
  else if (id == "fp3a") *out = LeakKind::Fp3aTimeout;
  else if (id == "fp3b") *out = LeakKind::Fp3bInterval;
  else if (id == "fp4") *out = LeakKind::Fp4AnimationFrame;
  else return false;
  return true;
}

NodeId declaring_scope(const SyntaxTree &tree, const Component &component,
                       NodeId from, std::string_view name) {
  NodeId cur = tree.node(from).parent;
  while (cur != kNoNode) {
    const Node &n = tree.node(cur);
    if (n.kind == NodeKind::Block || n.kind == NodeKind::Root ||
        n.kind == NodeKind::Opaque) {
      for (NodeId child : n.children) {
        const Node &c = tree.node(child);
        if (c.kind == NodeKind::VariableDeclaration &&
            declares_name(tree, child, name))
          return cur;
        if (c.kind == NodeKind::FunctionDeclaration &&
            !c.has_flag(kExpressionForm) && c.name == name)
          return cur;
      }
    } else if (is_function_like(n) || n.kind == NodeKind::ClassMethod) {
      for (NodeId param : n.children) {
        const Node &p = tree.node(param);
        if (p.kind == NodeKind::Identifier && p.name == name) return cur;
      }
    }
    if (cur == component.node) break;
    cur = n.parent;
  }
  return kNoNode;
}

HandleBinding classify_handle_binding(const SyntaxTree &tree, NodeId call) {
  HandleBinding b;
  NodeId pid = tree.node(call).parent;
  if (pid == kNoNode) return b;
  const Node &p = tree.node(pid);
  if (p.kind == NodeKind::AssignmentExpression && p.name == "=" &&
      p.rel1 == call) {
    std::string path = member_path(tree, p.rel0);
    if (path.rfind("this.", 0) == 0) {
      b.kind = BindingKind::InstanceProperty;
      b.name = path.substr(5);
      b.site = pid;
      return b;
    }
    const Node &target = tree.node(p.rel0);
    if (target.kind == NodeKind::Identifier) {
      b.kind = BindingKind::LocalVariable;
      b.name = target.name;
      b.site = pid;
    }
    return b;
  }
  if (p.kind == NodeKind::VariableDeclarator && p.rel0 == call &&
      !p.name.empty()) {
    b.kind = BindingKind::LocalVariable;
    b.name = p.name;
    b.site = pid;
    return b;
  }
  if (p.kind == NodeKind::ClassProperty && p.rel0 == call && !p.name.empty()) {
    b.kind = BindingKind::InstanceProperty;
    b.name = p.name;
    b.site = pid;
    return b;
  }
  return b;
}

std::vector<Finding> scan_component(const SyntaxTree &tree,
                                    const Component &component,
                                    const ScanOptions &options) {
  std::vector<Finding> out;
  std::vector<EffectSite> effects;
  if (component.framework == Framework::ReactFunction)
    effects = find_effects(tree, component);

  const bool fp1_in_scope =
      component.framework == Framework::AngularClass ||
      (options.fp1_all_classes &&
       component.framework == Framework::ReactClass);

  auto kind_enabled = [&](LeakKind k) {
    if (options.kinds.empty()) return true;
    return std::find(options.kinds.begin(), options.kinds.end(), k) !=
           options.kinds.end();
  };

  auto begin_finding = [&](LeakKind kind, NodeId call) {
    Finding f;
    f.kind = kind;
    f.call = call;
    const Span &s = tree.node(call).span;
    f.line = s.line;
    f.column = s.column;
    f.binding = classify_handle_binding(tree, call);
    if (component.framework == Framework::ReactFunction) {
      f.effect_index = owning_effect(tree, effects, call);
      if (f.effect_index < 0) {
        f.repairable = false;
        f.reason = "outside effect";
      }
    }
    return f;
  };

  walk_component(tree, component, [&](NodeId id) {
    const Node &n = tree.node(id);
    if (n.kind != NodeKind::CallExpression || n.has_flag(kNew)) return true;
    const Node &callee = tree.node(n.rel0);
    const bool member_callee = callee.kind == NodeKind::MemberExpression &&
                               !callee.has_flag(kComputed);

    if (member_callee && callee.name == "subscribe" && fp1_in_scope &&
        kind_enabled(LeakKind::Fp1RxjsSubscription)) {
      if (chain_has_stopper(tree, callee.rel0)) return true;
      Finding f = begin_finding(LeakKind::Fp1RxjsSubscription, id);
      f.cleanup = (f.binding.kind != BindingKind::None &&
                   unsubscribe_present(tree, component,
                                       binding_path(f.binding)))
                      ? CleanupState::Present
                      : CleanupState::Missing;
      out.push_back(std::move(f));
      return true;
    }

    if (member_callee && callee.name == "addEventListener" &&
        kind_enabled(LeakKind::Fp2EventListener)) {
      std::string path = member_path(tree, callee.rel0);
      if (path.empty()) return true;
      bool eligible = path == "window" || path == "document" ||
                      path == "globalThis" ||
                      path.rfind("document.", 0) == 0 ||
                      path.rfind("this.", 0) == 0;
      if (!eligible && path.find('.') == std::string::npos)
        eligible = !declared_in_scope(tree, component, id, path);
      if (!eligible) return true;
      if (n.children.empty() ||
          tree.node(n.children[0]).kind != NodeKind::StringLiteral)
        return true;
      Finding f = begin_finding(LeakKind::Fp2EventListener, id);
      f.target_path = std::move(path);
      if (!n.children.empty()) f.event_arg = tree.text(n.children[0]);
      if (n.children.size() >= 2) f.handler = n.children[1];
      if (n.children.size() >= 3) {
        std::string_view third = tree.text(n.children[2]);
        if (third == "true" || third == "false") f.options_arg = third;
      }
      f.cleanup = removal_present(tree, component, f.target_path, f.event_arg)
                      ? CleanupState::Present
                      : CleanupState::Missing;
      out.push_back(std::move(f));
      return true;
    }

    struct TimerPattern {
      LeakKind kind;
      const char *acquire;
    };
    static const TimerPattern kTimers[] = {
        {LeakKind::Fp3aTimeout, "setTimeout"},
        {LeakKind::Fp3bInterval, "setInterval"},
        {LeakKind::Fp4AnimationFrame, "requestAnimationFrame"},
    };
    for (const TimerPattern &tp : kTimers) {
      if (!kind_enabled(tp.kind)) continue;
      if (!global_fn_callee(tree, n.rel0, tp.acquire)) continue;
      Finding f = begin_finding(tp.kind, id);
      const char *release = tp.kind == LeakKind::Fp3aTimeout ? "clearTimeout"
                            : tp.kind == LeakKind::Fp3bInterval
                                ? "clearInterval"
                                : "cancelAnimationFrame";
      f.cleanup = (f.binding.kind != BindingKind::None &&
                   handle_cleanup_present(tree, component, release,
                                          binding_path(f.binding)))
                      ? CleanupState::Present
                      : CleanupState::Missing;
      out.push_back(std::move(f));
      break;
    }
    return true;
  });

  return out;
}

}  // namespace unleak
