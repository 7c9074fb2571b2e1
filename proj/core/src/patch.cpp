//===--- patch.cpp - plan leak repairs as span edits -----------*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#include "unleak/patch.hpp"

#include <algorithm>
#include <map>

namespace unleak {

namespace {

Span make_span(std::size_t start, std::size_t end) {
  Span s;
  s.start = start;
  s.end = end;
  return s;
}

bool is_ws(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

/// Offset one past the last non-whitespace byte in [begin, end), or `begin`
/// when the region is all whitespace.
std::size_t content_anchor(std::string_view text, std::size_t begin,
                           std::size_t end) {
  while (end > begin && is_ws(text[end - 1])) --end;
  return end;
}

char last_content_char(std::string_view text, std::size_t begin,
                       std::size_t end) {
  std::size_t a = content_anchor(text, begin, end);
  return a > begin ? text[a - 1] : '\0';
}

bool appears_as_identifier(std::string_view text, std::string_view name) {
  for (std::size_t pos = text.find(name); pos != std::string_view::npos;
       pos = text.find(name, pos + 1)) {
    bool left = pos == 0 || !is_identifier_part(text[pos - 1]);
    std::size_t after = pos + name.size();
    bool right = after >= text.size() || !is_identifier_part(text[after]);
    if (left && right) return true;
  }
  return false;
}

std::string capitalized(std::string_view s) {
  std::string out(s);
  if (!out.empty() && out[0] >= 'a' && out[0] <= 'z')
    out[0] = static_cast<char>(out[0] - 'a' + 'A');
  return out;
}

std::string last_path_segment(std::string_view path) {
  std::size_t dot = path.rfind('.');
  return std::string(dot == std::string_view::npos ? path
                                                   : path.substr(dot + 1));
}

/// Widens a span over the parentheses that directly wrap it, so a
/// replacement does not leave a stray `( ... )` around a statement block.
Span widen_paren(std::string_view text, Span s) {
  std::size_t a = s.start;
  while (a > 0 && is_ws(text[a - 1])) --a;
  std::size_t b = s.end;
  while (b < text.size() && is_ws(text[b])) ++b;
  if (a > 0 && text[a - 1] == '(' && b < text.size() && text[b] == ')')
    return make_span(a - 1, b + 1);
  return s;
}

std::string join_stmts(const std::vector<std::string> &stmts) {
  std::string out;
  for (std::size_t i = 0; i < stmts.size(); ++i) {
    if (i) out += ' ';
    out += stmts[i];
  }
  return out;
}

/// Appends statements at the end of an existing braced block, then
/// normalizes the whitespace before the closing brace.
void append_into_block(const SyntaxTree &t, const TextProfile &prof,
                       NodeId block, const std::vector<std::string> &stmts,
                       EditSet &out) {
  const std::string &src = t.source();
  const Span &bs = t.node(block).span;
  std::size_t open = bs.start, close = bs.end - 1;
  std::string oi = line_indent_at(src, open);
  std::string si = oi + prof.indent_unit;
  std::size_t anchor = content_anchor(src, open + 1, close);
  for (const std::string &stmt : stmts)
    out.insert(anchor, prof.line_ending + si + stmt);
  out.replace(make_span(anchor, close), prof.line_ending + oi);
}

/// Appends a new braced region (a class method, or a cleanup return) after
/// the last content inside `braces`. The opening line is one edit; the
/// statements plus the closing line are a second edit at the closing brace,
/// reusing the original trailing whitespace as the new first line's lead-in.
void append_braced_region(const SyntaxTree &t, const TextProfile &prof,
                          Span braces, std::string_view open_line,
                          std::string_view close_line,
                          std::string_view empty_form,
                          const std::vector<std::string> &stmts,
                          EditSet &out) {
  const std::string &src = t.source();
  std::size_t open = braces.start, close = braces.end - 1;
  std::string bi = line_indent_at(src, open);
  std::string mi = bi + prof.indent_unit;
  std::string si = mi + prof.indent_unit;
  std::size_t anchor = content_anchor(src, open + 1, close);
  const std::string &le = prof.line_ending;
  if (stmts.empty()) {
    out.insert(anchor, le + mi + std::string(empty_form));
    return;
  }
  std::string_view between(src.data() + anchor, close - anchor);
  std::string tail;
  std::size_t nl = between.find_last_of('\n');
  if (nl == std::string_view::npos) {
    out.replace(make_span(anchor, close), le + bi);
    tail = bi;
  } else {
    tail = std::string(between.substr(nl + 1));
  }
  out.insert(anchor, le + mi + std::string(open_line));
  std::string first =
      si.rfind(tail, 0) == 0 ? si.substr(tail.size()) : si;
  std::string blob = first + stmts[0] + le;
  for (std::size_t i = 1; i < stmts.size(); ++i) blob += si + stmts[i] + le;
  blob += mi + std::string(close_line) + le + tail;
  out.insert(close, blob);
}

/// The ancestor of `from` that is a direct child of `block`, or kNoNode.
NodeId statement_in_block(const SyntaxTree &t, NodeId from, NodeId block) {
  NodeId cur = from;
  while (cur != kNoNode) {
    NodeId par = t.node(cur).parent;
    if (par == block) return cur;
    if (par == kNoNode) return kNoNode;
    cur = par;
  }
  return kNoNode;
}

/// The ancestor of `from` that is a direct child of the nearest enclosing
/// Block, or kNoNode when no Block lies between `from` and `stop`.
NodeId enclosing_statement(const SyntaxTree &t, NodeId from, NodeId stop) {
  NodeId cur = from;
  while (cur != kNoNode && cur != stop) {
    NodeId par = t.node(cur).parent;
    if (par == kNoNode) return kNoNode;
    if (t.node(par).kind == NodeKind::Block) return cur;
    cur = par;
  }
  return kNoNode;
}

NodeId class_constructor_body(const SyntaxTree &t, NodeId class_node) {
  for (NodeId child : t.node(class_node).children) {
    const Node &c = t.node(child);
    if (c.kind == NodeKind::ClassMethod && c.has_flag(kConstructor) &&
        c.rel0 != kNoNode)
      return c.rel0;
  }
  return kNoNode;
}

const char *release_fn(LeakKind kind) {
  switch (kind) {
    case LeakKind::Fp3aTimeout:
      return "clearTimeout";
    case LeakKind::Fp3bInterval:
      return "clearInterval";
    case LeakKind::Fp4AnimationFrame:
      return "cancelAnimationFrame";
    default:
      return "";
  }
}

const char *handle_base(LeakKind kind) {
  switch (kind) {
    case LeakKind::Fp3aTimeout:
      return "timeoutId";
    case LeakKind::Fp3bInterval:
      return "intervalId";
    case LeakKind::Fp4AnimationFrame:
      return "rafId";
    default:
      return "handle";
  }
}

const char *handle_purpose(LeakKind kind) {
  switch (kind) {
    case LeakKind::Fp3aTimeout:
      return "timeout-handle";
    case LeakKind::Fp3bInterval:
      return "interval-handle";
    case LeakKind::Fp4AnimationFrame:
      return "raf-handle";
    default:
      return "handle";
  }
}

/// Where one component's cleanup statements accumulate until the plan is
/// sealed. Existing blocks take per-statement inserts; created regions are
/// emitted whole once every statement is known.
struct Sink {
  enum class Mode { ExistingBlock, CreatedMethod, CreatedReturn, ExprMerge };
  Mode mode = Mode::ExistingBlock;
  NodeId block = kNoNode;   // ExistingBlock, CreatedReturn (the host block)
  Span braces{};            // CreatedMethod: class body braces
  std::string hook;         // CreatedMethod
  NodeId expr = kNoNode;    // ExprMerge: the expression-bodied cleanup
  std::vector<std::string> stmts;
};

/// Per-finding staging area: nothing mutates the plan until the whole batch
/// is known to be conflict-free.
struct Pending {
  EditSet edits;
  std::vector<std::string> class_stmts;
  std::vector<std::pair<int, std::string>> effect_stmts;
  std::vector<std::pair<std::string, std::string>> names;
  std::vector<std::string> reserved;
  std::vector<ImportNeed> imports;
  std::string destroy_name;  // nonempty when this batch creates the notifier
  bool fp1_hook_stmts = false;
  std::string skip_reason;
};

class Planner {
 public:
  Planner(const SyntaxTree &t, const Component &comp,
          const PatchOptions &opts)
      : t_(t),
        comp_(comp),
        opts_(opts),
        prof_(profile_text(t.source())),
        typed_(dialect_is_typed(t.dialect())) {}

  RepairPlan run(const std::vector<Finding> &candidates) {
    if (comp_.framework == Framework::ReactFunction)
      effects_ = find_effects(t_, comp_);
    for (const Finding &f : candidates) {
      Pending p;
      build(f, p);
      if (p.skip_reason.empty() && conflicts(p.edits))
        p.skip_reason = "overlap";
      if (!p.skip_reason.empty()) {
        plan_.skipped.push_back({f, p.skip_reason});
        continue;
      }
      commit(f, p);
    }
    seal_sinks();
    return std::move(plan_);
  }

 private:
  // --- naming ---

  bool name_taken(const Pending &p, const std::string &candidate) const {
    if (appears_as_identifier(t_.text(comp_.node), candidate)) return true;
    auto in = [&](const std::vector<std::string> &v) {
      return std::find(v.begin(), v.end(), candidate) != v.end();
    };
    return in(reserved_) || in(p.reserved);
  }

  std::string fresh(std::string_view base, Pending &p) {
    std::string candidate(base);
    for (int i = 2; name_taken(p, candidate); ++i)
      candidate = std::string(base) + std::to_string(i);
    p.reserved.push_back(candidate);
    return candidate;
  }

  // --- sinks ---

  Sink &class_sink() {
    if (!class_sink_ready_) {
      TeardownSite site = find_teardown(t_, comp_);
      if (site.found) {
        class_sink_.mode = Sink::Mode::ExistingBlock;
        class_sink_.block = site.body;
      } else {
        class_sink_.mode = Sink::Mode::CreatedMethod;
        class_sink_.braces = t_.node(comp_.node).aux_span;
        class_sink_.hook = std::string(teardown_hook_name(comp_.framework));
      }
      class_sink_ready_ = true;
    }
    return class_sink_;
  }

  /// Resolves where cleanup statements for this effect go. Returns false
  /// with a reason for shapes that cannot take one.
  bool effect_sink(int idx, std::string *reason) {
    if (effect_sinks_.count(idx)) return true;
    const EffectSite &es = effects_[static_cast<std::size_t>(idx)];
    if (es.cleanup_opaque) {
      *reason = "effect cleanup is not a function";
      return false;
    }
    Sink s;
    if (es.cleanup != kNoNode) {
      NodeId body = function_body_block(t_, es.cleanup);
      if (body != kNoNode) {
        s.mode = Sink::Mode::ExistingBlock;
        s.block = body;
      } else {
        s.mode = Sink::Mode::ExprMerge;
        s.expr = t_.node(es.cleanup).rel0;
      }
    } else if (es.body != kNoNode) {
      s.mode = Sink::Mode::CreatedReturn;
      s.block = es.body;
    } else {
      *reason = "inside expression-bodied effect callback";
      return false;
    }
    effect_sinks_[idx] = std::move(s);
    return true;
  }

  void seal_sinks() {
    if (class_sink_ready_ && !class_sink_.stmts.empty()) emit_sink(class_sink_);
    for (auto &entry : effect_sinks_) {
      if (!entry.second.stmts.empty()) emit_sink(entry.second);
    }
  }

  void emit_sink(const Sink &s) {
    switch (s.mode) {
      case Sink::Mode::ExistingBlock:
        append_into_block(t_, prof_, s.block, s.stmts, plan_.edits);
        break;
      case Sink::Mode::CreatedMethod:
        append_braced_region(t_, prof_, s.braces, s.hook + "() {", "}",
                             s.hook + "() {}", s.stmts, plan_.edits);
        break;
      case Sink::Mode::CreatedReturn:
        append_braced_region(t_, prof_, t_.node(s.block).span,
                             "return () => {", "};", "return () => {};",
                             s.stmts, plan_.edits);
        break;
      case Sink::Mode::ExprMerge: {
        Span e = t_.node(s.expr).span;
        if (t_.node(s.expr).has_flag(kParen))
          e = widen_paren(t_.source(), e);
        plan_.edits.insert(e.start, "{ ");
        plan_.edits.insert(e.end, "; " + join_stmts(s.stmts) + " }");
        break;
      }
    }
  }

  // --- conflict tracking ---

  bool conflicts(const EditSet &batch) const {
    for (const Edit &e : batch.edits()) {
      for (const Edit &c : committed_) {
        if (e.span.start < c.span.end && c.span.start < e.span.end)
          return true;
      }
    }
    return false;
  }

  void commit(const Finding &f, Pending &p) {
    plan_.edits.append(p.edits);
    for (const Edit &e : p.edits.edits()) committed_.push_back(e);
    for (std::string &stmt : p.class_stmts)
      class_sink().stmts.push_back(std::move(stmt));
    for (auto &es : p.effect_stmts)
      effect_sinks_[es.first].stmts.push_back(std::move(es.second));
    for (auto &n : p.names) plan_.generated_names.push_back(std::move(n));
    for (std::string &r : p.reserved) reserved_.push_back(std::move(r));
    for (ImportNeed &need : p.imports) {
      bool dup = false;
      for (const ImportNeed &have : plan_.imports_added)
        dup = dup || (have.module == need.module && have.name == need.name);
      if (!dup) plan_.imports_added.push_back(std::move(need));
    }
    if (!p.destroy_name.empty()) {
      destroy_name_ = p.destroy_name;
      destroy_ready_ = true;
    }
    if (p.fp1_hook_stmts) fp1_hook_stmts_done_ = true;
    plan_.repaired.push_back(f);
  }

  // --- shared emission helpers ---

  void insert_first_member(Pending &p, const std::string &decl) {
    Span braces = t_.node(comp_.node).aux_span;
    std::string bi = line_indent_at(t_.source(), braces.start);
    p.edits.insert(braces.start + 1,
                   prof_.line_ending + bi + prof_.indent_unit + decl);
  }

  /// `stmt;` on its own line immediately before `before`, matching its
  /// indentation.
  void insert_before_statement(Pending &p, NodeId before,
                               const std::string &stmt) {
    std::size_t at = t_.node(before).span.start;
    p.edits.insert(at, stmt + prof_.line_ending +
                           line_indent_at(t_.source(), at));
  }

  bool in_effect(const Finding &f) const {
    return comp_.framework == Framework::ReactFunction &&
           f.effect_index >= 0;
  }

  const EffectSite &effect_of(const Finding &f) const {
    return effects_[static_cast<std::size_t>(f.effect_index)];
  }

  /// True when `name`, looked up from the acquisition site, resolves to the
  /// same binding inside the effect's cleanup closure.
  bool visible_to_cleanup(const Finding &f, std::string_view name) const {
    NodeId s = declaring_scope(t_, comp_, f.call, name);
    if (s == kNoNode) return true;  // module or global scope
    const EffectSite &es = effect_of(f);
    if (s == es.body || s == comp_.node) return true;
    return s == function_body_block(t_, comp_.node);
  }

  /// True when `name`, looked up from the acquisition site, is a module or
  /// global binding (so a class teardown method can reference it too).
  bool module_scope_name(const Finding &f, std::string_view name) const {
    return declaring_scope(t_, comp_, f.call, name) == kNoNode;
  }

  void route_cleanup(const Finding &f, Pending &p, std::string stmt) {
    if (!in_effect(f)) {
      p.class_stmts.push_back(std::move(stmt));
      class_sink();
      return;
    }
    std::string reason;
    if (effect_sink(f.effect_index, &reason)) {
      p.effect_stmts.emplace_back(f.effect_index, std::move(stmt));
      return;
    }
    p.skip_reason = reason;
  }

  // --- FP1: unbounded subscription ---

  void build_fp1(const Finding &f, Pending &p) {
    std::string name = destroy_ready_ ? destroy_name_ : ensure_destroy(p);
    const Node &call = t_.node(f.call);
    const Node &callee = t_.node(call.rel0);
    NodeId recv = callee.rel0;
    const Node &rn = t_.node(recv);

    bool pipe_tail = false;
    if (rn.kind == NodeKind::CallExpression && !rn.has_flag(kNew)) {
      const Node &pc = t_.node(rn.rel0);
      pipe_tail = pc.kind == NodeKind::MemberExpression &&
                  !pc.has_flag(kComputed) && pc.name == "pipe";
    }
    std::string op = "takeUntil(this." + name + ")";
    if (pipe_tail) {
      std::size_t close = rn.span.end - 1;
      char last = last_content_char(t_.source(),
                                    t_.node(rn.rel0).span.end, close);
      if (last == '(')
        p.edits.insert(close, op);
      else if (last == ',')
        p.edits.insert(close, " " + op);
      else
        p.edits.insert(close, ", " + op);
    } else {
      p.edits.insert(rn.span.end, ".pipe(" + op + ")");
    }

    if (!fp1_hook_stmts_done_) {
      p.class_stmts.push_back("this." + name + ".next();");
      p.class_stmts.push_back("this." + name + ".complete();");
      p.fp1_hook_stmts = true;
      class_sink();
    }
  }

  /// Declares the destroy notifier: a class property in typed dialect, a
  /// constructor assignment (creating the constructor when absent) in plain.
  std::string ensure_destroy(Pending &p) {
    std::string name = fresh("destroy$", p);
    if (typed_) {
      insert_first_member(
          p, "private readonly " + name + " = new Subject<void>();");
    } else {
      std::string assign = "this." + name + " = new Subject();";
      NodeId ctor = class_constructor_body(t_, comp_.node);
      if (ctor != kNoNode) {
        append_into_block(t_, prof_, ctor, {assign}, p.edits);
      } else {
        Span braces = t_.node(comp_.node).aux_span;
        std::string bi = line_indent_at(t_.source(), braces.start);
        std::string mi = bi + prof_.indent_unit;
        std::string si = mi + prof_.indent_unit;
        const std::string &le = prof_.line_ending;
        std::string text = le + mi + "constructor() {";
        if (t_.node(comp_.node).rel0 != kNoNode)
          text += le + si + "super(...arguments);";
        text += le + si + assign + le + mi + "}";
        p.edits.insert(braces.start + 1, text);
      }
    }
    p.names.emplace_back("destroy-notifier", name);
    p.imports.push_back({"rxjs", "Subject"});
    p.imports.push_back({opts_.operator_import_path, "takeUntil"});
    p.destroy_name = name;
    return name;
  }

  // --- FP2: unremoved event listener ---

  void build_fp2(const Finding &f, Pending &p) {
    if (f.handler == kNoNode || f.event_arg.empty()) {
      p.skip_reason = "listener has no handler argument";
      return;
    }
    std::string htext(t_.text(f.handler));
    if (htext.rfind("...", 0) == 0) {
      p.skip_reason = "spread handler argument";
      return;
    }

    bool effect = in_effect(f);
    if (effect && effect_of(f).body == kNoNode) {
      convert_expression_effect(f, p);
      return;
    }

    std::string ref;
    std::string hoist_base;
    if (!handler_reference(f, htext, &ref, &hoist_base)) {
      std::string name = fresh(hoist_base, p);
      p.names.emplace_back("hoisted-handler", name);
      if (effect) {
        NodeId stmt = statement_in_block(t_, f.call, effect_of(f).body);
        if (stmt != kNoNode) {
          insert_before_statement(p, stmt,
                                  "const " + name + " = " + htext + ";");
          p.edits.replace(t_.node(f.handler).span, name);
        } else {
          hoist_assignment_capture(f, p, name, htext, effect_of(f).body);
        }
        ref = name;
      } else if (typed_) {
        insert_first_member(p, "private " + name + " = " + htext + ";");
        ref = "this." + name;
        p.edits.replace(t_.node(f.handler).span, ref);
      } else {
        NodeId stmt = enclosing_statement(t_, f.call, comp_.node);
        if (stmt == kNoNode) {
          p.skip_reason = "unsupported setup position";
          return;
        }
        ref = "this." + name;
        insert_before_statement(p, stmt, ref + " = " + htext + ";");
        p.edits.replace(t_.node(f.handler).span, ref);
      }
    }

    route_cleanup(f, p, removal_stmt(f, ref));
  }

  /// `let name;` at the effect root plus an in-place `(name = expr)` so the
  /// cleanup closure can reach a value produced in a nested scope.
  void hoist_assignment_capture(const Finding &f, Pending &p,
                                const std::string &name,
                                const std::string &expr_text,
                                NodeId effect_body) {
    NodeId root_stmt = statement_in_block(t_, f.call, effect_body);
    if (root_stmt == kNoNode) {
      p.skip_reason = "unsupported setup position";
      return;
    }
    insert_before_statement(p, root_stmt, "let " + name + ";");
    p.edits.replace(t_.node(f.handler).span,
                    "(" + name + " = " + expr_text + ")");
  }

  /// Decides whether the handler expression can be repeated verbatim in the
  /// removal call. When not, reports the base name the hoisted reference
  /// should take.
  bool handler_reference(const Finding &f, const std::string &htext,
                         std::string *ref, std::string *hoist_base) {
    const Node &h = t_.node(f.handler);
    auto reusable_name = [&](std::string_view name) {
      return in_effect(f) ? visible_to_cleanup(f, name)
                          : module_scope_name(f, name);
    };
    if (h.kind == NodeKind::Identifier) {
      if (reusable_name(h.name)) {
        *ref = htext;
        return true;
      }
      *hoist_base = "bound" + capitalized(h.name);
      return false;
    }
    if (h.kind == NodeKind::MemberExpression && !h.has_flag(kComputed)) {
      std::string path = member_path(t_, f.handler);
      if (!path.empty()) {
        std::string root = path.substr(0, path.find('.'));
        if (root == "this" || reusable_name(root)) {
          *ref = htext;
          return true;
        }
        *hoist_base = "bound" + capitalized(last_path_segment(path));
        return false;
      }
    }
    if (h.kind == NodeKind::CallExpression && !h.has_flag(kNew)) {
      const Node &callee = t_.node(h.rel0);
      if (callee.kind == NodeKind::MemberExpression &&
          !callee.has_flag(kComputed) && callee.name == "bind") {
        std::string path = member_path(t_, callee.rel0);
        std::string segment = last_path_segment(path);
        *hoist_base =
            segment.empty() ? "boundHandler" : "bound" + capitalized(segment);
        return false;
      }
    }
    *hoist_base = "boundHandler";
    return false;
  }

  std::string removal_stmt(const Finding &f, const std::string &ref) const {
    std::string stmt =
        f.target_path + ".removeEventListener(" + f.event_arg + ", " + ref;
    if (!f.options_arg.empty()) stmt += ", " + f.options_arg;
    stmt += ");";
    return stmt;
  }

  // --- FP3a / FP3b / FP4: uncleared timers and frame requests ---

  void build_timer(const Finding &f, Pending &p) {
    if (in_effect(f) && effect_of(f).body == kNoNode) {
      convert_expression_effect(f, p);
      return;
    }
    std::string handle;
    if (!timer_handle(f, p, &handle)) return;
    std::string stmt =
        std::string(release_fn(f.kind)) + "(" + handle + ");";
    route_cleanup(f, p, std::move(stmt));
  }

  /// Produces the expression the cleanup call will pass, rewriting the
  /// acquisition to capture its handle when nothing reachable holds it.
  bool timer_handle(const Finding &f, Pending &p, std::string *handle) {
    const Node &call = t_.node(f.call);
    if (f.binding.kind == BindingKind::InstanceProperty) {
      *handle = "this." + f.binding.name;
      return true;
    }
    if (f.binding.kind == BindingKind::LocalVariable) {
      if (in_effect(f)) {
        if (visible_to_cleanup(f, f.binding.name)) {
          *handle = f.binding.name;
          return true;
        }
        // Out-of-scope local: fall through to a fresh capture.
      } else {
        // A method-local handle can never reach the teardown method;
        // mirror it into a fresh instance property at the declarator.
        std::string name = fresh(handle_base(f.kind), p);
        p.names.emplace_back(handle_purpose(f.kind), name);
        declare_typed_handle(p, name);
        p.edits.insert(call.span.start, "this." + name + " = ");
        *handle = "this." + name;
        return true;
      }
    }

    std::string name = fresh(handle_base(f.kind), p);
    p.names.emplace_back(handle_purpose(f.kind), name);
    NodeId parent = call.parent;
    bool stmt_root =
        parent != kNoNode &&
        t_.node(parent).kind == NodeKind::ExpressionStatement;

    if (!in_effect(f)) {
      declare_typed_handle(p, name);
      if (stmt_root) {
        p.edits.insert(call.span.start, "this." + name + " = ");
      } else {
        p.edits.insert(call.span.start, "(this." + name + " = ");
        p.edits.insert(call.span.end, ")");
      }
      *handle = "this." + name;
      return true;
    }

    NodeId body = effect_of(f).body;
    if (stmt_root && t_.node(parent).parent == body) {
      p.edits.insert(call.span.start, "const " + name + " = ");
    } else {
      NodeId root_stmt = statement_in_block(t_, f.call, body);
      if (root_stmt == kNoNode) {
        p.skip_reason = "unsupported setup position";
        return false;
      }
      insert_before_statement(p, root_stmt, "let " + name + ";");
      p.edits.insert(call.span.start, "(" + name + " = ");
      p.edits.insert(call.span.end, ")");
    }
    *handle = name;
    return true;
  }

  void declare_typed_handle(Pending &p, const std::string &name) {
    if (typed_) insert_first_member(p, "private " + name + "?: number;");
  }

  // --- expression-bodied effect callbacks ---

  /// The whole callback body is the acquisition: replace it with a block
  /// that captures, runs the setup, and returns the cleanup.
  void convert_expression_effect(const Finding &f, Pending &p) {
    const EffectSite &es = effect_of(f);
    NodeId body_expr =
        es.callback != kNoNode ? t_.node(es.callback).rel0 : kNoNode;
    if (body_expr != f.call) {
      p.skip_reason = "inside expression-bodied effect callback";
      return;
    }
    Span body = t_.node(f.call).span;
    if (t_.node(f.call).has_flag(kParen))
      body = widen_paren(t_.source(), body);
    std::string call_text(t_.text(f.call));

    std::string hoist, setup, cleanup;
    if (f.kind == LeakKind::Fp2EventListener) {
      if (f.handler == kNoNode || f.event_arg.empty()) {
        p.skip_reason = "listener has no handler argument";
        return;
      }
      std::string htext(t_.text(f.handler));
      std::string ref, hoist_base;
      if (handler_reference(f, htext, &ref, &hoist_base)) {
        setup = call_text + ";";
      } else {
        std::string name = fresh(hoist_base, p);
        p.names.emplace_back("hoisted-handler", name);
        hoist = "const " + name + " = " + htext + "; ";
        const Span &cs = t_.node(f.call).span;
        const Span &hs = t_.node(f.handler).span;
        std::string patched = call_text;
        patched.replace(hs.start - cs.start, hs.end - hs.start, name);
        setup = patched + ";";
        ref = name;
      }
      cleanup = removal_stmt(f, ref);
    } else {
      std::string name = fresh(handle_base(f.kind), p);
      p.names.emplace_back(handle_purpose(f.kind), name);
      setup = "const " + name + " = " + call_text + ";";
      cleanup = std::string(release_fn(f.kind)) + "(" + name + ");";
    }
    p.edits.replace(body, "{ " + hoist + setup + " return () => { " +
                              cleanup + " }; }");
  }

  // --- dispatch ---

  void build(const Finding &f, Pending &p) {
    switch (f.kind) {
      case LeakKind::Fp1RxjsSubscription:
        build_fp1(f, p);
        break;
      case LeakKind::Fp2EventListener:
        build_fp2(f, p);
        break;
      case LeakKind::Fp3aTimeout:
      case LeakKind::Fp3bInterval:
      case LeakKind::Fp4AnimationFrame:
        build_timer(f, p);
        break;
    }
  }

  const SyntaxTree &t_;
  const Component &comp_;
  const PatchOptions &opts_;
  TextProfile prof_;
  bool typed_;
  RepairPlan plan_;
  std::vector<Edit> committed_;
  std::vector<std::string> reserved_;
  std::vector<EffectSite> effects_;
  bool class_sink_ready_ = false;
  Sink class_sink_;
  std::map<int, Sink> effect_sinks_;
  bool destroy_ready_ = false;
  std::string destroy_name_;
  bool fp1_hook_stmts_done_ = false;
};

char import_quote(const SyntaxTree &t) {
  int singles = 0, doubles = 0;
  t.walk(t.root(), [&](NodeId id) {
    const Node &n = t.node(id);
    if (n.kind != NodeKind::ImportDeclaration) return true;
    std::string_view text = t.text(id);
    for (std::size_t i = text.size(); i-- > 0;) {
      if (text[i] == '\'') {
        ++singles;
        break;
      }
      if (text[i] == '"') {
        ++doubles;
        break;
      }
    }
    return true;
  });
  return doubles > singles ? '"' : '\'';
}

}  // namespace

TeardownPlan ensure_teardown(const SyntaxTree &tree,
                             const Component &component) {
  TeardownPlan r;
  r.site = find_teardown(tree, component);
  if (r.site.found) {
    r.existed = true;
    return r;
  }
  TextProfile prof = profile_text(tree.source());
  std::string hook(teardown_hook_name(component.framework));
  append_braced_region(tree, prof, tree.node(component.node).aux_span,
                       hook + "() {", "}", hook + "() {}", {}, r.edits);
  return r;
}

TeardownPlan ensure_effect_cleanup(const SyntaxTree &tree,
                                   const EffectSite &effect) {
  TeardownPlan r;
  if (effect.cleanup != kNoNode && !effect.cleanup_opaque) {
    NodeId body = function_body_block(tree, effect.cleanup);
    if (body != kNoNode) {
      r.existed = true;
      r.site.found = true;
      r.site.member = effect.cleanup;
      r.site.body = body;
      r.site.insertion_offset = tree.node(body).span.end - 1;
      return r;
    }
  }
  if (effect.body == kNoNode) return r;
  TextProfile prof = profile_text(tree.source());
  append_braced_region(tree, prof, tree.node(effect.body).span,
                       "return () => {", "};", "return () => {};", {},
                       r.edits);
  return r;
}

EditSet ensure_imports(const SyntaxTree &tree,
                       const std::vector<ImportNeed> &needed) {
  EditSet out;
  const std::string &src = tree.source();
  TextProfile prof = profile_text(src);

  std::vector<NodeId> imports;
  tree.walk(tree.root(), [&](NodeId id) {
    if (tree.node(id).kind == NodeKind::ImportDeclaration)
      imports.push_back(id);
    return id == tree.root();
  });

  auto already_imported = [&](const std::string &name) {
    for (NodeId imp : imports) {
      for (NodeId spec : tree.node(imp).children) {
        if (tree.node(spec).name == name) return true;
      }
    }
    return false;
  };

  // Module -> names still to add, preserving first-seen order.
  std::vector<std::pair<std::string, std::vector<std::string>>> groups;
  for (const ImportNeed &need : needed) {
    if (already_imported(need.name)) continue;
    auto *group = [&]() -> std::vector<std::string> * {
      for (auto &g : groups)
        if (g.first == need.module) return &g.second;
      groups.emplace_back(need.module, std::vector<std::string>{});
      return &groups.back().second;
    }();
    if (std::find(group->begin(), group->end(), need.name) == group->end())
      group->push_back(need.name);
  }
  if (groups.empty()) return out;

  char quote = import_quote(tree);

  for (auto &g : groups) {
    NodeId host = kNoNode;
    for (NodeId imp : imports) {
      if (tree.node(imp).str_value == g.first &&
          tree.node(imp).aux_span.end > tree.node(imp).aux_span.start) {
        host = imp;
        break;
      }
    }
    if (host != kNoNode) {
      const Span &braces = tree.node(host).aux_span;
      std::size_t anchor =
          content_anchor(src, braces.start + 1, braces.end - 1);
      std::string joined;
      for (std::size_t i = 0; i < g.second.size(); ++i)
        joined += (i ? ", " : "") + g.second[i];
      if (anchor == braces.start + 1) {
        out.insert(anchor, " " + joined + " ");
      } else if (src[anchor - 1] == ',') {
        out.insert(anchor, " " + joined);
      } else {
        out.insert(anchor, ", " + joined);
      }
      continue;
    }
    std::string line = "import { ";
    for (std::size_t i = 0; i < g.second.size(); ++i)
      line += (i ? ", " : "") + g.second[i];
    line += " } from ";
    line += quote;
    line += g.first;
    line += quote;
    line += ';';
    if (imports.empty()) {
      out.insert(0, line + prof.line_ending);
    } else {
      std::size_t end = tree.node(imports.back()).span.end;
      std::size_t nl = src.find('\n', end);
      if (nl == std::string::npos) {
        out.insert(src.size(), prof.line_ending + line);
      } else {
        out.insert(nl + 1, line + prof.line_ending);
      }
    }
  }
  return out;
}

std::string fresh_identifier(std::string_view base, const SyntaxTree &tree,
                             const Component &component) {
  std::string_view body = tree.text(component.node);
  std::string candidate(base);
  for (int i = 2; appears_as_identifier(body, candidate); ++i)
    candidate = std::string(base) + std::to_string(i);
  return candidate;
}

RepairPlan plan_repair(const SyntaxTree &tree, const Component &component,
                       const std::vector<Finding> &candidates,
                       const PatchOptions &options) {
  return Planner(tree, component, options).run(candidates);
}

}  // namespace unleak
