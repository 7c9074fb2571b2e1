//===--- tree.cpp - syntax tree support routines ----------------*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#include "unleak/tree.hpp"

namespace unleak {

SourceDialect dialect_from_path(std::string_view path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() &&
           path.substr(path.size() - suffix.size()) == suffix;
  };
  if (ends_with(".tsx")) return SourceDialect::TypedJsx;
  if (ends_with(".ts")) return SourceDialect::Typed;
  if (ends_with(".jsx")) return SourceDialect::Jsx;
  return SourceDialect::Plain;
}

bool dialect_allows_jsx(SourceDialect d) {
  return d == SourceDialect::Jsx || d == SourceDialect::TypedJsx;
}

bool dialect_is_typed(SourceDialect d) {
  return d == SourceDialect::Typed || d == SourceDialect::TypedJsx;
}

std::string_view dialect_name(SourceDialect d) {
  switch (d) {
    case SourceDialect::Plain:
      return "js";
    case SourceDialect::Jsx:
      return "jsx";
    case SourceDialect::Typed:
      return "ts";
    case SourceDialect::TypedJsx:
      return "tsx";
  }
  return "js";
}

std::string_view node_kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::Root:
      return "Root";
    case NodeKind::ClassDeclaration:
      return "ClassDeclaration";
    case NodeKind::ClassMethod:
      return "ClassMethod";
    case NodeKind::ClassProperty:
      return "ClassProperty";
    case NodeKind::Decorator:
      return "Decorator";
    case NodeKind::FunctionDeclaration:
      return "FunctionDeclaration";
    case NodeKind::ArrowFunction:
      return "ArrowFunction";
    case NodeKind::CallExpression:
      return "CallExpression";
    case NodeKind::MemberExpression:
      return "MemberExpression";
    case NodeKind::Identifier:
      return "Identifier";
    case NodeKind::StringLiteral:
      return "StringLiteral";
    case NodeKind::NumberLiteral:
      return "NumberLiteral";
    case NodeKind::RegexLiteral:
      return "RegexLiteral";
    case NodeKind::TemplateLiteral:
      return "TemplateLiteral";
    case NodeKind::AssignmentExpression:
      return "AssignmentExpression";
    case NodeKind::VariableDeclaration:
      return "VariableDeclaration";
    case NodeKind::VariableDeclarator:
      return "VariableDeclarator";
    case NodeKind::ReturnStatement:
      return "ReturnStatement";
    case NodeKind::ImportDeclaration:
      return "ImportDeclaration";
    case NodeKind::Block:
      return "Block";
    case NodeKind::ExpressionStatement:
      return "ExpressionStatement";
    case NodeKind::Opaque:
      return "Opaque";
  }
  return "Opaque";
}

NodeId SyntaxTree::add_node(Node node) {
  nodes_.push_back(std::move(node));
  return static_cast<NodeId>(nodes_.size() - 1);
}

void SyntaxTree::walk(NodeId id, const std::function<bool(NodeId)> &visit) const {
  if (!visit(id)) return;
  const Node &n = nodes_[id];
  if (n.rel0 != kNoNode) walk(n.rel0, visit);
  if (n.rel1 != kNoNode) walk(n.rel1, visit);
  for (NodeId child : n.children) walk(child, visit);
}

void SyntaxTree::set_parent_links() {
  for (NodeId id = 0; id < nodes_.size(); ++id) {
    Node &n = nodes_[id];
    if (n.rel0 != kNoNode) nodes_[n.rel0].parent = id;
    if (n.rel1 != kNoNode) nodes_[n.rel1].parent = id;
    for (NodeId child : n.children) nodes_[child].parent = id;
  }
  if (!nodes_.empty()) nodes_[0].parent = kNoNode;
}

}  // namespace unleak
