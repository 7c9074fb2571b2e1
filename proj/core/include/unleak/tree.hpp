//===--- tree.hpp - lossless syntax trees over source text -----*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "unleak/text.hpp"

namespace unleak {

/// Input flavor, inferred from the file extension.
/// Typed flavors additionally accept visibility modifiers and type
/// annotations; decorators and class properties parse in every dialect.
enum class SourceDialect : std::uint8_t { Plain, Jsx, Typed, TypedJsx };

SourceDialect dialect_from_path(std::string_view path);
bool dialect_allows_jsx(SourceDialect d);
bool dialect_is_typed(SourceDialect d);
std::string_view dialect_name(SourceDialect d);

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

enum class NodeKind : std::uint8_t {
  Root,
  ClassDeclaration,
  ClassMethod,
  ClassProperty,
  Decorator,
  FunctionDeclaration,  // also covers function expressions (kExpressionForm)
  ArrowFunction,
  CallExpression,
  MemberExpression,
  Identifier,
  StringLiteral,
  NumberLiteral,
  RegexLiteral,
  TemplateLiteral,
  AssignmentExpression,
  VariableDeclaration,
  VariableDeclarator,
  ReturnStatement,
  ImportDeclaration,
  Block,
  ExpressionStatement,
  // Anything structurally traversed but not otherwise modeled: control flow,
  // binary chains, object/array literals, JSX elements, TS-only statements.
  Opaque,
};

std::string_view node_kind_name(NodeKind kind);

// Node flags.
inline constexpr std::uint16_t kStatic = 1 << 0;
inline constexpr std::uint16_t kConstructor = 1 << 1;
inline constexpr std::uint16_t kBlockBody = 1 << 2;       // arrow body is a block
inline constexpr std::uint16_t kComputed = 1 << 3;        // member access a[b]
inline constexpr std::uint16_t kNew = 1 << 4;             // call is `new X(...)`
inline constexpr std::uint16_t kExpressionForm = 1 << 5;  // function/class expression
inline constexpr std::uint16_t kParen = 1 << 6;           // transparent ( expr )
inline constexpr std::uint16_t kAccessor = 1 << 7;        // getter/setter method
inline constexpr std::uint16_t kDefaultExport = 1 << 8;
inline constexpr std::uint16_t kOptionalMember = 1 << 9;  // a?.b

/// One tree node. Role conventions per kind:
///  - ClassDeclaration: name; rel0 = heritage expr; aux_span = `{...}` body;
///    children = decorators, then members.
///  - ClassMethod: name; rel0 = body Block (kNoNode for overload signatures);
///    children = zero-width Identifier markers for parameter names.
///  - ClassProperty: name; rel0 = value expr or kNoNode.
///  - Decorator: rel0 = decorated expression (identifier/member/call).
///  - FunctionDeclaration: name; rel0 = body Block; children = parameter
///    name markers as for ClassMethod.
///  - ArrowFunction: rel0 = body (Block when kBlockBody, else expression);
///    children = parameter name markers.
///  - CallExpression: rel0 = callee; children = arguments.
///  - MemberExpression: rel0 = object; name = property (empty if computed;
///    computed index expression is children[0]).
///  - AssignmentExpression: rel0 = target, rel1 = value; name = operator.
///  - VariableDeclaration: name = `const`/`let`/`var`; children = declarators.
///  - VariableDeclarator: name = bound identifier (empty for patterns);
///    rel0 = initializer or kNoNode.
///  - ReturnStatement: rel0 = argument or kNoNode.
///  - ImportDeclaration: str_value = module specifier; aux_span = named
///    import braces (empty span if none); children = named Identifiers.
///  - StringLiteral: str_value = decoded value.
struct Node {
  NodeKind kind = NodeKind::Opaque;
  std::uint16_t flags = 0;
  Span span;
  Span aux_span;
  NodeId parent = kNoNode;
  NodeId rel0 = kNoNode;
  NodeId rel1 = kNoNode;
  std::string name;
  std::string str_value;
  std::vector<NodeId> children;

  bool has_flag(std::uint16_t f) const { return (flags & f) != 0; }
};

/// Raised when input is not syntactically valid for its dialect.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::uint32_t line, std::uint32_t column, const std::string &message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + message),
        line(line),
        column(column),
        message(message) {}

  std::uint32_t line;
  std::uint32_t column;
  std::string message;
};

/// Lossless parse result: nodes are spans over the unmodified source, so
/// rendering the tree reproduces the input byte for byte.
class SyntaxTree {
 public:
  SyntaxTree(std::string source, SourceDialect dialect)
      : source_(std::move(source)), dialect_(dialect), line_index_(source_) {}

  const std::string &source() const { return source_; }
  SourceDialect dialect() const { return dialect_; }
  const LineIndex &lines() const { return line_index_; }

  NodeId root() const { return 0; }
  const Node &node(NodeId id) const { return nodes_[id]; }
  std::size_t node_count() const { return nodes_.size(); }

  std::string_view text(NodeId id) const {
    return slice(source_, nodes_[id].span);
  }
  std::string_view text(const Span &span) const { return slice(source_, span); }

  /// Rendering the unmodified tree is the identity on the source.
  const std::string &render() const { return source_; }

  /// Preorder walk of the subtree at `id`. The visitor returns false to
  /// skip a node's children.
  void walk(NodeId id, const std::function<bool(NodeId)> &visit) const;

  // Construction interface, used by the parser.
  NodeId add_node(Node node);
  Node &mutable_node(NodeId id) { return nodes_[id]; }
  void set_parent_links();

 private:
  std::string source_;
  SourceDialect dialect_;
  LineIndex line_index_;
  std::vector<Node> nodes_;
};

/// Parses one file. Throws ParseError on malformed input; constructs not
/// needed for leak detection are kept as traversable opaque spans.
SyntaxTree parse(std::string source, SourceDialect dialect);

}  // namespace unleak
