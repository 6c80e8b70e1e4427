#pragma once

// Profile expressions in the single variable `t`.
//
// Grammar (whitespace insignificant):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?
//   primary := number | 't' | func '(' expr ')' | '(' expr ')'
//   func    := sin | cos | tan | exp | log | sqrt | sinh | cosh | tanh | atan
//
// The exponent of '^' must not depend on t.

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "transurf/jet.hpp"

namespace transurf::expr {

enum class NodeKind { Constant, Variable, Negate, Add, Subtract, Multiply, Divide, Power, Call };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

/// Immutable AST node. `offset` is the byte position in the source text
/// (0 for programmatically built nodes).
struct Node {
  NodeKind kind = NodeKind::Constant;
  double value = 0.0;                 // Constant only
  Elementary function = Elementary::Sin;  // Call only
  std::vector<NodePtr> children;
  std::size_t offset = 0;
};

// Builders.
NodePtr constant(double v, std::size_t offset = 0);
NodePtr variable(std::size_t offset = 0);
NodePtr negate(NodePtr child, std::size_t offset = 0);
NodePtr binary(NodeKind op, NodePtr lhs, NodePtr rhs, std::size_t offset = 0);
NodePtr call(Elementary fn, NodePtr arg, std::size_t offset = 0);

/// Syntax error at a byte offset, or an unknown identifier.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::string expected, std::string message)
      : std::runtime_error(std::move(message)), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

class UnknownIdentifier : public ParseError {
 public:
  UnknownIdentifier(std::size_t offset, std::string name);
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

NodePtr parse_profile(std::string_view source);

/// Minimal-parenthesis rendering; parse_profile(print(n)) reproduces n
/// structurally when n holds no negative constants.
std::string print(const NodePtr& node);

bool structurally_equal(const NodePtr& a, const NodePtr& b);

bool depends_on_variable(const NodePtr& node);

/// Order-3 jet of the expression at t. Domain failures are rethrown as
/// DomainError carrying t and the offending node's source offset.
Jet3 eval_jet(const NodePtr& node, double t);

/// Plain value; same domain rules as eval_jet.
double eval(const NodePtr& node, double t);

}  // namespace transurf::expr
