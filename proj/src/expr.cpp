#include "transurf/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <utility>

namespace transurf::expr {

NodePtr constant(double v, std::size_t offset) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Constant;
  n->value = v;
  n->offset = offset;
  return n;
}

NodePtr variable(std::size_t offset) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Variable;
  n->offset = offset;
  return n;
}

NodePtr negate(NodePtr child, std::size_t offset) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Negate;
  n->children = {std::move(child)};
  n->offset = offset;
  return n;
}

NodePtr binary(NodeKind op, NodePtr lhs, NodePtr rhs, std::size_t offset) {
  auto n = std::make_shared<Node>();
  n->kind = op;
  n->children = {std::move(lhs), std::move(rhs)};
  n->offset = offset;
  return n;
}

NodePtr call(Elementary fn, NodePtr arg, std::size_t offset) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Call;
  n->function = fn;
  n->children = {std::move(arg)};
  n->offset = offset;
  return n;
}

UnknownIdentifier::UnknownIdentifier(std::size_t offset, std::string name)
    : ParseError(offset, "function name or 't'",
                 "unknown identifier '" + name + "' at offset " + std::to_string(offset)),
      name_(std::move(name)) {}

namespace {

constexpr std::array<std::pair<std::string_view, Elementary>, 10> kFunctions{{
    {"sin", Elementary::Sin},
    {"cos", Elementary::Cos},
    {"tan", Elementary::Tan},
    {"exp", Elementary::Exp},
    {"log", Elementary::Log},
    {"sqrt", Elementary::Sqrt},
    {"sinh", Elementary::Sinh},
    {"cosh", Elementary::Cosh},
    {"tanh", Elementary::Tanh},
    {"atan", Elementary::Atan},
}};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr parse() {
    if (src_.empty()) fail("expression", "empty expression");
    NodePtr root = parse_expr(0);
    skip_space();
    if (pos_ < src_.size()) {
      fail("operator or end of input",
           std::string("unexpected character '") + src_[pos_] + "'");
    }
    return root;
  }

 private:
  // Recursion depth limit keeps pathological inputs from exhausting the stack.
  static constexpr int kMaxDepth = 256;

  [[noreturn]] void fail(const std::string& expected, const std::string& what) const {
    std::ostringstream msg;
    msg << "syntax error at offset " << pos_ << ": " << what << " (expected " << expected << ")";
    throw ParseError(pos_, expected, msg.str());
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void guard(int depth) const {
    if (depth > kMaxDepth) fail("shallower nesting", "expression nested too deeply");
  }

  NodePtr parse_expr(int depth) {
    guard(depth);
    NodePtr lhs = parse_term(depth + 1);
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+')) {
        lhs = binary(NodeKind::Add, lhs, parse_term(depth + 1), at);
      } else if (accept('-')) {
        lhs = binary(NodeKind::Subtract, lhs, parse_term(depth + 1), at);
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_term(int depth) {
    guard(depth);
    NodePtr lhs = parse_unary(depth + 1);
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('*')) {
        lhs = binary(NodeKind::Multiply, lhs, parse_unary(depth + 1), at);
      } else if (accept('/')) {
        lhs = binary(NodeKind::Divide, lhs, parse_unary(depth + 1), at);
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_unary(int depth) {
    guard(depth);
    skip_space();
    const std::size_t at = pos_;
    if (accept('-')) return negate(parse_unary(depth + 1), at);
    return parse_power(depth + 1);
  }

  NodePtr parse_power(int depth) {
    guard(depth);
    NodePtr base = parse_primary(depth + 1);
    skip_space();
    const std::size_t at = pos_;
    if (accept('^')) {
      skip_space();
      const std::size_t exponent_at = pos_;
      NodePtr exponent = parse_unary(depth + 1);
      if (depends_on_variable(exponent)) {
        pos_ = exponent_at;
        fail("constant exponent", "exponent depends on t");
      }
      return binary(NodeKind::Power, base, exponent, at);
    }
    return base;
  }

  NodePtr parse_primary(int depth) {
    guard(depth);
    skip_space();
    if (pos_ >= src_.size()) fail("operand", "unexpected end of input");
    const std::size_t at = pos_;
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = parse_expr(depth + 1);
      if (!accept(')')) fail("')'", "unbalanced parenthesis");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_')) {
        ++end;
      }
      const std::string name(src_.substr(pos_, end - pos_));
      if (name == "t") {
        pos_ = end;
        return variable(at);
      }
      for (const auto& [fname, fn] : kFunctions) {
        if (name == fname) {
          pos_ = end;
          if (!accept('(')) fail("'('", "function '" + name + "' needs an argument list");
          NodePtr arg = parse_expr(depth + 1);
          if (!accept(')')) fail("')'", "unbalanced parenthesis");
          return call(fn, arg, at);
        }
      }
      throw UnknownIdentifier(at, name);
    }
    fail("operand", std::string("unexpected character '") + c + "'");
  }

  NodePtr parse_number() {
    const std::size_t at = pos_;
    std::size_t end = pos_;
    auto digits = [&] {
      while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
    };
    digits();
    if (end < src_.size() && src_[end] == '.') {
      ++end;
      digits();
    }
    if (end < src_.size() && (src_[end] == 'e' || src_[end] == 'E')) {
      std::size_t e = end + 1;
      if (e < src_.size() && (src_[e] == '+' || src_[e] == '-')) ++e;
      if (e < src_.size() && std::isdigit(static_cast<unsigned char>(src_[e]))) {
        end = e;
        digits();
      }
    }
    double v = 0.0;
    const char* first = src_.data() + pos_;
    const char* last = src_.data() + end;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) fail("number", "malformed number");
    pos_ = end;
    return constant(v, at);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

int precedence(const Node& n) {
  switch (n.kind) {
    case NodeKind::Add:
    case NodeKind::Subtract: return 1;
    case NodeKind::Multiply:
    case NodeKind::Divide: return 2;
    case NodeKind::Negate: return 3;
    case NodeKind::Power: return 4;
    case NodeKind::Constant: return n.value < 0.0 || std::signbit(n.value) ? 0 : 5;
    case NodeKind::Variable:
    case NodeKind::Call: return 5;
  }
  return 0;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void render(const Node& n, std::string& out);

void render_wrapped(const Node& n, bool wrap, std::string& out) {
  if (wrap) out += '(';
  render(n, out);
  if (wrap) out += ')';
}

void render(const Node& n, std::string& out) {
  const int p = precedence(n);
  switch (n.kind) {
    case NodeKind::Constant:
      out += format_number(n.value);
      return;
    case NodeKind::Variable:
      out += 't';
      return;
    case NodeKind::Negate:
      out += '-';
      render_wrapped(*n.children[0], precedence(*n.children[0]) < 3, out);
      return;
    case NodeKind::Call:
      out += to_string(n.function);
      out += '(';
      render(*n.children[0], out);
      out += ')';
      return;
    case NodeKind::Power:
      render_wrapped(*n.children[0], precedence(*n.children[0]) <= 4, out);
      out += '^';
      render_wrapped(*n.children[1], precedence(*n.children[1]) < 3, out);
      return;
    case NodeKind::Add:
    case NodeKind::Subtract:
    case NodeKind::Multiply:
    case NodeKind::Divide: {
      static constexpr std::array<char, 4> ops{'+', '-', '*', '/'};
      const auto idx = static_cast<int>(n.kind) - static_cast<int>(NodeKind::Add);
      render_wrapped(*n.children[0], precedence(*n.children[0]) < p, out);
      out += ops[static_cast<std::size_t>(idx)];
      render_wrapped(*n.children[1], precedence(*n.children[1]) <= p, out);
      return;
    }
  }
}

Jet3 eval_node(const Node& n, double t) {
  switch (n.kind) {
    case NodeKind::Constant: return Jet3::constant(n.value);
    case NodeKind::Variable: return Jet3::variable(t);
    case NodeKind::Negate: return -eval_node(*n.children[0], t);
    case NodeKind::Add: return eval_node(*n.children[0], t) + eval_node(*n.children[1], t);
    case NodeKind::Subtract: return eval_node(*n.children[0], t) - eval_node(*n.children[1], t);
    case NodeKind::Multiply: return eval_node(*n.children[0], t) * eval_node(*n.children[1], t);
    case NodeKind::Divide: {
      const Jet3 num = eval_node(*n.children[0], t);
      const Jet3 den = eval_node(*n.children[1], t);
      try {
        return num / den;
      } catch (const DomainError& e) {
        throw DomainError(std::string(e.what()) + " at offset " + std::to_string(n.offset), t);
      }
    }
    case NodeKind::Power: {
      const Jet3 base = eval_node(*n.children[0], t);
      const double exponent = eval_node(*n.children[1], t).c0;
      try {
        return pow(base, exponent);
      } catch (const DomainError& e) {
        throw DomainError(std::string(e.what()) + " at offset " + std::to_string(n.offset), t);
      }
    }
    case NodeKind::Call: {
      const Jet3 arg = eval_node(*n.children[0], t);
      try {
        return lift(n.function, arg);
      } catch (const DomainError& e) {
        throw DomainError(std::string(e.what()) + " in " + std::string(to_string(n.function)) +
                              " at offset " + std::to_string(n.offset),
                          t);
      }
    }
  }
  return {};
}

}  // namespace

NodePtr parse_profile(std::string_view source) { return Parser(source).parse(); }

std::string print(const NodePtr& node) {
  std::string out;
  render(*node, out);
  return out;
}

bool structurally_equal(const NodePtr& a, const NodePtr& b) {
  if (a->kind != b->kind || a->children.size() != b->children.size()) return false;
  if (a->kind == NodeKind::Constant && a->value != b->value) return false;
  if (a->kind == NodeKind::Call && a->function != b->function) return false;
  for (std::size_t i = 0; i < a->children.size(); ++i) {
    if (!structurally_equal(a->children[i], b->children[i])) return false;
  }
  return true;
}

bool depends_on_variable(const NodePtr& node) {
  if (node->kind == NodeKind::Variable) return true;
  for (const auto& c : node->children) {
    if (depends_on_variable(c)) return true;
  }
  return false;
}

Jet3 eval_jet(const NodePtr& node, double t) {
  try {
    return eval_node(*node, t);
  } catch (const DomainError& e) {
    std::ostringstream msg;
    msg.precision(17);
    msg << e.what() << " [t = " << t << "]";
    throw DomainError(msg.str(), t);
  }
}

double eval(const NodePtr& node, double t) { return eval_jet(node, t).c0; }

}  // namespace transurf::expr
