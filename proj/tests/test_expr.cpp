#include <doctest.h>

#include <cmath>
#include <optional>
#include <random>

#include "transurf/expr.hpp"

using namespace transurf;
using namespace transurf::expr;

namespace {

NodePtr random_tree(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 1 ? 1 : 9);
  std::uniform_real_distribution<double> value(0.0, 3.0);
  switch (pick(rng)) {
    case 0: return constant(std::round(value(rng) * 100) / 100);
    case 1: return variable();
    case 2: return negate(random_tree(rng, depth - 1));
    case 3: return binary(NodeKind::Add, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
    case 4: return binary(NodeKind::Subtract, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
    case 5: return binary(NodeKind::Multiply, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
    case 6: return binary(NodeKind::Divide, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
    case 7: {
      std::uniform_int_distribution<int> e(-2, 3);
      NodePtr exponent = constant(std::abs(e(rng)));
      if (e(rng) < 0) exponent = negate(exponent);
      return binary(NodeKind::Power, random_tree(rng, depth - 1), exponent);
    }
    default: {
      std::uniform_int_distribution<int> fn(0, 9);
      return call(static_cast<Elementary>(fn(rng)), random_tree(rng, depth - 1));
    }
  }
}

std::optional<double> try_eval(const NodePtr& n, double t) {
  try {
    return eval(n, t);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

}  // namespace

TEST_CASE("parser examples") {
  CHECK(structurally_equal(parse_profile("-log(cos(t))"),
                           negate(call(Elementary::Log, call(Elementary::Cos, variable())))));
  CHECK(structurally_equal(
      parse_profile("1 + 2*t^2"),
      binary(NodeKind::Add, constant(1),
             binary(NodeKind::Multiply, constant(2), binary(NodeKind::Power, variable(), constant(2))))));
  try {
    (void)parse_profile("2*");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
    CHECK(e.expected() == "operand");
  }
}

TEST_CASE("precedence and associativity") {
  // unary minus binds looser than ^
  CHECK(structurally_equal(parse_profile("-t^2"), negate(binary(NodeKind::Power, variable(), constant(2)))));
  // ^ is right associative
  CHECK(structurally_equal(parse_profile("t^2^3"),
                           binary(NodeKind::Power, variable(), binary(NodeKind::Power, constant(2), constant(3)))));
  // - and / are left associative
  CHECK(structurally_equal(parse_profile("t-1-2"),
                           binary(NodeKind::Subtract, binary(NodeKind::Subtract, variable(), constant(1)), constant(2))));
  CHECK(structurally_equal(parse_profile("t/2/3"),
                           binary(NodeKind::Divide, binary(NodeKind::Divide, variable(), constant(2)), constant(3))));
  CHECK(structurally_equal(parse_profile(" t *\t( 1+t ) "), parse_profile("t*(1+t)")));
  CHECK(eval(parse_profile("2^-1"), 0) == 0.5);
}

TEST_CASE("syntax and identifier errors") {
  CHECK_THROWS_AS(parse_profile(""), ParseError);
  CHECK_THROWS_AS(parse_profile("(t"), ParseError);
  CHECK_THROWS_AS(parse_profile("t)"), ParseError);
  CHECK_THROWS_AS(parse_profile("sin t"), ParseError);
  CHECK_THROWS_AS(parse_profile("t^t"), ParseError);
  try {
    (void)parse_profile("1 + foo(t)");
    FAIL("expected UnknownIdentifier");
  } catch (const UnknownIdentifier& e) {
    CHECK(e.name() == "foo");
    CHECK(e.offset() == 4);
  }
  CHECK_THROWS_AS(parse_profile("x^2"), UnknownIdentifier);
}

TEST_CASE("jet evaluation examples") {
  CHECK(eval_jet(parse_profile("t^2"), 1) == Jet3(1, 2, 2, 0));
  const Jet3 lc = eval_jet(parse_profile("-log(cos(t))"), 0);
  CHECK(lc.c0 == doctest::Approx(0).epsilon(1e-15));
  CHECK(lc.c1 == doctest::Approx(0).epsilon(1e-15));
  CHECK(lc.c2 == doctest::Approx(1).epsilon(1e-15));
  CHECK(lc.c3 == doctest::Approx(0).epsilon(1e-15));
  const Jet3 one = eval_jet(parse_profile("sin(t)^2+cos(t)^2"), 0.7);
  CHECK(std::abs(one.c0 - 1) < 1e-13);
  CHECK(std::abs(one.c1) < 1e-13);
  CHECK(std::abs(one.c2) < 1e-13);
  CHECK(std::abs(one.c3) < 1e-13);
}

TEST_CASE("domain errors carry the coordinate") {
  try {
    (void)eval_jet(parse_profile("1 + log(t)"), -0.5);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(e.point() == -0.5);
  }
  CHECK_THROWS_AS(eval(parse_profile("t^0.5"), -1), DomainError);
  CHECK(eval(parse_profile("t^0.5"), 4) == doctest::Approx(2));
  CHECK(eval(parse_profile("t^3"), -2) == -8);
}

TEST_CASE("print/parse round trip on random trees") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> point(-2, 2);
  int evaluated = 0;
  for (int i = 0; i < 200; ++i) {
    const NodePtr tree = random_tree(rng, 6);
    const std::string text = print(tree);
    INFO(text);
    const NodePtr back = parse_profile(text);
    CHECK(structurally_equal(tree, back));
    for (int k = 0; k < 10; ++k) {
      const double t = point(rng);
      const auto a = try_eval(tree, t), b = try_eval(back, t);
      REQUIRE(a.has_value() == b.has_value());
      if (a && !std::isnan(*a)) {
        CHECK(*a == *b);
        ++evaluated;
      }
    }
  }
  CHECK(evaluated > 200);
}

TEST_CASE("arbitrary bytes give an AST or a structured error") {
  std::mt19937_64 rng(99);
  const std::string alphabet = "t0123456789.e+-*/^() sincoxplqrhtaE\t\n\x01\xff";
  std::uniform_int_distribution<std::size_t> len(0, 24), ch(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> byte(0, 255);
  int parsed = 0;
  for (int i = 0; i < 20000; ++i) {
    std::string s(len(rng), ' ');
    for (auto& c : s) c = (i % 2) ? alphabet[ch(rng)] : static_cast<char>(byte(rng));
    try {
      const NodePtr n = parse_profile(s);
      CHECK(n != nullptr);
      ++parsed;
    } catch (const ParseError& e) {
      CHECK(e.offset() <= s.size());
    }
  }
  CHECK(parsed > 0);
}
