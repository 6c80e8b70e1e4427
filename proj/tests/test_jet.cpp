#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "transurf/jet.hpp"

using namespace transurf;

namespace {

void check_jet(const Jet3& j, const Jet3& want, double tol) {
  CHECK(j.c0 == doctest::Approx(want.c0).epsilon(tol));
  CHECK(j.c1 == doctest::Approx(want.c1).epsilon(tol));
  CHECK(j.c2 == doctest::Approx(want.c2).epsilon(tol));
  CHECK(j.c3 == doctest::Approx(want.c3).epsilon(tol));
}

// Central differences in extended precision: first, second and third derivative.
std::array<double, 3> central(const std::function<long double(long double)>& f, long double x, long double h) {
  const long double fm2 = f(x - 2 * h), fm1 = f(x - h), f0 = f(x), fp1 = f(x + h), fp2 = f(x + 2 * h);
  return {static_cast<double>((fp1 - fm1) / (2 * h)), static_cast<double>((fp1 - 2 * f0 + fm1) / (h * h)),
          static_cast<double>((fp2 - 2 * fp1 + 2 * fm1 - fm2) / (2 * h * h * h))};
}

bool close(double got, double want, double rel, double abs_near_zero) {
  return std::abs(got - want) <= std::max(rel * std::abs(want), abs_near_zero);
}

}  // namespace

TEST_CASE("products follow the Leibniz rule") {
  const Jet3 t = Jet3::variable(2.0);
  CHECK(t * t == Jet3(4, 4, 2, 0));
  CHECK(Jet3(1) / Jet3(1) == Jet3(1, 0, 0, 0));

  const Jet3 s = sin(Jet3::variable(0.3)), c = cos(Jet3::variable(0.3));
  const Jet3 one = s * s + c * c;
  CHECK(std::abs(one.c0 - 1) < 1e-14);
  CHECK(std::abs(one.c1) < 1e-14);
  CHECK(std::abs(one.c2) < 1e-14);
  CHECK(std::abs(one.c3) < 1e-14);
}

TEST_CASE("hand-differentiated lifts") {
  // -log(cos t) at 0: tan 0, sec^2 0, 2 sec^2 tan at 0.
  check_jet(-log(cos(Jet3::variable(0.0))), Jet3(0, 0, 1, 0), 1e-15);
  check_jet(exp(Jet3::variable(0.0)), Jet3(1, 1, 1, 1), 1e-15);
  check_jet(log(Jet3::variable(0.5)), Jet3(std::log(0.5), 2, -4, 16), 1e-15);
  check_jet(sqrt(Jet3::variable(4.0)), Jet3(2, 0.25, -1.0 / 32, 3.0 / 256), 1e-15);
  check_jet(pow(Jet3::variable(2.0), 3), Jet3(8, 12, 12, 6), 1e-15);
  check_jet(pow(Jet3::variable(2.0), -1), Jet3(0.5, -0.25, 0.25, -0.375), 1e-15);
}

TEST_CASE("domain violations") {
  CHECK_THROWS_AS(Jet3(1) / Jet3(0, 1), DomainError);
  CHECK_THROWS_AS(log(Jet3::variable(0.0)), DomainError);
  CHECK_THROWS_AS(log(Jet3::variable(-1.0)), DomainError);
  CHECK_THROWS_AS(sqrt(Jet3::variable(-1e-3)), DomainError);
  CHECK_THROWS_AS(tan(Jet3::variable(std::acos(0.0))), DomainError);
  CHECK_THROWS_AS(pow(Jet3::variable(-2.0), 0.5), DomainError);
  CHECK_THROWS_AS(pow(Jet3::variable(0.0), -2), DomainError);
  try {
    (void)log(Jet3::variable(-0.25));
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(e.point() == -0.25);
  }
}

TEST_CASE("lifts agree with central finite differences") {
  struct Case {
    Elementary fn;
    double lo, hi;
    long double (*scalar)(long double);
  };
  const Case cases[] = {
      {Elementary::Sin, -3, 3, [](long double x) { return std::sin(x); }},
      {Elementary::Cos, -3, 3, [](long double x) { return std::cos(x); }},
      {Elementary::Tan, -1.2, 1.2, [](long double x) { return std::tan(x); }},
      {Elementary::Exp, -2, 2, [](long double x) { return std::exp(x); }},
      {Elementary::Log, 0.2, 4, [](long double x) { return std::log(x); }},
      {Elementary::Sqrt, 0.2, 4, [](long double x) { return std::sqrt(x); }},
      {Elementary::Sinh, -2, 2, [](long double x) { return std::sinh(x); }},
      {Elementary::Cosh, -2, 2, [](long double x) { return std::cosh(x); }},
      {Elementary::Tanh, -2, 2, [](long double x) { return std::tanh(x); }},
      {Elementary::Atan, -3, 3, [](long double x) { return std::atan(x); }},
  };
  std::mt19937_64 rng(11);
  for (const auto& c : cases) {
    std::uniform_real_distribution<double> pick(c.lo, c.hi);
    for (int i = 0; i < 100; ++i) {
      const double x = pick(rng);
      const Jet3 j = lift(c.fn, Jet3::variable(x));
      const auto d = central(c.scalar, x, 1e-4);
      INFO(to_string(c.fn), " at ", x);
      CHECK(close(j.c0, static_cast<double>(c.scalar(x)), 1e-15, 1e-300));
      CHECK(close(j.c1, d[0], 1e-5, 1e-7));
      CHECK(close(j.c2, d[1], 1e-5, 1e-7));
      CHECK(close(j.c3, d[2], 1e-5, 1e-7));
    }
  }
}

TEST_CASE("ring axioms") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coord(-2, 2);
  auto random_jet = [&] { return Jet3(coord(rng), coord(rng), coord(rng), coord(rng)); };
  for (int i = 0; i < 1000; ++i) {
    const Jet3 u = random_jet(), v = random_jet(), w = random_jet();
    const Jet3 lhs = (u + v) * w, rhs = u * w + v * w;
    for (int k = 0; k < 4; ++k) CHECK(std::abs(lhs.coefficients()[k] - rhs.coefficients()[k]) < 1e-13);
  }
}

// Division amplifies rounding in the product by up to (|v1|/|v0|)^3, so the
// absolute 1e-12 bound is checked on unit-box jets. Wider jets get a bound
// scaled by that factor.
TEST_CASE("division undoes multiplication") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(-1, 1), wide(-2, 2);
  int checked = 0;
  for (int i = 0; i < 20000; ++i) {
    const Jet3 u(unit(rng), unit(rng), unit(rng), unit(rng)), v(unit(rng), unit(rng), unit(rng), unit(rng));
    if (std::abs(v.c0) <= 0.1) continue;
    ++checked;
    const Jet3 back = (u * v) / v;
    for (int k = 0; k < 4; ++k) REQUIRE(std::abs(back.coefficients()[k] - u.coefficients()[k]) < 1e-12);
  }
  CHECK(checked > 15000);
  for (int i = 0; i < 20000; ++i) {
    const Jet3 u(wide(rng), wide(rng), wide(rng), wide(rng)), v(wide(rng), wide(rng), wide(rng), wide(rng));
    if (std::abs(v.c0) <= 0.1) continue;
    const double ratio = 1 + (std::abs(v.c1) + std::abs(v.c2) + std::abs(v.c3)) / std::abs(v.c0);
    const Jet3 back = (u * v) / v;
    for (int k = 0; k < 4; ++k) {
      REQUIRE(std::abs(back.coefficients()[k] - u.coefficients()[k]) < 1e-14 * ratio * ratio * ratio + 1e-12);
    }
  }
}
