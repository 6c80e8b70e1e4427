#pragma once

// Sparse multivariate polynomials with exact rational coefficients over the
// jet indeterminates f', f'', f''', f'''' and g', ..., g'''' plus a handful of
// symbolic constants.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace transurf::algebra {

using Rational = mpq_class;

enum class Var : std::uint8_t {
  f1, f2, f3, f4,  // f', f'', f''', f''''
  g1, g2, g3, g4,  // g', g'', g''', g''''
  a, b,            // Weingarten coefficients
  lambda, m,       // separation constant; common constant value of f'' = g''
  w2,              // formal stand-in for W^2 when it must be substituted later
};

inline constexpr std::size_t kVarCount = 13;

std::string_view name(Var v);

struct Monomial {
  std::array<std::uint8_t, kVarCount> exp{};

  static Monomial of(Var v, unsigned power = 1);

  std::uint8_t operator[](Var v) const { return exp[static_cast<std::size_t>(v)]; }
  unsigned degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& o) const;
  /// Requires divides(*this, o).
  Monomial operator/(const Monomial& o) const;
  static Monomial gcd(const Monomial& x, const Monomial& y);
  static Monomial lcm(const Monomial& x, const Monomial& y);

  std::string to_string() const;

  auto operator<=>(const Monomial&) const = default;
};

using Point = std::array<Rational, kVarCount>;

class Poly {
 public:
  using Terms = std::map<Monomial, Rational>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT: constants convert implicitly
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT
  Poly(int c) : Poly(Rational(c)) {}   // NOLINT

  static Poly var(Var v);
  static Poly term(const Monomial& m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  /// Greatest term in lexicographic exponent order; requires !is_zero().
  const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
  const Rational& leading_coefficient() const { return terms_.rbegin()->second; }
  const Monomial& trailing_monomial() const { return terms_.begin()->first; }
  /// Coefficient of the constant term (0 if absent).
  Rational constant_term() const;

  /// Largest monomial dividing every term.
  Monomial content() const;
  unsigned degree_in(Var v) const;
  bool depends_on(Var v) const { return degree_in(v) > 0; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly x, const Poly& y) { return x += y; }
  friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
  friend Poly operator*(const Poly& x, const Poly& y);

  Poly scaled(const Rational& c) const;
  Poly times(const Monomial& m) const;
  /// Requires m to divide every term.
  Poly divided_by(const Monomial& m) const;
  Poly pow(unsigned n) const;

  /// Quotient when d divides *this exactly, nullopt otherwise.
  std::optional<Poly> divide_exact(const Poly& d) const;

  /// Terms grouped by their exponent in v, with v removed.
  std::map<unsigned, Poly> collect(Var v) const;

  Rational evaluate(const Point& point) const;

  /// Human-readable form, largest terms first; at most max_terms terms.
  std::string to_string(std::size_t max_terms = SIZE_MAX) const;

  friend bool operator==(const Poly& x, const Poly& y) { return x.terms_ == y.terms_; }

 private:
  void add_term(const Monomial& m, const Rational& c);

  Terms terms_;
};

}  // namespace transurf::algebra
