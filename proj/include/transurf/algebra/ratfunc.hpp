#pragma once

// Rational functions in the jet indeterminates. The denominator is kept
// factored: a monomial times a product of monic non-monomial polynomials
// raised to positive powers. Cancellation is attempted only against those
// factors, which is enough for canonical zero testing (the numerator is zero
// iff the function is) and keeps expression swell down.

#include <optional>
#include <string>
#include <vector>

#include "transurf/algebra/poly.hpp"

namespace transurf::algebra {

struct Factor {
  Poly poly;  // monic, no monomial content, non-constant
  unsigned exponent = 1;
};

class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(Poly numerator);  // NOLINT: polynomials convert implicitly
  RatFunc(const Rational& c) : RatFunc(Poly(c)) {}  // NOLINT
  RatFunc(int c) : RatFunc(Poly(c)) {}              // NOLINT

  static RatFunc var(Var v) { return RatFunc(Poly::var(v)); }
  /// n / d; throws std::domain_error when d is zero.
  static RatFunc quotient(const Poly& n, const Poly& d);

  const Poly& numerator() const { return num_; }
  const Monomial& denominator_monomial() const { return den_mono_; }
  const std::vector<Factor>& denominator_factors() const { return den_; }
  /// Expanded denominator.
  Poly denominator() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_mono_.is_one() && den_.empty(); }
  bool depends_on(Var v) const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc x, const RatFunc& y) { return x += y; }
  friend RatFunc operator-(RatFunc x, const RatFunc& y) { return x -= y; }
  friend RatFunc operator*(RatFunc x, const RatFunc& y) { return x *= y; }
  friend RatFunc operator/(RatFunc x, const RatFunc& y) { return x /= y; }

  RatFunc inverse() const;
  RatFunc pow(int n) const;

  /// Value at a point, or nullopt when the denominator vanishes there.
  std::optional<Rational> evaluate(const Point& point) const;

  /// Replaces v by value everywhere.
  RatFunc substitute(Var v, const RatFunc& value) const;

  std::string to_string(std::size_t max_terms = SIZE_MAX) const;

 private:
  /// Multiplies the denominator by p (non-zero) without expanding.
  void divide_by_poly(const Poly& p, unsigned exponent = 1);
  void normalize();

  Poly num_;
  Monomial den_mono_;
  std::vector<Factor> den_;
};

}  // namespace transurf::algebra
