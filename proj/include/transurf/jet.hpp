#pragma once

// Third-order jets: value and first three derivatives of a one-variable
// function at a point. Arithmetic follows the Leibniz rule and elementary
// functions compose through Faa di Bruno, both truncated at order 3.

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace transurf {

/// Raised when a jet operation leaves the domain of the underlying real
/// function. `point` is the evaluation coordinate when known, NaN otherwise.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what,
                       double point = std::numeric_limits<double>::quiet_NaN())
      : std::domain_error(what), point_(point) {}

  double point() const noexcept { return point_; }

 private:
  double point_;
};

struct Jet3 {
  double c0 = 0.0;  // value
  double c1 = 0.0;  // first derivative
  double c2 = 0.0;  // second derivative
  double c3 = 0.0;  // third derivative

  constexpr Jet3() = default;
  constexpr Jet3(double v0, double v1 = 0.0, double v2 = 0.0, double v3 = 0.0)
      : c0(v0), c1(v1), c2(v2), c3(v3) {}

  /// The jet of the identity function at t.
  static constexpr Jet3 variable(double t) { return {t, 1.0, 0.0, 0.0}; }
  static constexpr Jet3 constant(double v) { return {v, 0.0, 0.0, 0.0}; }

  constexpr std::array<double, 4> coefficients() const { return {c0, c1, c2, c3}; }

  friend constexpr bool operator==(const Jet3&, const Jet3&) = default;
};

constexpr Jet3 operator-(const Jet3& u) { return {-u.c0, -u.c1, -u.c2, -u.c3}; }

constexpr Jet3 operator+(const Jet3& u, const Jet3& v) {
  return {u.c0 + v.c0, u.c1 + v.c1, u.c2 + v.c2, u.c3 + v.c3};
}

constexpr Jet3 operator-(const Jet3& u, const Jet3& v) {
  return {u.c0 - v.c0, u.c1 - v.c1, u.c2 - v.c2, u.c3 - v.c3};
}

constexpr Jet3 operator*(const Jet3& u, const Jet3& v) {
  return {u.c0 * v.c0,
          u.c1 * v.c0 + u.c0 * v.c1,
          u.c2 * v.c0 + 2.0 * u.c1 * v.c1 + u.c0 * v.c2,
          u.c3 * v.c0 + 3.0 * u.c2 * v.c1 + 3.0 * u.c1 * v.c2 + u.c0 * v.c3};
}

constexpr Jet3 operator*(double s, const Jet3& u) { return {s * u.c0, s * u.c1, s * u.c2, s * u.c3}; }
constexpr Jet3 operator*(const Jet3& u, double s) { return s * u; }

/// Quotient u/v, obtained by solving u = q*v order by order.
/// Throws DomainError when v.c0 == 0.
Jet3 operator/(const Jet3& u, const Jet3& v);

inline Jet3& operator+=(Jet3& u, const Jet3& v) { return u = u + v; }
inline Jet3& operator-=(Jet3& u, const Jet3& v) { return u = u - v; }
inline Jet3& operator*=(Jet3& u, const Jet3& v) { return u = u * v; }
inline Jet3& operator/=(Jet3& u, const Jet3& v) { return u = u / v; }

enum class Elementary { Sin, Cos, Tan, Exp, Log, Sqrt, Sinh, Cosh, Tanh, Atan };

std::string_view to_string(Elementary fn);

/// Points closer than this to a pole of tan are rejected.
inline constexpr double kPoleGuard = 1e-8;

/// Composes `fn` with the function represented by `u`.
Jet3 lift(Elementary fn, const Jet3& u);

/// u^p for a real exponent. Non-integer exponents need u.c0 > 0; negative
/// integer exponents need u.c0 != 0.
Jet3 pow(const Jet3& u, double p);

/// Chain rule through order 3 given phi, phi', phi'', phi''' at u.c0.
constexpr Jet3 compose(const std::array<double, 4>& phi, const Jet3& u) {
  return {phi[0],
          phi[1] * u.c1,
          phi[2] * u.c1 * u.c1 + phi[1] * u.c2,
          phi[3] * u.c1 * u.c1 * u.c1 + 3.0 * phi[2] * u.c1 * u.c2 + phi[1] * u.c3};
}

inline Jet3 sin(const Jet3& u) { return lift(Elementary::Sin, u); }
inline Jet3 cos(const Jet3& u) { return lift(Elementary::Cos, u); }
inline Jet3 tan(const Jet3& u) { return lift(Elementary::Tan, u); }
inline Jet3 exp(const Jet3& u) { return lift(Elementary::Exp, u); }
inline Jet3 log(const Jet3& u) { return lift(Elementary::Log, u); }
inline Jet3 sqrt(const Jet3& u) { return lift(Elementary::Sqrt, u); }
inline Jet3 sinh(const Jet3& u) { return lift(Elementary::Sinh, u); }
inline Jet3 cosh(const Jet3& u) { return lift(Elementary::Cosh, u); }
inline Jet3 tanh(const Jet3& u) { return lift(Elementary::Tanh, u); }
inline Jet3 atan(const Jet3& u) { return lift(Elementary::Atan, u); }

}  // namespace transurf
