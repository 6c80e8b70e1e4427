#pragma once

// Elements A + B*S of the quadratic extension S^2 = W over rational
// functions, and the x/y derivations acting on all three carriers.

#include <cstdint>

#include "transurf/algebra/ratfunc.hpp"

namespace transurf::algebra {

class SqrtW {
 public:
  SqrtW() = default;
  SqrtW(RatFunc a) : a_(std::move(a)) {}  // NOLINT: rational functions embed
  SqrtW(const Poly& a) : a_(a) {}         // NOLINT
  SqrtW(int c) : a_(c) {}                 // NOLINT
  SqrtW(RatFunc a, RatFunc b, Poly w);

  /// The element S itself.
  static SqrtW root(const Poly& w) { return SqrtW(RatFunc(), RatFunc(1), w); }

  const RatFunc& rational_part() const { return a_; }
  const RatFunc& root_part() const { return b_; }
  /// Zero when no W has been attached yet (pure rational elements).
  const Poly& radicand() const { return w_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  SqrtW operator-() const { return SqrtW(-a_, -b_, w_); }
  SqrtW& operator+=(const SqrtW& o);
  SqrtW& operator-=(const SqrtW& o);
  SqrtW& operator*=(const SqrtW& o);
  SqrtW& operator/=(const SqrtW& o);
  friend SqrtW operator+(SqrtW x, const SqrtW& y) { return x += y; }
  friend SqrtW operator-(SqrtW x, const SqrtW& y) { return x -= y; }
  friend SqrtW operator*(SqrtW x, const SqrtW& y) { return x *= y; }
  friend SqrtW operator/(SqrtW x, const SqrtW& y) { return x /= y; }

  SqrtW inverse() const;
  SqrtW pow(int n) const;

  /// Replaces v by value. Throws std::invalid_argument if W depends on v.
  SqrtW substitute(Var v, const SqrtW& value) const;

  std::string to_string(std::size_t max_terms = SIZE_MAX) const;

 private:
  void adopt(const Poly& w);

  RatFunc a_;
  RatFunc b_;
  Poly w_;
};

enum class Axis { X, Y };

/// d/dx or d/dy on the jet indeterminates: f_k -> f_{k+1} under X, g_k ->
/// g_{k+1} under Y; a, b, lambda and m are constants. The formal symbol w2
/// differentiates as W^2 for the W given at construction.
class Derivation {
 public:
  explicit Derivation(Axis axis, Poly w = {});

  Axis axis() const { return axis_; }
  /// Image of a single indeterminate. Throws std::domain_error for f4 under X
  /// and g4 under Y (no fifth derivative is tracked).
  Poly image(Var v) const;

  Poly operator()(const Poly& p) const;
  RatFunc operator()(const RatFunc& r) const;
  SqrtW operator()(const SqrtW& e) const;

 private:
  Axis axis_;
  Poly w_;
};

struct IdentityResult {
  bool identical = false;
  int evaluations = 0;
  int resampled = 0;
};

/// Schwartz-Zippel test of lhs == rhs: rational and root parts are compared
/// separately at `samples` random rational points (numerators and
/// denominators bounded by 10^6). Points hitting a vanishing denominator are
/// redrawn; throws std::runtime_error after 64 consecutive redraws.
IdentityResult identity_test(const SqrtW& lhs, const SqrtW& rhs, std::uint64_t seed, int samples);

/// True iff p evaluates to zero at every sampled point.
bool poly_identity_test(const SqrtW& p, std::uint64_t seed, int samples);

}  // namespace transurf::algebra
