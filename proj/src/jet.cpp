#include "transurf/jet.hpp"

#include <sstream>

namespace transurf {

namespace {

[[noreturn]] void domain_fail(std::string_view what, double at) {
  std::ostringstream msg;
  msg.precision(17);
  msg << what << " (argument " << at << ")";
  throw DomainError(msg.str(), at);
}

Jet3 integer_power(Jet3 base, long long n) {
  Jet3 result = Jet3::constant(1.0);
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

}  // namespace

Jet3 operator/(const Jet3& u, const Jet3& v) {
  if (v.c0 == 0.0) {
    throw DomainError("division by a jet with zero value");
  }
  const double inv = 1.0 / v.c0;
  Jet3 q;
  q.c0 = u.c0 * inv;
  q.c1 = (u.c1 - q.c0 * v.c1) * inv;
  q.c2 = (u.c2 - 2.0 * q.c1 * v.c1 - q.c0 * v.c2) * inv;
  q.c3 = (u.c3 - 3.0 * q.c2 * v.c1 - 3.0 * q.c1 * v.c2 - q.c0 * v.c3) * inv;
  return q;
}

std::string_view to_string(Elementary fn) {
  switch (fn) {
    case Elementary::Sin: return "sin";
    case Elementary::Cos: return "cos";
    case Elementary::Tan: return "tan";
    case Elementary::Exp: return "exp";
    case Elementary::Log: return "log";
    case Elementary::Sqrt: return "sqrt";
    case Elementary::Sinh: return "sinh";
    case Elementary::Cosh: return "cosh";
    case Elementary::Tanh: return "tanh";
    case Elementary::Atan: return "atan";
  }
  return "?";
}

Jet3 lift(Elementary fn, const Jet3& u) {
  const double x = u.c0;
  std::array<double, 4> d{};
  switch (fn) {
    case Elementary::Sin: {
      const double s = std::sin(x), c = std::cos(x);
      d = {s, c, -s, -c};
      break;
    }
    case Elementary::Cos: {
      const double s = std::sin(x), c = std::cos(x);
      d = {c, -s, -c, s};
      break;
    }
    case Elementary::Tan: {
      if (std::abs(std::cos(x)) < kPoleGuard) domain_fail("tan evaluated at a pole", x);
      const double t = std::tan(x);
      const double sec2 = 1.0 + t * t;
      d = {t, sec2, 2.0 * t * sec2, sec2 * (2.0 + 6.0 * t * t)};
      break;
    }
    case Elementary::Exp: {
      const double e = std::exp(x);
      d = {e, e, e, e};
      break;
    }
    case Elementary::Log: {
      if (!(x > 0.0)) domain_fail("log of a non-positive value", x);
      const double r = 1.0 / x;
      d = {std::log(x), r, -r * r, 2.0 * r * r * r};
      break;
    }
    case Elementary::Sqrt: {
      if (!(x > 0.0)) domain_fail("sqrt needs a positive argument", x);
      const double s = std::sqrt(x);
      d = {s, 0.5 / s, -0.25 / (s * x), 0.375 / (s * x * x)};
      break;
    }
    case Elementary::Sinh: {
      const double sh = std::sinh(x), ch = std::cosh(x);
      d = {sh, ch, sh, ch};
      break;
    }
    case Elementary::Cosh: {
      const double sh = std::sinh(x), ch = std::cosh(x);
      d = {ch, sh, ch, sh};
      break;
    }
    case Elementary::Tanh: {
      const double th = std::tanh(x);
      const double sech2 = 1.0 - th * th;
      d = {th, sech2, -2.0 * th * sech2, sech2 * (6.0 * th * th - 2.0)};
      break;
    }
    case Elementary::Atan: {
      const double q = 1.0 / (1.0 + x * x);
      d = {std::atan(x), q, -2.0 * x * q * q, (6.0 * x * x - 2.0) * q * q * q};
      break;
    }
  }
  return compose(d, u);
}

Jet3 pow(const Jet3& u, double p) {
  const double x = u.c0;
  if (std::isfinite(p) && p == std::trunc(p) && std::abs(p) <= 64.0) {
    const auto n = static_cast<long long>(p);
    if (n >= 0) return integer_power(u, n);
    if (x == 0.0) domain_fail("negative power of zero", x);
    return Jet3::constant(1.0) / integer_power(u, -n);
  }
  if (!(x > 0.0)) domain_fail("non-integer power needs a positive base", x);
  const double v = std::pow(x, p);
  const std::array<double, 4> d{v, p * v / x, p * (p - 1.0) * v / (x * x),
                                p * (p - 1.0) * (p - 2.0) * v / (x * x * x)};
  return compose(d, u);
}

}  // namespace transurf
