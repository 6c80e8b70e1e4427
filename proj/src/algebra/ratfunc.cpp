#include "transurf/algebra/ratfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace transurf::algebra {

RatFunc::RatFunc(Poly numerator) : num_(std::move(numerator)) {}

RatFunc RatFunc::quotient(const Poly& n, const Poly& d) {
  RatFunc r(n);
  r.divide_by_poly(d);
  r.normalize();
  return r;
}

Poly RatFunc::denominator() const {
  Poly d = Poly::term(den_mono_, 1);
  for (const auto& f : den_) d *= f.poly.pow(f.exponent);
  return d;
}

bool RatFunc::depends_on(Var v) const {
  if (num_.depends_on(v) || den_mono_[v] > 0) return true;
  return std::any_of(den_.begin(), den_.end(), [v](const Factor& f) { return f.poly.depends_on(v); });
}

void RatFunc::divide_by_poly(const Poly& p, unsigned exponent) {
  if (p.is_zero()) throw std::domain_error("division by the zero rational function");
  if (exponent == 0) return;
  const Monomial m = p.content();
  for (unsigned i = 0; i < exponent; ++i) den_mono_ = den_mono_ * m;
  Poly rest = p.divided_by(m);
  const Rational lc = rest.leading_coefficient();
  Rational scale = 1;
  for (unsigned i = 0; i < exponent; ++i) scale *= lc;
  num_ = num_.scaled(1 / scale);
  if (rest.is_constant()) return;
  rest = rest.scaled(1 / lc);
  for (auto& f : den_) {
    if (f.poly == rest) {
      f.exponent += exponent;
      return;
    }
  }
  den_.push_back({std::move(rest), exponent});
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_mono_ = {};
    den_.clear();
    return;
  }
  const Monomial g = Monomial::gcd(num_.content(), den_mono_);
  if (!g.is_one()) {
    num_ = num_.divided_by(g);
    den_mono_ = den_mono_ / g;
  }
  for (auto& f : den_) {
    while (f.exponent > 0) {
      auto q = num_.divide_exact(f.poly);
      if (!q) break;
      num_ = std::move(*q);
      --f.exponent;
    }
  }
  std::erase_if(den_, [](const Factor& f) { return f.exponent == 0; });
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

namespace {

// Multiplier turning the denominator of x into the common denominator whose
// monomial part is mono and whose factors are `factors`.
Poly lift_factor(const RatFunc& x, const Monomial& mono, const std::vector<Factor>& factors) {
  Poly m = Poly::term(mono / x.denominator_monomial(), 1);
  for (const auto& f : factors) {
    unsigned have = 0;
    for (const auto& g : x.denominator_factors()) {
      if (g.poly == f.poly) have = g.exponent;
    }
    if (f.exponent > have) m *= f.poly.pow(f.exponent - have);
  }
  return m;
}

}  // namespace

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_mono_ == o.den_mono_ && den_.empty() && o.den_.empty()) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  const Monomial mono = Monomial::lcm(den_mono_, o.den_mono_);
  std::vector<Factor> factors = den_;
  for (const auto& g : o.den_) {
    auto it = std::find_if(factors.begin(), factors.end(), [&](const Factor& f) { return f.poly == g.poly; });
    if (it == factors.end()) {
      factors.push_back(g);
    } else {
      it->exponent = std::max(it->exponent, g.exponent);
    }
  }
  Poly n = num_ * lift_factor(*this, mono, factors) + o.num_ * lift_factor(o, mono, factors);
  num_ = std::move(n);
  den_mono_ = mono;
  den_ = std::move(factors);
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  num_ *= o.num_;
  den_mono_ = den_mono_ * o.den_mono_;
  for (const auto& g : o.den_) {
    auto it = std::find_if(den_.begin(), den_.end(), [&](const Factor& f) { return f.poly == g.poly; });
    if (it == den_.end()) {
      den_.push_back(g);
    } else {
      it->exponent += g.exponent;
    }
  }
  normalize();
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("division by the zero rational function");
  RatFunc r(denominator());
  r.divide_by_poly(num_);
  r.normalize();
  return r;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RatFunc result(1);
  RatFunc base = *this;
  auto k = static_cast<unsigned>(n);
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

std::optional<Rational> RatFunc::evaluate(const Point& point) const {
  Rational d = Poly::term(den_mono_, 1).evaluate(point);
  for (const auto& f : den_) {
    const Rational v = f.poly.evaluate(point);
    for (unsigned i = 0; i < f.exponent; ++i) d *= v;
  }
  if (d == 0) return std::nullopt;
  return num_.evaluate(point) / d;
}

namespace {

RatFunc substitute_poly(const Poly& p, Var v, const RatFunc& value) {
  if (!p.depends_on(v)) return RatFunc(p);
  const auto groups = p.collect(v);
  // Horner in v from the top degree down.
  RatFunc acc;
  unsigned k = groups.rbegin()->first;
  auto it = groups.rbegin();
  for (;;) {
    if (it != groups.rend() && it->first == k) {
      acc += RatFunc(it->second);
      ++it;
    }
    if (k == 0) break;
    acc *= value;
    --k;
  }
  return acc;
}

}  // namespace

RatFunc RatFunc::substitute(Var v, const RatFunc& value) const {
  RatFunc result = substitute_poly(num_, v, value);
  RatFunc den = substitute_poly(Poly::term(den_mono_, 1), v, value);
  for (const auto& f : den_) {
    if (f.poly.depends_on(v)) {
      den *= substitute_poly(f.poly, v, value).pow(static_cast<int>(f.exponent));
    } else {
      RatFunc keep(1);
      keep.divide_by_poly(f.poly, f.exponent);
      result *= keep;
    }
  }
  return result / den;
}

std::string RatFunc::to_string(std::size_t max_terms) const {
  if (is_polynomial()) return num_.to_string(max_terms);
  std::string out = "(" + num_.to_string(max_terms) + ")/(";
  bool first = true;
  if (!den_mono_.is_one()) {
    out += den_mono_.to_string();
    first = false;
  }
  for (const auto& f : den_) {
    if (!first) out += "*";
    out += "(" + f.poly.to_string() + ")";
    if (f.exponent > 1) out += "^" + std::to_string(f.exponent);
    first = false;
  }
  return out + ")";
}

}  // namespace transurf::algebra
