#include "transurf/algebra/sqrtw.hpp"

#include <random>
#include <stdexcept>

namespace transurf::algebra {

SqrtW::SqrtW(RatFunc a, RatFunc b, Poly w) : a_(std::move(a)), b_(std::move(b)), w_(std::move(w)) {
  if (w_.is_zero() && !b_.is_zero()) throw std::invalid_argument("root part without a radicand");
}

void SqrtW::adopt(const Poly& w) {
  if (w.is_zero()) return;
  if (w_.is_zero()) {
    w_ = w;
  } else if (!(w_ == w)) {
    throw std::invalid_argument("mixing expressions over different radicands");
  }
}

SqrtW& SqrtW::operator+=(const SqrtW& o) {
  adopt(o.w_);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

SqrtW& SqrtW::operator-=(const SqrtW& o) {
  adopt(o.w_);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

SqrtW& SqrtW::operator*=(const SqrtW& o) {
  adopt(o.w_);
  if (b_.is_zero() && o.b_.is_zero()) {
    a_ *= o.a_;
    return *this;
  }
  RatFunc a = a_ * o.a_;
  if (!b_.is_zero() && !o.b_.is_zero()) a += b_ * o.b_ * RatFunc(w_);
  RatFunc b = a_ * o.b_ + o.a_ * b_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

SqrtW SqrtW::inverse() const {
  if (b_.is_zero()) return SqrtW(a_.inverse(), RatFunc(), w_);
  // (A - B S) / (A^2 - B^2 W)
  const RatFunc norm = a_ * a_ - b_ * b_ * RatFunc(w_);
  if (norm.is_zero()) throw std::domain_error("inverse of a zero divisor");
  const RatFunc inv = norm.inverse();
  return SqrtW(a_ * inv, -b_ * inv, w_);
}

SqrtW& SqrtW::operator/=(const SqrtW& o) {
  if (o.b_.is_zero()) {
    adopt(o.w_);
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

SqrtW SqrtW::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  SqrtW result(1);
  SqrtW base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

namespace {

SqrtW substitute_poly(const Poly& p, Var v, const SqrtW& value) {
  if (!p.depends_on(v)) return SqrtW(RatFunc(p));
  const auto groups = p.collect(v);
  SqrtW acc;
  unsigned k = groups.rbegin()->first;
  auto it = groups.rbegin();
  for (;;) {
    if (it != groups.rend() && it->first == k) {
      acc += SqrtW(RatFunc(it->second));
      ++it;
    }
    if (k == 0) break;
    acc *= value;
    --k;
  }
  return acc;
}

SqrtW substitute_rat(const RatFunc& r, Var v, const SqrtW& value) {
  if (value.root_part().is_zero()) return SqrtW(r.substitute(v, value.rational_part()));
  if (!r.depends_on(v)) return SqrtW(r);
  SqrtW num = substitute_poly(r.numerator(), v, value);
  SqrtW den = substitute_poly(Poly::term(r.denominator_monomial(), 1), v, value);
  for (const auto& f : r.denominator_factors()) {
    den *= substitute_poly(f.poly, v, value).pow(static_cast<int>(f.exponent));
  }
  return num / den;
}

}  // namespace

SqrtW SqrtW::substitute(Var v, const SqrtW& value) const {
  if (w_.depends_on(v)) {
    throw std::invalid_argument(std::string("cannot substitute ") + std::string(name(v)) +
                                ": the radicand depends on it");
  }
  SqrtW result = substitute_rat(a_, v, value);
  if (!b_.is_zero()) result += substitute_rat(b_, v, value) * root(w_);
  result.adopt(w_);
  return result;
}

std::string SqrtW::to_string(std::size_t max_terms) const {
  if (b_.is_zero()) return a_.to_string(max_terms);
  return a_.to_string(max_terms) + " + [" + b_.to_string(max_terms) + "]*sqrt(" + w_.to_string() + ")";
}

// --- Derivation -----------------------------------------------------------

Derivation::Derivation(Axis axis, Poly w) : axis_(axis), w_(std::move(w)) {}

Poly Derivation::image(Var v) const {
  const bool x = axis_ == Axis::X;
  switch (v) {
    case Var::f1: return x ? Poly::var(Var::f2) : Poly{};
    case Var::f2: return x ? Poly::var(Var::f3) : Poly{};
    case Var::f3: return x ? Poly::var(Var::f4) : Poly{};
    case Var::f4:
      if (x) throw std::domain_error("derivative of f4 is not tracked");
      return {};
    case Var::g1: return x ? Poly{} : Poly::var(Var::g2);
    case Var::g2: return x ? Poly{} : Poly::var(Var::g3);
    case Var::g3: return x ? Poly{} : Poly::var(Var::g4);
    case Var::g4:
      if (!x) throw std::domain_error("derivative of g4 is not tracked");
      return {};
    case Var::w2: {
      if (w_.is_zero()) throw std::domain_error("w2 needs a radicand to differentiate");
      return Poly(2) * w_ * (*this)(w_);
    }
    case Var::a:
    case Var::b:
    case Var::lambda:
    case Var::m: return {};
  }
  return {};
}

Poly Derivation::operator()(const Poly& p) const {
  Poly result;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    const auto v = static_cast<Var>(i);
    if (!p.depends_on(v)) continue;
    const Poly img = image(v);
    if (img.is_zero()) continue;
    // Partial derivative with respect to v.
    Poly partial;
    for (const auto& [m, c] : p.terms()) {
      const unsigned e = m[v];
      if (e == 0) continue;
      Monomial reduced = m;
      reduced.exp[i] = static_cast<std::uint8_t>(e - 1);
      partial += Poly::term(reduced, c * e);
    }
    result += partial * img;
  }
  return result;
}

RatFunc Derivation::operator()(const RatFunc& r) const {
  if (r.is_polynomial()) return RatFunc((*this)(r.numerator()));
  // D(n/Q) = D(n)/Q - (n/Q) * (D(M)/M + sum e_i D(p_i)/p_i) for Q = M prod p_i^e_i.
  const Poly mono = Poly::term(r.denominator_monomial(), 1);
  RatFunc log_derivative = RatFunc::quotient((*this)(mono), mono);
  for (const auto& f : r.denominator_factors()) {
    const Poly df = (*this)(f.poly);
    if (df.is_zero()) continue;
    log_derivative += RatFunc::quotient(df.scaled(f.exponent), f.poly);
  }
  const RatFunc inv_den = RatFunc::quotient(Poly(1), r.denominator());
  return RatFunc((*this)(r.numerator())) * inv_den - r * log_derivative;
}

SqrtW Derivation::operator()(const SqrtW& e) const {
  // D(A + B S) = D(A) + (D(B) + B D(W) / (2W)) S
  const RatFunc da = (*this)(e.rational_part());
  if (e.root_part().is_zero()) return SqrtW(da, RatFunc(), e.radicand());
  const Poly& w = e.radicand();
  RatFunc db = (*this)(e.root_part());
  const Poly dw = (*this)(w);
  if (!dw.is_zero()) db += e.root_part() * RatFunc::quotient(dw, w.scaled(2));
  return SqrtW(da, db, w);
}

// --- identity testing -----------------------------------------------------

namespace {

Rational random_rational(std::mt19937_64& rng) {
  constexpr std::uint64_t kBound = 1000000;
  const auto num = static_cast<long>(rng() % kBound) + 1;
  const auto den = static_cast<long>(rng() % kBound) + 1;
  Rational r(num, den);
  r.canonicalize();
  if (rng() & 1) r = -r;
  return r;
}

}  // namespace

IdentityResult identity_test(const SqrtW& lhs, const SqrtW& rhs, std::uint64_t seed, int samples) {
  if (samples < 1) throw std::invalid_argument("samples must be at least 1");
  std::mt19937_64 rng(seed);
  IdentityResult result;
  result.identical = true;
  const std::array<std::pair<const RatFunc*, const RatFunc*>, 2> parts{
      std::pair{&lhs.rational_part(), &rhs.rational_part()},
      std::pair{&lhs.root_part(), &rhs.root_part()}};
  for (int s = 0; s < samples; ++s) {
    int retries = 0;
    for (;;) {
      Point point;
      for (auto& v : point) v = random_rational(rng);
      bool ok = true;
      bool equal = true;
      for (const auto& [l, r] : parts) {
        const auto lv = l->evaluate(point);
        const auto rv = r->evaluate(point);
        if (!lv || !rv) {
          ok = false;
          break;
        }
        if (*lv != *rv) equal = false;
      }
      if (ok) {
        ++result.evaluations;
        if (!equal) result.identical = false;
        break;
      }
      ++result.resampled;
      if (++retries >= 64) throw std::runtime_error("identity test: denominators keep vanishing");
    }
  }
  return result;
}

bool poly_identity_test(const SqrtW& p, std::uint64_t seed, int samples) {
  return identity_test(p, SqrtW(), seed, samples).identical;
}

}  // namespace transurf::algebra
