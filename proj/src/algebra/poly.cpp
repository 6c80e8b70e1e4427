#include "transurf/algebra/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace transurf::algebra {

std::string_view name(Var v) {
  static constexpr std::array<std::string_view, kVarCount> kNames{
      "f1", "f2", "f3", "f4", "g1", "g2", "g3", "g4", "a", "b", "lambda", "m", "w2"};
  return kNames[static_cast<std::size_t>(v)];
}

Monomial Monomial::of(Var v, unsigned power) {
  Monomial m;
  m.exp[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(power);
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exp.begin(), exp.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (exp[i] > other.exp[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    const unsigned e = exp[i] + o.exp[i];
    if (e > 255) throw std::overflow_error("monomial exponent overflow");
    r.exp[i] = static_cast<std::uint8_t>(e);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kVarCount; ++i) r.exp[i] = static_cast<std::uint8_t>(exp[i] - o.exp[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& x, const Monomial& y) {
  Monomial r;
  for (std::size_t i = 0; i < kVarCount; ++i) r.exp[i] = std::min(x.exp[i], y.exp[i]);
  return r;
}

Monomial Monomial::lcm(const Monomial& x, const Monomial& y) {
  Monomial r;
  for (std::size_t i = 0; i < kVarCount; ++i) r.exp[i] = std::max(x.exp[i], y.exp[i]);
  return r;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (exp[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += name(static_cast<Var>(i));
    if (exp[i] > 1) out += "^" + std::to_string(exp[i]);
  }
  return out.empty() ? "1" : out;
}

// --- Poly -----------------------------------------------------------------

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Poly Poly::var(Var v) { return term(Monomial::of(v), 1); }

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Poly::constant_term() const {
  const auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

Monomial Poly::content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.begin()->first;
  for (const auto& [m, c] : terms_) g = Monomial::gcd(g, m);
  return g;
}

unsigned Poly::degree_in(Var v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m[v]);
  return d;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

namespace {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto e : m.exp) {
      h ^= e;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

}  // namespace

Poly operator*(const Poly& x, const Poly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  if (x.size() == 1 || y.size() == 1) {
    const Poly& single = x.size() == 1 ? x : y;
    const Poly& other = x.size() == 1 ? y : x;
    const auto& [sm, sc] = *single.terms_.begin();
    Poly r;
    for (const auto& [m, c] : other.terms_) r.terms_.emplace_hint(r.terms_.end(), m * sm, c * sc);
    return r;
  }
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(x.size() * y.size());
  for (const auto& [mx, cx] : x.terms_) {
    for (const auto& [my, cy] : y.terms_) {
      auto [it, inserted] = acc.try_emplace(mx * my);
      if (inserted) {
        mpq_mul(it->second.get_mpq_t(), cx.get_mpq_t(), cy.get_mpq_t());
      } else {
        it->second += cx * cy;
      }
    }
  }
  Poly r;
  for (auto& [m, c] : acc) {
    if (c != 0) r.terms_.emplace(m, std::move(c));
  }
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return {};
  Poly r = *this;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

Poly Poly::times(const Monomial& m) const {
  Poly r;
  for (const auto& [mm, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, c);
  return r;
}

Poly Poly::divided_by(const Monomial& m) const {
  Poly r;
  for (const auto& [mm, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm / m, c);
  return r;
}

Poly Poly::pow(unsigned n) const {
  Poly result(1);
  Poly base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (is_zero()) return Poly{};
  // Necessary conditions: in lex order lt(d) | lt(p) and tt(d) | tt(p).
  if (!d.leading_monomial().divides(leading_monomial())) return std::nullopt;
  if (!d.trailing_monomial().divides(trailing_monomial())) return std::nullopt;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    const auto v = static_cast<Var>(i);
    if (d.degree_in(v) > degree_in(v)) return std::nullopt;
  }

  const Monomial& dlm = d.leading_monomial();
  const Rational dlc_inv = 1 / d.leading_coefficient();
  Poly rem = *this;
  Poly q;
  while (!rem.is_zero()) {
    const Monomial& lm = rem.leading_monomial();
    if (!dlm.divides(lm)) return std::nullopt;
    const Monomial qm = lm / dlm;
    const Rational qc = rem.leading_coefficient() * dlc_inv;
    q.terms_.emplace(qm, qc);
    for (const auto& [m, c] : d.terms_) rem.add_term(m * qm, -c * qc);
  }
  return q;
}

std::map<unsigned, Poly> Poly::collect(Var v) const {
  std::map<unsigned, Poly> out;
  const auto idx = static_cast<std::size_t>(v);
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    const unsigned k = rest.exp[idx];
    rest.exp[idx] = 0;
    out[k].add_term(rest, c);
  }
  return out;
}

Rational Poly::evaluate(const Point& point) const {
  // Cached powers per variable.
  std::array<std::vector<Rational>, kVarCount> powers;
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      const unsigned e = m.exp[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Rational(1));
      while (pw.size() <= e) pw.push_back(pw.back() * point[i]);
      t *= pw[e];
    }
    total += t;
  }
  return total;
}

std::string Poly::to_string(std::size_t max_terms) const {
  if (terms_.empty()) return "0";
  std::string out;
  std::size_t shown = 0;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (shown == max_terms) {
      out += " + ... (" + std::to_string(terms_.size() - shown) + " more terms)";
      break;
    }
    const auto& [m, c] = *it;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (shown == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.is_one()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += m.to_string();
    } else {
      out += mag.get_str() + "*" + m.to_string();
    }
    ++shown;
  }
  return out;
}

}  // namespace transurf::algebra
