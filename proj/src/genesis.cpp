#include "transurf/genesis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace transurf {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Plane: return "plane";
    case Family::Cylinder: return "cylinder";
    case Family::Scherk: return "scherk";
    case Family::Paraboloid: return "paraboloid";
  }
  return "?";
}

Family parse_family(std::string_view tag) {
  for (Family f : {Family::Plane, Family::Cylinder, Family::Scherk, Family::Paraboloid}) {
    if (tag == to_string(f)) return f;
  }
  throw std::invalid_argument("unknown family '" + std::string(tag) + "'");
}

namespace {

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void check_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("scherk requires lambda > 0");
  }
}

// log(cos(lambda t)) / lambda, written without redundant factors when lambda = 1.
std::string log_cos(double lambda) {
  if (lambda == 1.0) return "log(cos(t))";
  const std::string l = number(lambda);
  return "log(cos(" + l + "*t))/" + l;
}

}  // namespace

double scherk_margin(double lambda) { return 0.05 / lambda; }

double scherk_half_width(double lambda) {
  return std::numbers::pi / (2.0 * lambda) - scherk_margin(lambda);
}

std::string family_profile_f(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Plane: return "0";
    case Family::Cylinder: return spec.profile;
    case Family::Scherk: check_lambda(spec.lambda); return "-" + log_cos(spec.lambda);
    case Family::Paraboloid: return "t^2";
  }
  return "0";
}

std::string family_profile_g(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Plane:
    case Family::Cylinder: return "0";
    case Family::Scherk: check_lambda(spec.lambda); return log_cos(spec.lambda);
    case Family::Paraboloid: return "t^2";
  }
  return "0";
}

TranslationSurface make_family(const FamilySpec& spec) {
  TranslationSurface s;
  s.ambient = Ambient::Euclidean;
  try {
    s.f = Profile::parse(family_profile_f(spec));
    s.g = Profile::parse(family_profile_g(spec));
  } catch (const expr::ParseError& e) {
    throw std::invalid_argument(std::string("invalid cylinder profile: ") + e.what());
  }
  if (spec.family == Family::Scherk) {
    const double w = scherk_half_width(spec.lambda);
    s.domain_f = {-w, w};
    s.domain_g = {-w, w};
  }
  return s;
}

double separated_profile_exact(double lambda, double x) {
  if (lambda == 0.0) return 0.0;
  return -std::log(std::cos(lambda * x)) / lambda;
}

ProfileTable integrate_separated_profile(double lambda, double x_end, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw std::invalid_argument("step must be positive");
  if (!std::isfinite(lambda) || !std::isfinite(x_end) ||
      !(std::abs(lambda * x_end) < std::numbers::pi / 2.0)) {
    throw std::invalid_argument("need |lambda * x_end| < pi/2");
  }
  // State (f, f'); f'' = lambda (1 + f'^2) depends on f' only.
  auto accel = [lambda](double p) { return lambda * (1.0 + p * p); };

  ProfileTable rows{{0.0, 0.0, 0.0}};
  const double dir = x_end >= 0.0 ? 1.0 : -1.0;
  const double span = std::abs(x_end);
  // Full steps, plus one shortened step when step does not divide span.
  const auto n = static_cast<long long>(std::ceil(span / step - 1e-9));
  double f = 0.0, p = 0.0;
  for (long long k = 1; k <= n; ++k) {
    const double x_next = k < n ? step * static_cast<double>(k) : span;
    const double h = dir * (x_next - step * static_cast<double>(k - 1));

    const double k1f = p, k1p = accel(p);
    const double k2f = p + 0.5 * h * k1p, k2p = accel(k2f);
    const double k3f = p + 0.5 * h * k2p, k3p = accel(k3f);
    const double k4f = p + h * k3p, k4p = accel(k4f);
    f += h / 6.0 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f);
    p += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    if (!(std::abs(p) <= 1e6)) throw BlowUp("separated profile blew up (|f'| > 1e6)");
    rows.push_back({dir * x_next, f, p});
  }
  return rows;
}

double verify_minimal(const TranslationSurface& surface, const GridSpec& grid) {
  double worst = 0.0;
  for (const auto& s : sample_grid(surface, grid)) {
    if (s.valid) worst = std::max(worst, std::abs(s.H));
  }
  return worst;
}

}  // namespace transurf
