#include "transurf/surface.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace transurf {

std::string_view to_string(Ambient ambient) {
  switch (ambient) {
    case Ambient::Euclidean: return "euclidean";
    case Ambient::LorentzSpacelike: return "lorentz-spacelike";
    case Ambient::LorentzTimelikeXZ: return "lorentz-timelike-xz";
    case Ambient::LorentzTimelikeYZ: return "lorentz-timelike-yz";
  }
  return "?";
}

Ambient parse_ambient(std::string_view tag) {
  for (Ambient a : {Ambient::Euclidean, Ambient::LorentzSpacelike, Ambient::LorentzTimelikeXZ,
                    Ambient::LorentzTimelikeYZ}) {
    if (tag == to_string(a)) return a;
  }
  throw std::invalid_argument("unknown ambient '" + std::string(tag) + "'");
}

int lorentz_sign(Ambient ambient) { return ambient == Ambient::LorentzSpacelike ? -1 : 1; }

// --- profiles -------------------------------------------------------------

TableProfile::TableProfile(std::vector<Row> rows) : rows_(std::move(rows)) {
  if (rows_.size() < 2) throw std::invalid_argument("profile table needs at least two rows");
  std::sort(rows_.begin(), rows_.end(), [](const Row& a, const Row& b) { return a.x < b.x; });
  for (std::size_t i = 1; i < rows_.size(); ++i) {
    if (!(rows_[i].x > rows_[i - 1].x)) {
      throw std::invalid_argument("profile table abscissae must be distinct");
    }
  }
}

Jet3 TableProfile::jet(double t) const {
  if (!(t >= lo() && t <= hi())) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "point " << t << " outside profile table [" << lo() << ", " << hi() << "]";
    throw DomainError(msg.str(), t);
  }
  auto it = std::upper_bound(rows_.begin(), rows_.end(), t,
                             [](double v, const Row& r) { return v < r.x; });
  const std::size_t i = std::min<std::size_t>(
      it == rows_.begin() ? 0 : static_cast<std::size_t>(it - rows_.begin()) - 1, rows_.size() - 2);
  const Row& p = rows_[i];
  const Row& q = rows_[i + 1];
  const double h = q.x - p.x;
  const double s = (t - p.x) / h;
  const double s2 = s * s, s3 = s2 * s;
  const double m0 = h * p.fp, m1 = h * q.fp;
  const double v = (2 * s3 - 3 * s2 + 1) * p.f + (s3 - 2 * s2 + s) * m0 + (-2 * s3 + 3 * s2) * q.f +
                   (s3 - s2) * m1;
  const double d1 = (6 * s2 - 6 * s) * p.f + (3 * s2 - 4 * s + 1) * m0 + (-6 * s2 + 6 * s) * q.f +
                    (3 * s2 - 2 * s) * m1;
  const double d2 =
      (12 * s - 6) * p.f + (6 * s - 4) * m0 + (-12 * s + 6) * q.f + (6 * s - 2) * m1;
  const double d3 = 12 * p.f + 6 * m0 - 12 * q.f + 6 * m1;
  return {v, d1 / h, d2 / (h * h), d3 / (h * h * h)};
}

Profile::Profile() : impl_(expr::constant(0.0)) {}
Profile::Profile(expr::NodePtr expression) : impl_(std::move(expression)) {}
Profile::Profile(TableProfile table)
    : impl_(std::make_shared<const TableProfile>(std::move(table))) {}

Profile Profile::parse(std::string_view source) { return Profile(expr::parse_profile(source)); }

Jet3 Profile::jet(double t) const {
  if (const auto* e = std::get_if<expr::NodePtr>(&impl_)) return expr::eval_jet(*e, t);
  return std::get<std::shared_ptr<const TableProfile>>(impl_)->jet(t);
}

bool Profile::is_expression() const noexcept {
  return std::holds_alternative<expr::NodePtr>(impl_);
}

std::string Profile::source() const {
  if (const auto* e = std::get_if<expr::NodePtr>(&impl_)) return expr::print(*e);
  throw std::logic_error("tabulated profiles have no expression source");
}

// --- surface --------------------------------------------------------------

double TranslationSurface::height(double u, double v) const {
  return f.jet(u).c0 + g.jet(v).c0;
}

Eigen::Vector3d TranslationSurface::position(double u, double v) const {
  const double h = height(u, v);
  switch (ambient) {
    case Ambient::Euclidean:
    case Ambient::LorentzSpacelike: return {u, v, h};
    case Ambient::LorentzTimelikeXZ: return {u, h, v};
    case Ambient::LorentzTimelikeYZ: return {h, u, v};
  }
  return {u, v, h};
}

namespace {

CurvatureSample invalid_sample(double x, double y, std::string reason) {
  CurvatureSample s;
  s.x = x;
  s.y = y;
  s.reason = std::move(reason);
  return s;
}

double lorentz_dot(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  return a.x() * b.x() + a.y() * b.y() - a.z() * b.z();
}

// Orthogonal to a and b under the Lorentz product.
Eigen::Vector3d lorentz_cross(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  const Eigen::Vector3d c = a.cross(b);
  return {c.x(), c.y(), -c.z()};
}

}  // namespace

CurvatureSample translation_curvature(const TranslationSurface& s, double x, double y) {
  Jet3 fj, gj;
  try {
    fj = s.f.jet(x);
    gj = s.g.jet(y);
  } catch (const DomainError& e) {
    return invalid_sample(x, y, e.what());
  }
  const double f1 = fj.c1, f2 = fj.c2;
  const double g1 = gj.c1, g2 = gj.c2;

  CurvatureSample out;
  out.x = x;
  out.y = y;
  if (s.ambient == Ambient::Euclidean) {
    const double W = 1.0 + f1 * f1 + g1 * g1;
    out.W = W;
    out.H = (f2 * (1.0 + g1 * g1) + g2 * (1.0 + f1 * f1)) / (2.0 * W * std::sqrt(W));
    out.K = f2 * g2 / (W * W);
  } else {
    const double eps = lorentz_sign(s.ambient);
    const double W = 1.0 + eps * f1 * f1 - g1 * g1;
    out.W = W;
    if (!(W > 0.0)) {
      out.reason = "degenerate induced metric (W <= 0)";
      return out;
    }
    out.H = eps * (-eps * f2 * (1.0 - g1 * g1) + g2 * (1.0 + eps * f1 * f1)) /
            (2.0 * W * std::sqrt(W));
    out.K = -f2 * g2 / (W * W);
  }
  if (!std::isfinite(out.H) || !std::isfinite(out.K)) {
    out.H = out.K = std::numeric_limits<double>::quiet_NaN();
    out.reason = "non-finite curvature";
    return out;
  }
  out.valid = true;
  return out;
}

CurvatureSample general_curvature(const ImmersionJet& jet, Ambient ambient) {
  const bool lorentz = ambient != Ambient::Euclidean;
  auto dot = [lorentz](const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
    return lorentz ? lorentz_dot(a, b) : a.dot(b);
  };

  const double E = dot(jet.Xu, jet.Xu);
  const double F = dot(jet.Xu, jet.Xv);
  const double G = dot(jet.Xv, jet.Xv);
  const double det = E * G - F * F;
  if (std::abs(det) < 1e-12) throw DegenerateMetric("degenerate first fundamental form");

  Eigen::Vector3d n = lorentz ? lorentz_cross(jet.Xu, jet.Xv) : jet.Xu.cross(jet.Xv);
  if (ambient == Ambient::LorentzTimelikeYZ) n = -n;
  const double nn = dot(n, n);
  if (std::abs(nn) < 1e-24) throw DegenerateMetric("lightlike normal");
  n /= std::sqrt(std::abs(nn));

  const double e = dot(jet.Xuu, n);
  const double f = dot(jet.Xuv, n);
  const double g = dot(jet.Xvv, n);

  // Lorentzian formulas carry the causal character of the normal.
  const double sign = lorentz ? (nn > 0 ? 1.0 : -1.0) : 1.0;

  CurvatureSample out;
  out.W = std::abs(det);
  out.H = sign * (e * G - 2.0 * f * F + g * E) / (2.0 * det);
  out.K = sign * (e * g - f * f) / det;
  out.valid = std::isfinite(out.H) && std::isfinite(out.K);
  if (!out.valid) out.reason = "non-finite curvature";
  return out;
}

ImmersionJet graph_immersion(const TranslationSurface& s, double u, double v) {
  const Jet3 fj = s.f.jet(u);
  const Jet3 gj = s.g.jet(v);
  // Components along (param u, param v, height) before placing them per ambient.
  const Eigen::Vector3d X{u, v, fj.c0 + gj.c0};
  const Eigen::Vector3d Xu{1.0, 0.0, fj.c1};
  const Eigen::Vector3d Xv{0.0, 1.0, gj.c1};
  const Eigen::Vector3d Xuu{0.0, 0.0, fj.c2};
  const Eigen::Vector3d Xuv{0.0, 0.0, 0.0};
  const Eigen::Vector3d Xvv{0.0, 0.0, gj.c2};

  auto place = [&](const Eigen::Vector3d& w) -> Eigen::Vector3d {
    switch (s.ambient) {
      case Ambient::Euclidean:
      case Ambient::LorentzSpacelike: return w;
      case Ambient::LorentzTimelikeXZ: return {w.x(), w.z(), w.y()};
      case Ambient::LorentzTimelikeYZ: return {w.z(), w.x(), w.y()};
    }
    return w;
  };
  return {place(X), place(Xu), place(Xv), place(Xuu), place(Xuv), place(Xvv)};
}

// --- grids ----------------------------------------------------------------

void GridSpec::validate() const {
  if (x_count < 2 || y_count < 2) throw std::invalid_argument("grid needs at least 2 points per axis");
  if (!(x_start < x_stop) || !(y_start < y_stop)) {
    throw std::invalid_argument("grid start must be below stop on each axis");
  }
}

double GridSpec::x_at(int i) const {
  if (i == x_count - 1) return x_stop;
  return x_start + (x_stop - x_start) * static_cast<double>(i) / static_cast<double>(x_count - 1);
}

double GridSpec::y_at(int j) const {
  if (j == y_count - 1) return y_stop;
  return y_start + (y_stop - y_start) * static_cast<double>(j) / static_cast<double>(y_count - 1);
}

std::vector<CurvatureSample> sample_grid(const TranslationSurface& s, const GridSpec& grid) {
  grid.validate();
  if (!s.domain_f.contains(grid.x_start) || !s.domain_f.contains(grid.x_stop) ||
      !s.domain_g.contains(grid.y_start) || !s.domain_g.contains(grid.y_stop)) {
    throw std::invalid_argument("grid leaves the surface domain rectangle");
  }
  std::vector<CurvatureSample> out;
  out.reserve(static_cast<std::size_t>(grid.x_count) * static_cast<std::size_t>(grid.y_count));
  bool any_valid = false;
  for (int j = 0; j < grid.y_count; ++j) {
    for (int i = 0; i < grid.x_count; ++i) {
      out.push_back(translation_curvature(s, grid.x_at(i), grid.y_at(j)));
      any_valid = any_valid || out.back().valid;
    }
  }
  if (!any_valid) throw NoAdmissibleSamples();
  return out;
}

}  // namespace transurf
