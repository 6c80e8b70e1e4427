#pragma once

// Translation surfaces z = f(x) + g(y) (and the Lorentzian timelike graph
// variants) together with two independent curvature engines: closed-form
// translation formulas and a general fundamental-form evaluation.

#include <Eigen/Core>

#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "transurf/expr.hpp"
#include "transurf/jet.hpp"

namespace transurf {

enum class Ambient { Euclidean, LorentzSpacelike, LorentzTimelikeXZ, LorentzTimelikeYZ };

std::string_view to_string(Ambient ambient);
/// Accepts the surface-JSON tags: euclidean, lorentz-spacelike,
/// lorentz-timelike-xz, lorentz-timelike-yz.
Ambient parse_ambient(std::string_view tag);

/// epsilon of the Lorentzian formulas: -1 spacelike, +1 timelike.
/// Not meaningful for Euclidean.
int lorentz_sign(Ambient ambient);

/// Sampled profile (x, f, f') interpolated with cubic Hermite pieces.
class TableProfile {
 public:
  struct Row {
    double x;
    double f;
    double fp;
  };

  explicit TableProfile(std::vector<Row> rows);

  Jet3 jet(double t) const;
  const std::vector<Row>& rows() const noexcept { return rows_; }
  double lo() const noexcept { return rows_.front().x; }
  double hi() const noexcept { return rows_.back().x; }

 private:
  std::vector<Row> rows_;
};

class Profile {
 public:
  Profile();  // the zero profile
  explicit Profile(expr::NodePtr expression);
  explicit Profile(TableProfile table);

  static Profile parse(std::string_view source);

  Jet3 jet(double t) const;

  bool is_expression() const noexcept;
  /// Source text of an expression profile; throws for tables.
  std::string source() const;

 private:
  std::variant<expr::NodePtr, std::shared_ptr<const TableProfile>> impl_;
};

struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double v) const noexcept { return v >= lo && v <= hi; }
};

struct TranslationSurface {
  Profile f;
  Profile g;
  Ambient ambient = Ambient::Euclidean;
  Interval domain_f;
  Interval domain_g;

  /// Height of the graph: f(u) + g(v).
  double height(double u, double v) const;
  /// Embedding of the parameter point per the ambient's graph convention.
  Eigen::Vector3d position(double u, double v) const;
};

struct CurvatureSample {
  double x = 0.0;
  double y = 0.0;
  double H = std::numeric_limits<double>::quiet_NaN();
  double K = std::numeric_limits<double>::quiet_NaN();
  double W = std::numeric_limits<double>::quiet_NaN();
  bool valid = false;
  std::string reason;  // empty when valid
};

/// Mean and Gauss curvature from the translation formulas. Never throws for
/// profile domain failures or Lorentzian W <= 0; the sample is marked invalid.
CurvatureSample translation_curvature(const TranslationSurface& s, double x, double y);

/// Position and partials up to second order of an immersion at one point.
struct ImmersionJet {
  Eigen::Vector3d X = Eigen::Vector3d::Zero();
  Eigen::Vector3d Xu = Eigen::Vector3d::Zero();
  Eigen::Vector3d Xv = Eigen::Vector3d::Zero();
  Eigen::Vector3d Xuu = Eigen::Vector3d::Zero();
  Eigen::Vector3d Xuv = Eigen::Vector3d::Zero();
  Eigen::Vector3d Xvv = Eigen::Vector3d::Zero();
};

class DegenerateMetric : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Curvature from the first and second fundamental forms of an arbitrary
/// immersion. The unit normal is the (Lorentzian, where applicable) cross
/// product Xu x Xv, reversed for the yz-timelike ambient so that all graph
/// conventions share one orientation. Throws DegenerateMetric when
/// |EG - F^2| < 1e-12.
CurvatureSample general_curvature(const ImmersionJet& jet, Ambient ambient);

/// The graph immersion of a translation surface, differentiated with jets.
ImmersionJet graph_immersion(const TranslationSurface& s, double u, double v);

struct GridSpec {
  double x_start = 0.0;
  double x_stop = 1.0;
  int x_count = 2;
  double y_start = 0.0;
  double y_stop = 1.0;
  int y_count = 2;

  /// Throws std::invalid_argument unless counts >= 2 and start < stop.
  void validate() const;
  double x_at(int i) const;
  double y_at(int j) const;
};

class NoAdmissibleSamples : public std::runtime_error {
 public:
  NoAdmissibleSamples() : std::runtime_error("no admissible samples") {}
};

/// Row-major samples (x varies fastest). Throws std::invalid_argument when
/// the grid leaves the domain rectangle and NoAdmissibleSamples when every
/// sample is invalid.
std::vector<CurvatureSample> sample_grid(const TranslationSurface& s, const GridSpec& grid);

}  // namespace transurf
