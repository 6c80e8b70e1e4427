#include "transurf/weingarten.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "transurf/genesis.hpp"

namespace transurf {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::ConstantMeanCurvature: return "ConstantMeanCurvature";
    case Verdict::ConstantGaussCurvature: return "ConstantGaussCurvature";
    case Verdict::BothConstant: return "BothConstant";
    case Verdict::GeneralLinearWeingarten: return "GeneralLinearWeingarten";
    case Verdict::NotLinearWeingarten: return "NotLinearWeingarten";
    case Verdict::Degenerate: return "Degenerate";
  }
  return "?";
}

namespace {

struct Moments {
  double mean = 0.0;
  double var = 0.0;
};

Moments moments(const std::vector<double>& v) {
  Moments m;
  if (v.empty()) return m;
  for (double x : v) m.mean += x;
  m.mean /= static_cast<double>(v.size());
  for (double x : v) m.var += (x - m.mean) * (x - m.mean);
  m.var /= static_cast<double>(v.size());
  return m;
}

}  // namespace

WeingartenFit fit_rows(std::span<const std::array<double, 3>> rows, const FitTolerances& tol) {
  if (rows.size() < 3) throw InsufficientData("need at least 3 samples to fit a relation");

  double scale = 0.0;
  for (const auto& r : rows) {
    for (double v : r) scale = std::max(scale, std::abs(v));
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) throw InsufficientData("design rows are zero or non-finite");

  Eigen::Matrix3d normal = Eigen::Matrix3d::Zero();
  std::vector<double> hs, ks;
  hs.reserve(rows.size());
  ks.reserve(rows.size());
  for (const auto& r : rows) {
    const Eigen::Vector3d row(r[0] / scale, r[1] / scale, r[2] / scale);
    normal.noalias() += row * row.transpose();
    if (r[2] != 0.0) {
      hs.push_back(-r[0] / r[2]);
      ks.push_back(-r[1] / r[2]);
    }
  }

  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(normal);
  const Eigen::Vector3d values = eig.eigenvalues();  // ascending
  Eigen::Vector3d v = eig.eigenvectors().col(0).normalized();

  // First numerically nonzero coordinate is made positive.
  for (int i = 0; i < 3; ++i) {
    if (std::abs(v[i]) > tol.coeff) {
      if (v[i] < 0) v = -v;
      break;
    }
  }
  for (int i = 0; i < 3; ++i) v[i] += 0.0;  // no "-0" in reports

  WeingartenFit fit;
  fit.a = v[0];
  fit.b = v[1];
  fit.c = v[2];
  fit.samples_used = rows.size();
  const double largest = values[2];
  fit.rank_estimate = 0;
  for (int i = 0; i < 3; ++i) {
    if (values[i] > tol.rank * largest) ++fit.rank_estimate;
  }

  double sum_sq = 0.0;
  for (const auto& r : rows) {
    // Row (H, K, -1) dotted with (a, b, c) is a*H + b*K - c.
    const double res = std::abs((r[0] * v[0] + r[1] * v[1] + r[2] * v[2]) / scale);
    sum_sq += res * res;
    fit.max_residual = std::max(fit.max_residual, res);
  }
  fit.rms_residual = std::sqrt(sum_sq / static_cast<double>(rows.size()));

  const Moments mh = moments(hs), mk = moments(ks);
  fit.mean_H = mh.mean;
  fit.var_H = mh.var;
  fit.mean_K = mk.mean;
  fit.var_K = mk.var;
  fit.verdict = classify(fit, tol);
  return fit;
}

WeingartenFit fit_linear_weingarten(std::span<const CurvatureSample> samples,
                                    const FitTolerances& tol) {
  std::vector<std::array<double, 3>> rows;
  rows.reserve(samples.size());
  std::size_t invalid = 0;
  for (const auto& s : samples) {
    if (s.valid) {
      rows.push_back({s.H, s.K, -1.0});
    } else {
      ++invalid;
    }
  }
  if (rows.size() < 3) throw InsufficientData("fewer than 3 valid samples");
  WeingartenFit fit = fit_rows(rows, tol);
  fit.samples_invalid = invalid;
  return fit;
}

Classification classify(const WeingartenFit& fit, const FitTolerances& tol) {
  Classification out;
  const bool h_const = fit.var_H < tol.constant;
  const bool k_const = fit.var_K < tol.constant;

  if (fit.rank_estimate <= 1) {
    out.verdict = Verdict::Degenerate;
    if (h_const && k_const) {
      if (std::max(std::abs(fit.mean_H), std::abs(fit.mean_K)) <= tol.coeff) {
        out.reason = "H and K identically zero; relation underdetermined";
        return out;
      }
      out.verdict = Verdict::BothConstant;
      out.h = fit.mean_H;
      out.k = fit.mean_K;
      return out;
    }
    out.reason = "rank-deficient design";
    return out;
  }
  if (h_const && k_const) {
    out.verdict = Verdict::BothConstant;
    out.h = fit.mean_H;
    out.k = fit.mean_K;
    return out;
  }
  if (!(fit.rms_residual < tol.fit)) {
    out.verdict = Verdict::NotLinearWeingarten;
    return out;
  }
  const bool a_zero = std::abs(fit.a) <= tol.coeff;
  const bool b_zero = std::abs(fit.b) <= tol.coeff;
  if (b_zero && !a_zero) {
    out.verdict = Verdict::ConstantMeanCurvature;
    out.h = fit.c / fit.a;
    return out;
  }
  if (a_zero && !b_zero) {
    out.verdict = Verdict::ConstantGaussCurvature;
    out.k = fit.c / fit.b;
    return out;
  }
  if (a_zero && b_zero) {
    out.verdict = Verdict::Degenerate;
    out.reason = "relation reduces to c = 0";
    return out;
  }
  out.verdict = Verdict::GeneralLinearWeingarten;
  out.warning =
      "theorem violation: a translation surface cannot satisfy aH + bK = c with a, b both nonzero";
  return out;
}

// --- audit ----------------------------------------------------------------

int AuditReport::count(Verdict v) const {
  const auto it = counts.find(std::string(to_string(v)));
  return it == counts.end() ? 0 : it->second;
}

namespace {

// Platform-independent draws from the fixed mt19937_64 sequence.
double uniform(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Nonzero coefficient bounded away from 0.
double coefficient(std::mt19937_64& rng) {
  const double mag = uniform(rng, 0.25, 1.5);
  return (rng() & 1) ? mag : -mag;
}

bool curved_on(const Profile& p, double lo, double hi) {
  for (int i = 0; i <= 8; ++i) {
    const double t = lo + (hi - lo) * i / 8.0;
    if (std::abs(p.jet(t).c2) > 1e-3) return true;
  }
  return false;
}

}  // namespace

std::string random_profile(std::mt19937_64& rng) {
  static constexpr std::array<const char*, 9> kShapes{
      "sin(%s)", "cos(%s)", "exp(%s)", "atan(%s)", "tanh(%s)",
      "cosh(%s)", "sinh(%s)", "(%s)^2", "(%s)^3"};
  const std::size_t terms = 1 + pick(rng, 3);
  std::string out;
  for (std::size_t i = 0; i < terms; ++i) {
    const std::string arg = short_number(coefficient(rng)) + "*t+" + short_number(uniform(rng, 0.0, 0.5));
    char inner[96];
    std::snprintf(inner, sizeof inner, kShapes[pick(rng, kShapes.size())], arg.c_str());
    const double c = coefficient(rng);
    if (i > 0) out += c < 0 ? "-" : "+";
    else if (c < 0) out += "-";
    out += short_number(std::abs(c)) + "*" + inner;
  }
  return out;
}

AuditReport theorem_audit(std::uint64_t seed, int trials, const AuditOptions& options) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  AuditReport report;
  report.seed = seed;
  report.trials = trials;
  const GridSpec& grid = options.grid;

  for (int i = 0; i < trials; ++i) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(i));
    AuditTrial trial;
    trial.index = i;

    TranslationSurface surface;
    surface.ambient = options.ambient;
    if (!options.forced_family.empty()) {
      FamilySpec spec;
      spec.family = parse_family(options.forced_family);
      if (spec.family == Family::Cylinder) spec.profile = random_profile(rng);
      if (spec.family == Family::Scherk) spec.lambda = uniform(rng, 0.5, 1.5);
      surface = make_family(spec);
      surface.ambient = options.ambient;
      trial.f = family_profile_f(spec);
      trial.g = family_profile_g(spec);
    } else {
      // f'' g'' must not vanish identically; redraw a bounded number of times.
      bool ok = false;
      for (int attempt = 0; attempt < 16 && !ok; ++attempt) {
        trial.f = random_profile(rng);
        trial.g = random_profile(rng);
        try {
          surface.f = Profile::parse(trial.f);
          surface.g = Profile::parse(trial.g);
          ok = curved_on(surface.f, grid.x_start, grid.x_stop) &&
               curved_on(surface.g, grid.y_start, grid.y_stop);
        } catch (const DomainError&) {
          ok = false;
        }
      }
      if (!ok) trial.skipped = true;
    }

    if (!trial.skipped) {
      try {
        const auto samples = sample_grid(surface, grid);
        const WeingartenFit fit = fit_linear_weingarten(samples, options.tolerances);
        trial.verdict = fit.verdict.verdict;
        trial.rms_residual = fit.rms_residual;
      } catch (const NoAdmissibleSamples&) {
        trial.skipped = true;
      } catch (const InsufficientData&) {
        trial.skipped = true;
      }
    }

    if (trial.skipped) {
      ++report.skipped;
    } else {
      ++report.counts[std::string(to_string(trial.verdict))];
    }
    report.details.push_back(std::move(trial));
  }
  return report;
}

}  // namespace transurf
