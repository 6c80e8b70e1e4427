#pragma once

// Least-squares detection of a linear relation a*H + b*K = c between mean and
// Gauss curvature samples, and the verdicts a translation surface can earn.

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "transurf/surface.hpp"

namespace transurf {

struct FitTolerances {
  double fit = 1e-8;        // rms residual on nondimensionalized rows
  double coeff = 1e-6;      // |a| or |b| at or below this counts as zero
  double rank = 1e-10;      // eigenvalues below rank * largest are dropped
  double constant = 1e-10;  // variance threshold for constant H or K
};

enum class Verdict {
  ConstantMeanCurvature,
  ConstantGaussCurvature,
  BothConstant,
  GeneralLinearWeingarten,
  NotLinearWeingarten,
  Degenerate,
};

std::string_view to_string(Verdict v);

struct Classification {
  Verdict verdict = Verdict::Degenerate;
  double h = 0.0;  // ConstantMeanCurvature, BothConstant
  double k = 0.0;  // ConstantGaussCurvature, BothConstant
  std::string reason;   // Degenerate
  std::string warning;  // GeneralLinearWeingarten
};

struct WeingartenFit {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double rms_residual = 0.0;
  double max_residual = 0.0;
  int rank_estimate = 0;
  std::size_t samples_used = 0;
  std::size_t samples_invalid = 0;
  // Sample statistics consulted by classify().
  double mean_H = 0.0;
  double mean_K = 0.0;
  double var_H = 0.0;
  double var_K = 0.0;
  Classification verdict;
};

class InsufficientData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fits design rows (H_i, K_i, -1) directly. Rows are scaled by their largest
/// entry before the normal matrix is formed, so multiplying every row by a
/// positive constant changes neither the coefficients nor the verdict.
WeingartenFit fit_rows(std::span<const std::array<double, 3>> rows,
                       const FitTolerances& tol = {});

/// Throws InsufficientData when fewer than 3 samples are valid.
WeingartenFit fit_linear_weingarten(std::span<const CurvatureSample> samples,
                                    const FitTolerances& tol = {});

Classification classify(const WeingartenFit& fit, const FitTolerances& tol = {});

struct AuditOptions {
  /// Restrict the generator to one closed-form family: "" (random
  /// expressions), "cylinder", "scherk", "plane" or "paraboloid".
  std::string forced_family;
  Ambient ambient = Ambient::Euclidean;
  GridSpec grid{-0.5, 0.5, 9, -0.5, 0.5, 9};
  FitTolerances tolerances;
};

struct AuditTrial {
  int index = 0;
  std::string f;
  std::string g;
  bool skipped = false;
  Verdict verdict = Verdict::Degenerate;
  double rms_residual = 0.0;
};

struct AuditReport {
  std::uint64_t seed = 0;
  int trials = 0;
  int skipped = 0;
  std::map<std::string, int> counts;  // verdict name -> count
  std::vector<AuditTrial> details;

  int count(Verdict v) const;
};

/// Runs fit + classify over seeded random translation surfaces. Deterministic
/// for a given seed on every platform.
AuditReport theorem_audit(std::uint64_t seed, int trials, const AuditOptions& options = {});

/// Random profile expression used by the audit; exposed for tests.
std::string random_profile(std::mt19937_64& rng);

}  // namespace transurf
