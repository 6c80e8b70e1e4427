#pragma once

// Exact replays of the identities behind the linear Weingarten argument for
// translation surfaces: the c = 0 chain, the c != 0 differentiation chain,
// the P/Q factorization and the final case analysis, in Euclidean space and
// in Lorentz-Minkowski space.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "transurf/algebra/sqrtw.hpp"

namespace transurf::algebra {

enum class Mode { Euclidean, LorentzSpacelike, LorentzTimelike };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view tag);

/// Sign convention of the Lorentzian displays for the c != 0 case: either the
/// same epsilon as in W, F and G ("uniform"), or the opposite one ("swapped").
enum class Reading { Uniform, Swapped };

std::string_view to_string(Reading reading);

/// Deliberate corruptions of the replayed formulas, for mutation testing.
enum class Mutation {
  None,
  FDefinition,      // F = f''/(1 - f'^2) in the Euclidean c = 0 chain
  EabCoefficient,   // 6 -> 5 in the mixed-derivative identity
  Phi2Sign,         // sign of 2 f' f'' g' g'' (f'' - g'') flipped
  DisplayFourW,     // 4 W -> 3 W in the x-derivative of the rearranged relation
  LambdaSign,       // f''' = -2 lambda f' f''^2 in the separation substitution
};

std::string_view to_string(Mutation mutation);
Mutation parse_mutation(std::string_view tag);

struct VerifyOptions {
  std::uint64_t seed = 0;
  Mutation mutation = Mutation::None;
  int samples = 20;
};

struct Step {
  std::string name;
  bool pass = false;
  std::string witness;  // leading terms of a nonzero difference
  std::string note;
};

struct Report {
  std::string suite;
  Mode mode = Mode::Euclidean;
  std::optional<Reading> reading;
  std::vector<Step> steps;
  std::optional<std::string> cofactor;

  bool passed() const;
};

/// The W, F, G and atom conventions of one ambient.
struct Geometry {
  Mode mode = Mode::Euclidean;
  int epsilon = 1;          // Lorentz sign; unused in Euclidean mode
  int display_epsilon = 1;  // sign used in the Lorentzian c != 0 displays

  explicit Geometry(Mode m, Reading reading = Reading::Uniform);

  Poly W() const;
  /// 1 + f'^2, or 1 + eps f'^2.
  Poly f_metric() const;
  /// 1 + g'^2, or -1 + g'^2.
  Poly g_metric() const;
  RatFunc F() const;
  RatFunc G() const;
  SqrtW S() const { return SqrtW::root(W()); }
  Derivation dx() const { return Derivation(Axis::X, W()); }
  Derivation dy() const { return Derivation(Axis::Y, W()); }

  /// Mean and Gauss curvature of the translation graph.
  SqrtW H() const;
  RatFunc K() const;

  /// First and second factor of the closing factorization.
  Poly phi1() const;
  Poly phi2(Mutation mutation = Mutation::None) const;
};

struct PQ {
  RatFunc P1, Q1, P2, Q2;
};

/// P1 S = Q1 and P2 S = Q2 read off the two combined derivative relations.
PQ build_pq(const Geometry& geometry);

/// A product c * prod atom_i^e_i with integer exponents.
struct AtomMonomial {
  Rational coefficient;
  std::vector<std::pair<std::string, int>> powers;  // atom label, exponent

  std::string to_string() const;
};

struct Atom {
  std::string label;
  Poly poly;
};

/// Atoms a, b, f', f'', g', g'' and the metric factors of the geometry.
std::vector<Atom> atoms(const Geometry& geometry);

/// Writes r as a product of atoms, or nullopt if it is not one.
std::optional<AtomMonomial> decompose_over_atoms(const RatFunc& r, const std::vector<Atom>& atoms);

Report verify_c0_chain(Mode mode, const VerifyOptions& options = {});
Report verify_eab(Mode mode, const VerifyOptions& options = {});
Report verify_pq(Mode mode, Reading reading, const VerifyOptions& options = {});
Report verify_factorization(Mode mode, Reading reading, const VerifyOptions& options = {});
Report verify_differentiation_displays(const VerifyOptions& options = {});
Report verify_case3_chain(const VerifyOptions& options = {});

/// Frozen cofactor of the factorization, when one is on record.
std::optional<std::string> golden_cofactor(Mode mode, Reading reading);

/// Named suites: "c0", "c1", "lorentzian", "all".
std::vector<Report> run_suite(std::string_view suite, const VerifyOptions& options = {});

}  // namespace transurf::algebra
