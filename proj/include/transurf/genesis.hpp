#pragma once

// Closed-form members of the translation-surface classification: the plane,
// generalized cylinders and Scherk's minimal surface, plus the elliptic
// paraboloid as a non-linear-Weingarten control.
//
// Translation surfaces with constant K != 0 or constant H != 0 do not exist,
// so no generator is offered for them.
//
// Scherk's surface with separation constant lambda is
//   z = (log cos(lambda y) - log cos(lambda x)) / lambda,
// whose profile f solves f'' = lambda (1 + f'^2), f(0) = f'(0) = 0, i.e.
// f''/(1 + f'^2) = lambda and the matching g-quotient equals -lambda.

#include <string>
#include <string_view>
#include <vector>

#include "transurf/surface.hpp"

namespace transurf {

enum class Family { Plane, Cylinder, Scherk, Paraboloid };

std::string_view to_string(Family family);
Family parse_family(std::string_view tag);

struct FamilySpec {
  Family family = Family::Plane;
  double lambda = 1.0;            // Scherk
  std::string profile = "t^2";    // Cylinder: f; g is identically 0
};

/// Throws std::invalid_argument for lambda <= 0 (Scherk) or an unparsable
/// cylinder profile.
TranslationSurface make_family(const FamilySpec& spec);

/// Profile sources used by make_family for the f and g slots.
std::string family_profile_f(const FamilySpec& spec);
std::string family_profile_g(const FamilySpec& spec);

/// Margin kept from the cos zeros of the Scherk profiles.
double scherk_margin(double lambda);
/// Largest safe |t| for Scherk profiles with this lambda.
double scherk_half_width(double lambda);

/// Closed form of the separated profile: -log(cos(lambda x)) / lambda.
double separated_profile_exact(double lambda, double x);

using ProfileTable = std::vector<TableProfile::Row>;

class BlowUp : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Classical RK4 for f'' = lambda (1 + f'^2), f(0) = 0, f'(0) = 0, stepping
/// from 0 to x_end; the last step is shortened to land on x_end. Throws
/// std::invalid_argument unless |lambda x_end| < pi/2 and step > 0, and
/// BlowUp if |f'| exceeds 1e6.
ProfileTable integrate_separated_profile(double lambda, double x_end, double step);

/// Maximum |H| over the valid samples of the grid.
double verify_minimal(const TranslationSurface& surface, const GridSpec& grid);

}  // namespace transurf
