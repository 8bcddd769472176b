#pragma once

#include <string>
#include <string_view>

#include "sebp/distribution.hpp"

namespace sebp {

/// The second-order dominated families with bounded squared coefficient of variation.
enum class Family { lognormal, gamma, weibull, uniform, bernoulli, triangular };

std::string_view to_string(Family family);
/// Accepts the names produced by to_string(Family); throws InvalidArgument otherwise.
Family family_from_string(std::string_view name);

/// A family together with its bound `delta` on the squared coefficient of variation.
/// `alpha` is the triangular mode position and is ignored by the other families.
struct FamilySpec {
  Family family = Family::lognormal;
  double delta = 0.0;
  double alpha = 0.0;

  /// Largest admissible delta (+inf when unbounded).
  double max_delta() const;
  bool feasible() const;
  /// Throws InvalidArgument unless feasible().
  void validate() const;
  std::string label() const;
};

/// Weibull shape k with Gamma(1+2/k)/Gamma(1+1/k)^2 = delta + 1, by bisection on [0.5, 200].
double weibull_shape_for(double delta);

/// The unit-mean minimal element Z of the family: every normalized member dominates
/// Z at the second order. delta = 0 yields deterministic(1) for every family.
Distribution minimal_element(const FamilySpec& spec);

}  // namespace sebp
