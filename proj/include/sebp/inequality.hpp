#pragma once

#include "sebp/distribution.hpp"

namespace sebp {

/// Lorenz curve L(p) = (1/E[D]) * integral of the quantile function over [0, p].
double lorenz(const Distribution& d, double p);

/// E|D - mu| / (2 mu).
double pietra_index(const Distribution& d);

/// Twice the area between the diagonal and the Lorenz curve, by quadrature on L.
double gini_index(const Distribution& d);

struct DominanceVerdict {
  enum class Outcome { dominates, dominated_at, inconclusive };
  Outcome outcome = Outcome::inconclusive;
  /// Witness point for dominated_at: the integral condition is violated there.
  double x = 0.0;
  /// Smallest value of the integral condition seen on the grid.
  double min_integral = 0.0;
};

/// Grid check of the second-order integral condition
///   integral over (-inf, x] of (F_z - F_y) dt >= 0 for all x,
/// on `grid` + 1 uniform points over [0, max(q_y(1-1e-9), q_z(1-1e-9))], the atoms of
/// discrete laws, and x = +inf. Values below -1e-9 are violations.
DominanceVerdict dominates_so(const Distribution& y, const Distribution& z, int grid = 4096);

}  // namespace sebp
