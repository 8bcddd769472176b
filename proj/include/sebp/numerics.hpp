#pragma once

#include <functional>
#include <vector>

namespace sebp::numerics {

/// Adaptive Gauss-Kronrod (G7/K15) integral of `f` over [a, b], retried with tanh-sinh when
/// the Kronrod rule stalls. Throws NumericalFailure when the error estimate stays above `abs_tol`.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-11);

/// Sum of integrate() over consecutive cells of the sorted, deduplicated `breaks`.
double integrate_piecewise(const std::function<double(double)>& f, std::vector<double> breaks,
                           double abs_tol = 1e-11);

/// Root of `f` on [lo, hi] by bisection; f(lo) and f(hi) must differ in sign.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double x_tol = 1e-12);

struct Maximum {
  double argmax;
  double value;
};

/// Golden-section search for a maximum of a unimodal `f` on [lo, hi].
Maximum golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                           double x_tol = 1e-8);

/// Scan `f` on a uniform grid with spacing `step` over [lo, hi], then refine the best
/// grid point by golden-section search on its neighbouring cells.
Maximum scan_and_refine_max(const std::function<double(double)>& f, double lo, double hi,
                            double step = 1e-3, double x_tol = 1e-8);

}  // namespace sebp::numerics
