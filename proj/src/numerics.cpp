#include "sebp/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "sebp/error.hpp"

namespace sebp::numerics {

double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol) {
  if (!(b > a)) return 0.0;
  using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;
  double err = 0.0;
  double l1 = 0.0;
  Rule::integrate(f, a, b, 0, 0.0, &err, &l1);
  const double rel = std::clamp(abs_tol / std::max(l1, 1e-300), 1e-12, 1e-3);
  double value = Rule::integrate(f, a, b, 20, rel, &err, &l1);
  if (std::isfinite(value) && err <= 10.0 * std::max(abs_tol, rel * l1)) return value;

  // Endpoint singularities defeat the Kronrod rule; the double-exponential rule absorbs them.
  boost::math::quadrature::tanh_sinh<double> rule;
  value = rule.integrate(f, a, b, rel, &err, &l1);
  if (!std::isfinite(value) || err > 10.0 * std::max(abs_tol, rel * l1)) {
    throw NumericalFailure("quadrature did not converge on [" + std::to_string(a) + ", " +
                           std::to_string(b) + "], error estimate " + std::to_string(err));
  }
  return value;
}

double integrate_piecewise(const std::function<double(double)>& f, std::vector<double> breaks,
                           double abs_tol) {
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  const double pieces = std::max<double>(1.0, static_cast<double>(breaks.size()) - 1.0);
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    acc += integrate(f, breaks[i], breaks[i + 1], abs_tol / pieces);
  }
  return acc;
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double x_tol) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0) == (fhi > 0)) {
    throw NumericalFailure("bisection bracket [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "] does not contain a sign change");
  }
  for (int it = 0; it < 200 && hi - lo > x_tol; ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Maximum golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                           double x_tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > x_tol) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  double x = 0.5 * (lo + hi);
  return {x, f(x)};
}

Maximum scan_and_refine_max(const std::function<double(double)>& f, double lo, double hi,
                            double step, double x_tol) {
  auto cells = static_cast<long>(std::ceil((hi - lo) / step));
  cells = std::max(cells, 1L);
  Maximum best{lo, f(lo)};
  long best_k = 0;
  for (long k = 1; k <= cells; ++k) {
    double t = std::min(hi, lo + static_cast<double>(k) * step);
    double v = f(t);
    if (v > best.value) {
      best = {t, v};
      best_k = k;
    }
  }
  double a = std::max(lo, lo + static_cast<double>(best_k - 1) * step);
  double b = std::min(hi, lo + static_cast<double>(best_k + 1) * step);
  Maximum refined = golden_section_max(f, a, b, x_tol);
  return refined.value >= best.value ? refined : best;
}

}  // namespace sebp::numerics
