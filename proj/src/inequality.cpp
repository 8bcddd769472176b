#include "sebp/inequality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "sebp/error.hpp"
#include "sebp/numerics.hpp"

namespace sebp {
namespace {

double positive_mean(const Distribution& d) {
  const double m = d.mean();
  if (!(m > 0.0)) throw InvalidArgument("Lorenz functionals need a positive mean");
  return m;
}

// Integral of the quantile function over [0, p] equals mu - E[(D - q)^+] - q (1 - p) with
// q = Q(p); exact also when p falls inside an atom.
double lorenz_with_mean(const Distribution& d, double mu, double p) {
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;
  const double q = d.quantile(p);
  const double upper = d.tail_expectation(q) + q * (1.0 - p);
  return std::clamp(1.0 - upper / mu, 0.0, 1.0);
}

}  // namespace

double lorenz(const Distribution& d, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("lorenz needs p in [0, 1]");
  return lorenz_with_mean(d, positive_mean(d), p);
}

double pietra_index(const Distribution& d) {
  const double mu = positive_mean(d);
  return d.tail_expectation(mu) / mu;
}

double gini_index(const Distribution& d) {
  const double mu = positive_mean(d);
  auto curve = [&d, mu](double p) { return lorenz_with_mean(d, mu, p); };
  // The Lorenz curve of a discrete law is piecewise linear with kinks at the cumulative
  // probabilities; integrating cell by cell makes the rule exact there.
  std::vector<double> breaks{0.0};
  if (d.is_discrete()) {
    double acc = 0.0;
    for (const auto& a : d.atoms()) {
      acc += a.prob;
      if (acc > breaks.back() && acc < 1.0) breaks.push_back(acc);
    }
  }
  breaks.push_back(1.0);
  double area = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    area += numerics::integrate(curve, breaks[i], breaks[i + 1], 1e-11);
  }
  return std::max(1.0 - 2.0 * area, 0.0);
}

DominanceVerdict dominates_so(const Distribution& y, const Distribution& z, int grid) {
  if (grid < 1) throw InvalidArgument("dominance grid needs at least one cell");
  DominanceVerdict verdict;
  constexpr double kTolerance = -1e-9;
  try {
    const double mu_y = y.mean();
    const double mu_z = z.mean();
    if (!std::isfinite(mu_y) || !std::isfinite(mu_z)) return verdict;
    const double level = 1.0 - 1e-9;
    const double hi = std::max(std::min(y.quantile(level), y.support_max()),
                               std::min(z.quantile(level), z.support_max()));
    if (!std::isfinite(hi)) return verdict;

    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(grid) + 1);
    for (int k = 0; k <= grid; ++k) xs.push_back(hi * static_cast<double>(k) / grid);
    for (const Distribution* d : {&y, &z}) {
      if (!d->is_discrete()) continue;
      for (const auto& a : d->atoms()) xs.push_back(a.value);
    }
    std::sort(xs.begin(), xs.end());

    // Integral of F over (-inf, x] is E[(x - D)^+] = x - mu + E[(D - x)^+], so the integral
    // condition at x reduces to (mu_y - mu_z) + tail_z(x) - tail_y(x).
    verdict.min_integral = mu_y - mu_z;
    verdict.x = std::numeric_limits<double>::infinity();
    for (double x : xs) {
      const double value = (mu_y - mu_z) + z.tail_expectation(x) - y.tail_expectation(x);
      if (!std::isfinite(value)) return DominanceVerdict{};
      if (value < verdict.min_integral) {
        verdict.min_integral = value;
        verdict.x = x;
      }
    }
    verdict.outcome = verdict.min_integral < kTolerance ? DominanceVerdict::Outcome::dominated_at
                                                        : DominanceVerdict::Outcome::dominates;
  } catch (const NumericalFailure&) {
    return DominanceVerdict{};
  }
  return verdict;
}

}  // namespace sebp
