#include "sebp/family.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "sebp/error.hpp"
#include "sebp/numerics.hpp"

namespace sebp {
namespace {
// Slack on the feasibility boundary so that grid values such as 1/3 or 1/6 that sit exactly
// on a family's limit are accepted despite rounding.
constexpr double kBoundarySlack = 1e-12;
}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::lognormal: return "lognormal";
    case Family::gamma: return "gamma";
    case Family::weibull: return "weibull";
    case Family::uniform: return "uniform";
    case Family::bernoulli: return "bernoulli";
    case Family::triangular: return "triangular";
  }
  return "unknown";
}

Family family_from_string(std::string_view name) {
  for (Family f : {Family::lognormal, Family::gamma, Family::weibull, Family::uniform,
                   Family::bernoulli, Family::triangular}) {
    if (to_string(f) == name) return f;
  }
  throw InvalidArgument("unknown family '" + std::string(name) + "'");
}

double FamilySpec::max_delta() const {
  switch (family) {
    case Family::uniform: return 1.0 / 3.0;
    case Family::triangular:
      return (alpha * alpha - alpha + 1.0) / (2.0 * (1.0 + alpha) * (1.0 + alpha));
    default: return std::numeric_limits<double>::infinity();
  }
}

bool FamilySpec::feasible() const {
  if (!(delta >= 0.0) || !std::isfinite(delta)) return false;
  if (family == Family::triangular && !(alpha >= 0.0 && alpha <= 1.0)) return false;
  return delta <= max_delta() + kBoundarySlack;
}

void FamilySpec::validate() const {
  if (family == Family::triangular && !(alpha >= 0.0 && alpha <= 1.0)) {
    throw InvalidArgument("triangular shape alpha must lie in [0, 1]");
  }
  if (!feasible()) {
    std::ostringstream os;
    os << "squared coefficient of variation " << delta << " is not admissible for family "
       << label() << " (max " << max_delta() << ")";
    throw InvalidArgument(os.str());
  }
}

std::string FamilySpec::label() const {
  std::ostringstream os;
  os << to_string(family);
  if (family == Family::triangular) os << "(alpha=" << alpha << ")";
  return os.str();
}

double weibull_shape_for(double delta) {
  if (!(delta > 0.0)) throw InvalidArgument("weibull_shape_for needs delta > 0");
  auto excess = [delta](double k) {
    return std::exp(std::lgamma(1.0 + 2.0 / k) - 2.0 * std::lgamma(1.0 + 1.0 / k)) - (delta + 1.0);
  };
  return numerics::bisect(excess, 0.5, 200.0, 1e-12);
}

Distribution minimal_element(const FamilySpec& spec) {
  spec.validate();
  const double d = spec.delta;
  if (d == 0.0) return Distribution::deterministic(1.0);
  switch (spec.family) {
    case Family::lognormal: {
      const double s2 = std::log1p(d);
      return Distribution::lognormal(-0.5 * s2, std::sqrt(s2));
    }
    case Family::gamma:
      return Distribution::gamma(1.0 / d, d);
    case Family::weibull: {
      const double k = weibull_shape_for(d);
      return Distribution::weibull(k, 1.0 / std::tgamma(1.0 + 1.0 / k));
    }
    case Family::uniform: {
      const double h = std::min(std::sqrt(3.0 * d), 1.0);
      return Distribution::uniform(1.0 - h, 1.0 + h);
    }
    case Family::bernoulli:
      return Distribution::scaled_bernoulli(d + 1.0, 1.0 / (d + 1.0));
    case Family::triangular: {
      const double a = spec.alpha;
      const double g = std::sqrt(2.0 * d / (a * a - a + 1.0));
      const double lo = std::max(1.0 - (1.0 + a) * g, 0.0);
      const double hi = 1.0 + (2.0 - a) * g;
      const double mode = std::clamp(1.0 + (2.0 * a - 1.0) * g, lo, hi);
      return Distribution::triangular(lo, hi, mode);
    }
  }
  throw InvalidArgument("unknown family");
}

}  // namespace sebp
