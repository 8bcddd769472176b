#include "sebp/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include <boost/math/distributions/normal.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "sebp/error.hpp"
#include "sebp/numerics.hpp"

namespace sebp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double std_normal_quantile(double z) {
  return boost::math::quantile(boost::math::normal_distribution<double>(), z);
}

// Two-point mass helpers for degenerate continuous laws.
double point_cdf(double v, double x) { return x >= v ? 1.0 : 0.0; }
double point_tail(double v, double a) { return std::max(v - a, 0.0); }

double finite_cdf(const std::vector<Atom>& pts, double x) {
  double acc = 0.0;
  for (const auto& a : pts) {
    if (a.value > x) break;
    acc += a.prob;
  }
  return std::min(acc, 1.0);
}

double finite_quantile(const std::vector<Atom>& pts, double z) {
  double acc = 0.0;
  for (const auto& a : pts) {
    acc += a.prob;
    if (acc >= z - 1e-15) return a.value;
  }
  return pts.back().value;
}

double finite_tail(const std::vector<Atom>& pts, double a) {
  double acc = 0.0;
  for (const auto& p : pts) acc += p.prob * std::max(p.value - a, 0.0);
  return acc;
}

double triangular_cdf(const law::Triangular& t, double x) {
  if (x < t.a) return 0.0;
  if (x >= t.b) return 1.0;
  const double w = t.b - t.a;
  if (x <= t.c) return (t.c > t.a) ? (x - t.a) * (x - t.a) / (w * (t.c - t.a)) : 0.0;
  return 1.0 - (t.b - x) * (t.b - x) / (w * (t.b - t.c));
}

double triangular_tail(const law::Triangular& t, double x) {
  const double mean = (t.a + t.b + t.c) / 3.0;
  if (x <= t.a) return mean - x;
  if (x >= t.b) return 0.0;
  const double w = t.b - t.a;
  // Survival on [c, b] is (b - t)^2 / (w (b - c)); its integral from y to b is (b - y)^3 / (3 w (b - c)).
  if (x >= t.c) return std::pow(t.b - x, 3) / (3.0 * w * (t.b - t.c));
  const double upper = (t.b - t.c) * (t.b - t.c) / (3.0 * w);
  const double lower = (t.c - x) - (std::pow(t.c - t.a, 3) - std::pow(x - t.a, 3)) / (3.0 * w * (t.c - t.a));
  return lower + upper;
}

double triangular_quantile(const law::Triangular& t, double z) {
  const double w = t.b - t.a;
  const double fc = (t.c - t.a) / w;
  if (z <= fc) return t.a + std::sqrt(z * w * (t.c - t.a));
  return t.b - std::sqrt((1.0 - z) * w * (t.b - t.c));
}

}  // namespace

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::finite: return "finite";
    case Kind::deterministic: return "deterministic";
    case Kind::scaled_bernoulli: return "scaled-bernoulli";
    case Kind::lognormal: return "lognormal";
    case Kind::gamma: return "gamma";
    case Kind::weibull: return "weibull";
    case Kind::uniform: return "uniform";
    case Kind::triangular: return "triangular";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Factories

Distribution Distribution::finite(std::vector<Atom> points) {
  require(!points.empty(), "finite distribution needs at least one point");
  double total = 0.0;
  for (const auto& a : points) {
    require(finite_nonneg(a.value), "finite distribution values must be finite and >= 0");
    require(std::isfinite(a.prob) && a.prob >= 0.0, "finite distribution probabilities must be >= 0");
    total += a.prob;
  }
  require(std::abs(total - 1.0) <= 1e-12, "finite distribution probabilities must sum to 1");
  std::stable_sort(points.begin(), points.end(),
                   [](const Atom& x, const Atom& y) { return x.value < y.value; });
  std::vector<Atom> merged;
  for (const auto& a : points) {
    if (a.prob == 0.0) continue;
    if (!merged.empty() && merged.back().value == a.value) {
      merged.back().prob += a.prob;
    } else {
      merged.push_back(a);
    }
  }
  return Distribution(law::Finite{std::move(merged)});
}

Distribution Distribution::deterministic(double value) {
  require(finite_nonneg(value), "deterministic value must be finite and >= 0");
  return Distribution(law::Deterministic{value});
}

Distribution Distribution::scaled_bernoulli(double x, double p) {
  require(std::isfinite(x) && x > 0.0, "scaled-bernoulli needs x > 0");
  require(p >= 0.0 && p <= 1.0, "scaled-bernoulli needs p in [0, 1]");
  return Distribution(law::ScaledBernoulli{x, p});
}

Distribution Distribution::lognormal(double mu, double sigma) {
  require(std::isfinite(mu), "lognormal mu must be finite");
  require(std::isfinite(sigma) && sigma >= 0.0, "lognormal sigma must be >= 0");
  return Distribution(law::Lognormal{mu, sigma});
}

Distribution Distribution::gamma(double shape, double scale) {
  require(std::isfinite(shape) && shape > 0.0, "gamma shape must be > 0");
  require(std::isfinite(scale) && scale > 0.0, "gamma scale must be > 0");
  return Distribution(law::Gamma{shape, scale});
}

Distribution Distribution::weibull(double shape, double scale) {
  require(std::isfinite(shape) && shape > 0.0, "weibull shape must be > 0");
  require(std::isfinite(scale) && scale > 0.0, "weibull scale must be > 0");
  return Distribution(law::Weibull{shape, scale});
}

Distribution Distribution::uniform(double a, double b) {
  require(finite_nonneg(a) && std::isfinite(b) && a <= b, "uniform needs 0 <= a <= b");
  return Distribution(law::Uniform{a, b});
}

Distribution Distribution::triangular(double a, double b, double c) {
  require(finite_nonneg(a) && std::isfinite(b) && a <= c && c <= b,
          "triangular needs 0 <= a <= c <= b");
  return Distribution(law::Triangular{a, b, c});
}

// ---------------------------------------------------------------------------
// Moments

double Distribution::mean() const {
  return std::visit(
      overloaded{
          [](const law::Finite& f) {
            double m = 0.0;
            for (const auto& a : f.points) m += a.value * a.prob;
            return m;
          },
          [](const law::Deterministic& d) { return d.value; },
          [](const law::ScaledBernoulli& b) { return b.x * b.p; },
          [](const law::Lognormal& l) { return std::exp(l.mu + 0.5 * l.sigma * l.sigma); },
          [](const law::Gamma& g) { return g.shape * g.scale; },
          [](const law::Weibull& w) { return w.scale * std::tgamma(1.0 + 1.0 / w.shape); },
          [](const law::Uniform& u) { return 0.5 * (u.a + u.b); },
          [](const law::Triangular& t) { return (t.a + t.b + t.c) / 3.0; },
      },
      law_);
}

double Distribution::variance() const {
  return std::visit(
      overloaded{
          [](const law::Finite& f) {
            double m = 0.0;
            for (const auto& a : f.points) m += a.value * a.prob;
            double v = 0.0;
            for (const auto& a : f.points) v += a.prob * (a.value - m) * (a.value - m);
            return v;
          },
          [](const law::Deterministic&) { return 0.0; },
          [](const law::ScaledBernoulli& b) { return b.x * b.x * b.p * (1.0 - b.p); },
          [](const law::Lognormal& l) {
            const double s2 = l.sigma * l.sigma;
            return std::expm1(s2) * std::exp(2.0 * l.mu + s2);
          },
          [](const law::Gamma& g) { return g.shape * g.scale * g.scale; },
          [](const law::Weibull& w) {
            const double g1 = std::tgamma(1.0 + 1.0 / w.shape);
            const double g2 = std::tgamma(1.0 + 2.0 / w.shape);
            return w.scale * w.scale * (g2 - g1 * g1);
          },
          [](const law::Uniform& u) { return (u.b - u.a) * (u.b - u.a) / 12.0; },
          [](const law::Triangular& t) {
            return (t.a * t.a + t.b * t.b + t.c * t.c - t.a * t.b - t.a * t.c - t.b * t.c) / 18.0;
          },
      },
      law_);
}

double Distribution::cdf(double x) const {
  if (x < 0.0) return 0.0;
  return std::visit(
      overloaded{
          [x](const law::Finite& f) { return finite_cdf(f.points, x); },
          [x](const law::Deterministic& d) { return point_cdf(d.value, x); },
          [x](const law::ScaledBernoulli& b) { return x >= b.x ? 1.0 : 1.0 - b.p; },
          [x](const law::Lognormal& l) {
            if (l.sigma == 0.0) return point_cdf(std::exp(l.mu), x);
            if (x <= 0.0) return 0.0;
            return std_normal_cdf((std::log(x) - l.mu) / l.sigma);
          },
          [x](const law::Gamma& g) { return boost::math::gamma_p(g.shape, x / g.scale); },
          [x](const law::Weibull& w) { return -std::expm1(-std::pow(x / w.scale, w.shape)); },
          [x](const law::Uniform& u) {
            if (u.a == u.b) return point_cdf(u.a, x);
            return std::clamp((x - u.a) / (u.b - u.a), 0.0, 1.0);
          },
          [x](const law::Triangular& t) {
            if (t.a == t.b) return point_cdf(t.a, x);
            return triangular_cdf(t, x);
          },
      },
      law_);
}

double Distribution::quantile(double z) const {
  if (!(z >= 0.0 && z <= 1.0)) throw InvalidArgument("quantile level must lie in [0, 1]");
  return std::visit(
      overloaded{
          [z](const law::Finite& f) { return finite_quantile(f.points, z); },
          [](const law::Deterministic& d) { return d.value; },
          [z](const law::ScaledBernoulli& b) { return (z <= 1.0 - b.p) ? 0.0 : b.x; },
          [z](const law::Lognormal& l) {
            if (l.sigma == 0.0) return std::exp(l.mu);
            if (z == 0.0) return 0.0;
            if (z == 1.0) return kInf;
            return std::exp(l.mu + l.sigma * std_normal_quantile(z));
          },
          [z](const law::Gamma& g) {
            if (z == 1.0) return kInf;
            return g.scale * boost::math::gamma_p_inv(g.shape, z);
          },
          [z](const law::Weibull& w) {
            if (z == 1.0) return kInf;
            return w.scale * std::pow(-std::log1p(-z), 1.0 / w.shape);
          },
          [z](const law::Uniform& u) { return u.a + z * (u.b - u.a); },
          [z](const law::Triangular& t) {
            if (t.a == t.b) return t.a;
            return triangular_quantile(t, z);
          },
      },
      law_);
}

double Distribution::tail_expectation(double a) const {
  if (!(a >= 0.0)) throw InvalidArgument("tail_expectation threshold must be >= 0");
  return std::visit(
      overloaded{
          [a](const law::Finite& f) { return finite_tail(f.points, a); },
          [a](const law::Deterministic& d) { return point_tail(d.value, a); },
          [a](const law::ScaledBernoulli& b) { return b.p * std::max(b.x - a, 0.0); },
          [a](const law::Lognormal& l) {
            if (l.sigma == 0.0) return point_tail(std::exp(l.mu), a);
            const double m = std::exp(l.mu + 0.5 * l.sigma * l.sigma);
            if (a <= 0.0) return m;
            const double d1 = (l.mu + l.sigma * l.sigma - std::log(a)) / l.sigma;
            const double d2 = d1 - l.sigma;
            return std::max(m * std_normal_cdf(d1) - a * std_normal_cdf(d2), 0.0);
          },
          [a](const law::Gamma& g) {
            const double m = g.shape * g.scale;
            if (a <= 0.0) return m;
            const double z = a / g.scale;
            return std::max(m * boost::math::gamma_q(g.shape + 1.0, z) -
                                a * boost::math::gamma_q(g.shape, z),
                            0.0);
          },
          [a](const law::Weibull& w) {
            // Integral of exp(-(t/scale)^shape) over [a, inf).
            const double inv = 1.0 / w.shape;
            const double z = std::pow(a / w.scale, w.shape);
            return w.scale * std::tgamma(1.0 + inv) * boost::math::gamma_q(inv, z);
          },
          [a](const law::Uniform& u) {
            if (a <= u.a) return 0.5 * (u.a + u.b) - a;
            if (a >= u.b) return 0.0;
            return (u.b - a) * (u.b - a) / (2.0 * (u.b - u.a));
          },
          [a](const law::Triangular& t) {
            if (t.a == t.b) return point_tail(t.a, a);
            return triangular_tail(t, a);
          },
      },
      law_);
}

double Distribution::support_max() const {
  return std::visit(
      overloaded{
          [](const law::Finite& f) { return f.points.back().value; },
          [](const law::Deterministic& d) { return d.value; },
          [](const law::ScaledBernoulli& b) { return b.p > 0.0 ? b.x : 0.0; },
          [](const law::Lognormal& l) { return l.sigma == 0.0 ? std::exp(l.mu) : kInf; },
          [](const law::Gamma&) { return kInf; },
          [](const law::Weibull&) { return kInf; },
          [](const law::Uniform& u) { return u.b; },
          [](const law::Triangular& t) { return t.b; },
      },
      law_);
}

bool Distribution::is_discrete() const {
  const Kind k = kind();
  return k == Kind::finite || k == Kind::deterministic || k == Kind::scaled_bernoulli;
}

std::vector<Atom> Distribution::atoms() const {
  return std::visit(
      overloaded{
          [](const law::Finite& f) { return f.points; },
          [](const law::Deterministic& d) { return std::vector<Atom>{{d.value, 1.0}}; },
          [](const law::ScaledBernoulli& b) {
            std::vector<Atom> out;
            if (b.p < 1.0) out.push_back({0.0, 1.0 - b.p});
            if (b.p > 0.0) out.push_back({b.x, b.p});
            return out;
          },
          [](const auto&) -> std::vector<Atom> {
            throw InvalidArgument("atoms() requires a discrete distribution");
          },
      },
      law_);
}

Distribution Distribution::scaled(double factor) const {
  require(std::isfinite(factor) && factor > 0.0, "scale factor must be > 0");
  return std::visit(
      overloaded{
          [factor](const law::Finite& f) {
            auto pts = f.points;
            for (auto& a : pts) a.value *= factor;
            return Distribution(law::Finite{std::move(pts)});
          },
          [factor](const law::Deterministic& d) { return deterministic(d.value * factor); },
          [factor](const law::ScaledBernoulli& b) { return scaled_bernoulli(b.x * factor, b.p); },
          [factor](const law::Lognormal& l) { return lognormal(l.mu + std::log(factor), l.sigma); },
          [factor](const law::Gamma& g) { return gamma(g.shape, g.scale * factor); },
          [factor](const law::Weibull& w) { return weibull(w.shape, w.scale * factor); },
          [factor](const law::Uniform& u) { return uniform(u.a * factor, u.b * factor); },
          [factor](const law::Triangular& t) {
            return triangular(t.a * factor, t.b * factor, t.c * factor);
          },
      },
      law_);
}

double Distribution::sample(Stream& stream) const {
  return std::visit(
      overloaded{
          [&stream](const law::Finite& f) {
            const double u = stream.uniform();
            double acc = 0.0;
            for (const auto& a : f.points) {
              acc += a.prob;
              if (u < acc) return a.value;
            }
            return f.points.back().value;
          },
          [](const law::Deterministic& d) { return d.value; },
          [&stream](const law::ScaledBernoulli& b) { return stream.uniform() < b.p ? b.x : 0.0; },
          [&stream](const law::Lognormal& l) {
            std::normal_distribution<double> normal(0.0, 1.0);
            return std::exp(l.mu + l.sigma * normal(stream));
          },
          [&stream](const law::Gamma& g) {
            std::gamma_distribution<double> gamma(g.shape, g.scale);
            return gamma(stream);
          },
          [&stream](const law::Weibull& w) {
            return w.scale * std::pow(-std::log1p(-stream.uniform()), 1.0 / w.shape);
          },
          [&stream](const law::Uniform& u) { return u.a + stream.uniform() * (u.b - u.a); },
          [&stream](const law::Triangular& t) {
            if (t.a == t.b) return t.a;
            return triangular_quantile(t, stream.uniform());
          },
      },
      law_);
}

// ---------------------------------------------------------------------------

double tail_expectation_quadrature(const Distribution& d, double a) {
  if (!(a >= 0.0)) throw InvalidArgument("tail_expectation threshold must be >= 0");
  const double hi = std::min(d.quantile(1.0 - 1e-12), d.support_max());
  if (!(hi > a)) return 0.0;
  auto survival = [&d](double t) { return 1.0 - d.cdf(t); };
  if (d.is_discrete()) {
    // Survival is piecewise constant; integrate cell by cell.
    double acc = 0.0;
    double lo = a;
    for (const auto& atom : d.atoms()) {
      if (atom.value <= lo) continue;
      acc += (atom.value - lo) * survival(lo);
      lo = atom.value;
    }
    return acc;
  }
  std::vector<double> breaks{a, hi};
  auto add_kink = [&](double x) {
    if (x > a && x < hi) breaks.push_back(x);
  };
  if (const auto* u = std::get_if<law::Uniform>(&d.law())) {
    add_kink(u->a);
  } else if (const auto* t = std::get_if<law::Triangular>(&d.law())) {
    add_kink(t->a);
    add_kink(t->c);
  }
  return numerics::integrate_piecewise(survival, std::move(breaks), 1e-11);
}

double squared_cv(const Distribution& d) {
  const double m = d.mean();
  if (!(m > 0.0)) throw InvalidArgument("squared coefficient of variation needs a positive mean");
  return d.variance() / (m * m);
}

double extension_cost(const Distribution& d, double x) {
  if (!(x >= 0.0)) throw InvalidArgument("extension_cost needs x >= 0");
  if (x == 0.0) return 1.0;
  return 1.0 + x * d.tail_expectation(1.0 / x);
}

}  // namespace sebp
