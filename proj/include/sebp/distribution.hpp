#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sebp/rng.hpp"

namespace sebp {

/// One support point of a discrete law.
struct Atom {
  double value;
  double prob;

  friend bool operator==(const Atom&, const Atom&) = default;
};

namespace law {

/// Sorted ascending, distinct values, strictly positive probabilities.
struct Finite {
  std::vector<Atom> points;
  friend bool operator==(const Finite&, const Finite&) = default;
};
struct Deterministic {
  double value;
  friend bool operator==(const Deterministic&, const Deterministic&) = default;
};
/// Takes the value x with probability p and 0 otherwise.
struct ScaledBernoulli {
  double x;
  double p;
  friend bool operator==(const ScaledBernoulli&, const ScaledBernoulli&) = default;
};
/// exp(N(mu, sigma^2)).
struct Lognormal {
  double mu;
  double sigma;
  friend bool operator==(const Lognormal&, const Lognormal&) = default;
};
struct Gamma {
  double shape;
  double scale;
  friend bool operator==(const Gamma&, const Gamma&) = default;
};
struct Weibull {
  double shape;
  double scale;
  friend bool operator==(const Weibull&, const Weibull&) = default;
};
struct Uniform {
  double a;
  double b;
  friend bool operator==(const Uniform&, const Uniform&) = default;
};
/// Support [a, b], mode c.
struct Triangular {
  double a;
  double b;
  double c;
  friend bool operator==(const Triangular&, const Triangular&) = default;
};

}  // namespace law

enum class Kind { finite, deterministic, scaled_bernoulli, lognormal, gamma, weibull, uniform, triangular };

std::string_view to_string(Kind kind);

/// A nonnegative processing-time law. Immutable once constructed; construct
/// through the named factories, which validate their parameters and throw
/// InvalidArgument on violation.
class Distribution {
 public:
  using Law = std::variant<law::Finite, law::Deterministic, law::ScaledBernoulli, law::Lognormal,
                           law::Gamma, law::Weibull, law::Uniform, law::Triangular>;

  /// Values are sorted and duplicate values merged; probabilities must sum to 1 within 1e-12.
  static Distribution finite(std::vector<Atom> points);
  static Distribution deterministic(double value);
  static Distribution scaled_bernoulli(double x, double p);
  static Distribution lognormal(double mu, double sigma);
  static Distribution gamma(double shape, double scale);
  static Distribution weibull(double shape, double scale);
  static Distribution uniform(double a, double b);
  static Distribution triangular(double a, double b, double c);

  Kind kind() const { return static_cast<Kind>(law_.index()); }
  const Law& law() const { return law_; }

  double mean() const;
  double variance() const;
  double cdf(double x) const;
  /// Generalized inverse inf{x : F(x) >= z} for z in [0, 1]; may be +inf at z = 1.
  double quantile(double z) const;
  /// E[(D - a)^+] for a >= 0.
  double tail_expectation(double a) const;
  /// E[min(D, 1)].
  double truncated_mean() const { return mean() - tail_expectation(1.0); }
  /// Largest point of the support (+inf when unbounded).
  double support_max() const;

  /// True for laws with finitely many support points (finite, deterministic, scaled Bernoulli).
  bool is_discrete() const;
  /// Support points of a discrete law, ascending, zero-probability points removed.
  /// Throws InvalidArgument for continuous laws.
  std::vector<Atom> atoms() const;

  /// Law of factor * D, same kind. factor > 0.
  Distribution scaled(double factor) const;

  double sample(Stream& stream) const;

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  explicit Distribution(Law law) : law_(std::move(law)) {}
  Law law_;
};

/// Reference route for E[(D - a)^+]: adaptive quadrature of the survival function over
/// [a, q(1 - 1e-12)]. Also the fallback for laws without a closed form.
double tail_expectation_quadrature(const Distribution& d, double a);

inline double mean(const Distribution& d) { return d.mean(); }
inline double tail_expectation(const Distribution& d, double a) { return d.tail_expectation(a); }
inline double sample(const Distribution& d, Stream& stream) { return d.sample(stream); }

/// Variance over squared mean. Throws InvalidArgument for a zero-mean law.
double squared_cv(const Distribution& d);

/// g(x) = E[max(x D, 1)] = 1 + x E[(D - 1/x)^+]; g(0) = 1.
double extension_cost(const Distribution& d, double x);

}  // namespace sebp
