#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "sebp/distribution.hpp"
#include "sebp/error.hpp"
#include "sebp/family.hpp"
#include "sebp/inequality.hpp"
#include "sebp/numerics.hpp"

using namespace sebp;
using doctest::Approx;

namespace {

const std::vector<double> kDeltaGrid{0.0, 1.0 / 8, 1.0 / 6, 1.0 / 4, 1.0 / 3, 1.0 / 2, 1.0};

std::vector<FamilySpec> grid_specs() {
  std::vector<FamilySpec> out;
  for (double d : kDeltaGrid) {
    for (auto f : {Family::lognormal, Family::gamma, Family::weibull, Family::uniform, Family::bernoulli}) {
      FamilySpec s{f, d};
      if (s.feasible()) out.push_back(s);
    }
    for (double a : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      FamilySpec s{Family::triangular, d, a};
      if (s.feasible()) out.push_back(s);
    }
  }
  return out;
}

std::vector<Distribution> zoo() {
  return {
      Distribution::deterministic(0.7),
      Distribution::scaled_bernoulli(2.0, 0.5),
      Distribution::scaled_bernoulli(100.0, 0.01),
      Distribution::finite({{0.4, 0.5}, {1.2, 0.5}}),
      Distribution::finite({{0.0, 0.2}, {0.3, 0.3}, {1.7, 0.4}, {2.5, 0.1}}),
      Distribution::lognormal(-0.2, 0.6),
      Distribution::lognormal(0.3, 1.1),
      Distribution::gamma(0.7, 1.4),
      Distribution::gamma(3.0, 0.5),
      Distribution::weibull(0.8, 1.2),
      Distribution::weibull(2.5, 0.9),
      Distribution::uniform(0.2, 1.8),
      Distribution::triangular(0.0, 2.0, 0.5),
      Distribution::triangular(0.3, 1.1, 1.1),
  };
}

}  // namespace

TEST_CASE("means of simple laws") {
  CHECK(Distribution::scaled_bernoulli(2.0, 0.5).mean() == Approx(1.0));
  CHECK(Distribution::deterministic(0.4).mean() == 0.4);
  const double mu = std::log(1.0 / std::sqrt(2.0));
  CHECK(Distribution::lognormal(mu, std::sqrt(std::log(2.0))).mean() == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("squared coefficient of variation") {
  CHECK(squared_cv(Distribution::deterministic(3.0)) == 0.0);
  for (double k : {0.5, 1.0, 4.0}) {
    CHECK(squared_cv(Distribution::gamma(k, 2.7)) == Approx(1.0 / k).epsilon(1e-12));
  }
  CHECK(squared_cv(Distribution::scaled_bernoulli(2.0, 0.5)) == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("tail expectation examples") {
  CHECK(Distribution::deterministic(1.2).tail_expectation(1.0) == Approx(0.2).epsilon(1e-14));
  CHECK(Distribution::scaled_bernoulli(100.0, 0.01).tail_expectation(1.0) == Approx(0.99).epsilon(1e-14));
  CHECK(Distribution::finite({{0.4, 0.5}, {1.2, 0.5}}).tail_expectation(1.0) == Approx(0.1).epsilon(1e-14));
}

TEST_CASE("closed-form tails agree with quadrature of the survival function") {
  for (const auto& d : zoo()) {
    CAPTURE(to_string(d.kind()));
    for (double a : {0.0, 0.1, 0.5, 1.0, 1.5, 3.0, 7.0}) {
      CAPTURE(a);
      CHECK(d.tail_expectation(a) == Approx(tail_expectation_quadrature(d, a)).epsilon(1e-8).scale(1.0));
    }
  }
}

TEST_CASE("tail expectation is nonnegative, nonincreasing and bounded by the mean") {
  for (const auto& d : zoo()) {
    double prev = d.mean();
    for (double a = 0.0; a <= 6.0; a += 0.05) {
      const double t = d.tail_expectation(a);
      CHECK(t >= 0.0);
      CHECK(t <= prev + 1e-14);
      prev = t;
    }
    CHECK(d.tail_expectation(0.0) == Approx(d.mean()).epsilon(1e-12));
  }
}

TEST_CASE("tail expectation rejects negative thresholds") {
  CHECK_THROWS_AS(Distribution::gamma(2, 1).tail_expectation(-0.1), InvalidArgument);
}

TEST_CASE("cdf is nondecreasing and quantile inverts it") {
  for (const auto& d : zoo()) {
    double prev = 0.0;
    for (double x = 0.0; x <= 5.0; x += 0.01) {
      const double f = d.cdf(x);
      CHECK(f >= prev);
      CHECK(f <= 1.0);
      prev = f;
      if (f > 0.0 && f < 1.0 - 1e-8) CHECK(d.quantile(f) <= x * (1 + 1e-6) + 1e-9);
    }
  }
}

TEST_CASE("quantile is the generalized inverse") {
  for (const auto& d : zoo()) {
    CAPTURE(to_string(d.kind()));
    for (double z = 0.001; z < 1.0; z += 0.001) {
      const double q = d.quantile(z);
      CHECK(d.cdf(q) >= z - 1e-12);
      if (!d.is_discrete() && q > 0.0) CHECK(d.cdf(q * (1 - 1e-9) - 1e-12) <= z + 1e-12);
    }
  }
}

TEST_CASE("extension cost examples") {
  const auto z = Distribution::scaled_bernoulli(2.0, 0.5);
  CHECK(extension_cost(z, 0.0) == 1.0);
  CHECK(extension_cost(z, 0.5) == Approx(1.0).epsilon(1e-15));
  CHECK(extension_cost(z, 1.0) == Approx(1.5).epsilon(1e-15));
}

TEST_CASE("extension cost of discrete laws matches the direct sum") {
  for (const auto& d : zoo()) {
    if (!d.is_discrete()) continue;
    for (double x = 0.05; x <= 4.0; x += 0.05) {
      double direct = 0.0;
      for (const auto& a : d.atoms()) direct += a.prob * std::max(x * a.value, 1.0);
      CHECK(std::abs(extension_cost(d, x) - direct) <= 1e-12);
    }
  }
}

TEST_CASE("extension cost bounds, convexity and doubling") {
  for (const auto& d : zoo()) {
    const double mu = d.mean();
    for (double x = 0.05; x <= 3.0; x += 0.05) {
      const double g = extension_cost(d, x);
      CHECK(g >= std::max(1.0, x * mu) - 1e-12);
      CHECK(g <= 1.0 + x * mu + 1e-12);
      const double g2 = extension_cost(d, 2 * x);
      CHECK(g <= g2 + 1e-12);
      CHECK(g2 <= 2 * g + 1e-12);
      const double y = x + 0.1;
      CHECK(extension_cost(d, (x + y) / 2) <= (g + extension_cost(d, y)) / 2 + 1e-9);
    }
  }
}

TEST_CASE("minimal elements have unit mean and the requested squared CV") {
  for (const auto& s : grid_specs()) {
    CAPTURE(s.label());
    CAPTURE(s.delta);
    const auto z = minimal_element(s);
    CHECK(std::abs(z.mean() - 1.0) <= 1e-10);
    CHECK(std::abs(squared_cv(z) - s.delta) <= 1e-8);
  }
}

TEST_CASE("minimal element examples") {
  CHECK(minimal_element({Family::bernoulli, 1.0}) == Distribution::scaled_bernoulli(2.0, 0.5));
  const auto u = std::get<law::Uniform>(minimal_element({Family::uniform, 1.0 / 3}).law());
  CHECK(u.a == Approx(0.0).scale(1.0).epsilon(1e-12));
  CHECK(u.b == Approx(2.0).epsilon(1e-12));
  const auto g = std::get<law::Gamma>(minimal_element({Family::gamma, 0.5}).law());
  CHECK(g.shape == Approx(2.0));
  CHECK(g.scale == Approx(0.5));
  CHECK(minimal_element({Family::weibull, 0.0}) == Distribution::deterministic(1.0));
}

TEST_CASE("infeasible family parameters are rejected") {
  CHECK_THROWS_AS(minimal_element({Family::uniform, 0.5}), InvalidArgument);
  CHECK_THROWS_AS(minimal_element({Family::triangular, 0.2, 0.75}), InvalidArgument);
  CHECK_THROWS_AS(minimal_element({Family::triangular, 0.1, 1.5}), InvalidArgument);
  CHECK_THROWS_AS(minimal_element({Family::gamma, -0.1}), InvalidArgument);
}

TEST_CASE("Weibull shape solves the moment equation") {
  for (double d : {0.05, 0.25, 1.0, 3.0}) {
    const double k = weibull_shape_for(d);
    const double ratio = std::tgamma(1 + 2 / k) / std::pow(std::tgamma(1 + 1 / k), 2);
    CHECK(ratio == Approx(d + 1).epsilon(1e-10));
  }
}

TEST_CASE("Lorenz curve examples and shape") {
  const auto b = Distribution::scaled_bernoulli(2.0, 0.5);
  CHECK(lorenz(b, 0.5) == Approx(0.0).scale(1.0).epsilon(1e-12));
  CHECK(lorenz(b, 0.75) == Approx(0.5).epsilon(1e-12));
  for (double p = 0.0; p <= 1.0; p += 0.125) CHECK(lorenz(Distribution::deterministic(3.0), p) == Approx(p));
  for (const auto& d : zoo()) {
    CHECK(std::abs(lorenz(d, 0.0)) <= 1e-9);
    CHECK(std::abs(lorenz(d, 1.0) - 1.0) <= 1e-9);
    double prev = 0.0;
    for (double p = 0.01; p < 1.0; p += 0.01) {
      const double l = lorenz(d, p);
      CHECK(l >= prev - 1e-12);
      CHECK(l <= p + 1e-12);
      prev = l;
    }
  }
}

TEST_CASE("Pietra and Gini indices") {
  const auto b = Distribution::scaled_bernoulli(2.0, 0.5);
  const auto u = Distribution::uniform(0.0, 2.0);
  CHECK(pietra_index(Distribution::deterministic(2.0)) == Approx(0.0).scale(1.0));
  CHECK(pietra_index(b) == Approx(0.5));
  CHECK(pietra_index(u) == Approx(0.25));
  CHECK(gini_index(Distribution::deterministic(2.0)) == Approx(0.0).scale(1.0));
  CHECK(gini_index(b) == Approx(0.5).epsilon(1e-9));
  CHECK(gini_index(u) == Approx(1.0 / 3).epsilon(1e-9));
}

TEST_CASE("Gini index matches the integral of F(1 - F)") {
  for (const auto& d : zoo()) {
    CAPTURE(to_string(d.kind()));
    const double hi = d.quantile(1 - 1e-13);
    double oracle = 0.0;
    if (d.is_discrete()) {
      const auto atoms = d.atoms();
      double f = 0.0;
      for (std::size_t k = 0; k + 1 < atoms.size(); ++k) {
        f += atoms[k].prob;
        oracle += f * (1 - f) * (atoms[k + 1].value - atoms[k].value);
      }
    } else {
      oracle = numerics::integrate([&d](double t) { const double f = d.cdf(t); return f * (1 - f); }, 0.0, hi, 1e-10);
    }
    CHECK(gini_index(d) == Approx(oracle / d.mean()).epsilon(1e-6));
  }
}

TEST_CASE("lognormal Gini index has the normal closed form") {
  for (double sigma : {0.2, 0.6, 1.1}) {
    const double expected = std::erf(sigma / 2.0);  // 2 Phi(sigma / sqrt 2) - 1
    CHECK(gini_index(Distribution::lognormal(0.1, sigma)) == Approx(expected).epsilon(1e-7));
  }
}

TEST_CASE("Pietra index is the largest gap below the diagonal and is at most Gini") {
  for (const auto& d : zoo()) {
    double gap = 0.0;
    for (int i = 1; i < 20000; ++i) {
      const double p = i / 20000.0;
      gap = std::max(gap, p - lorenz(d, p));
    }
    const double pietra = pietra_index(d);
    CHECK(pietra == Approx(gap).epsilon(1e-4));
    CHECK(pietra >= 0.0);
    CHECK(pietra < 1.0);
    CHECK(pietra <= gini_index(d) + 1e-9);
    CHECK(gini_index(d) < 1.0);
  }
}

TEST_CASE("second-order dominance examples") {
  const auto z = Distribution::scaled_bernoulli(2.0, 0.5);
  const auto one = Distribution::deterministic(1.0);
  using Outcome = DominanceVerdict::Outcome;
  for (const auto& d : zoo()) CHECK(dominates_so(d, d).outcome == Outcome::dominates);
  CHECK(dominates_so(one, z).outcome == Outcome::dominates);
  const auto v = dominates_so(z, one);
  CHECK(v.outcome == Outcome::dominated_at);
  CHECK(v.x < 1.0 + 1e-12);
  CHECK(v.min_integral < -1e-9);
}

TEST_CASE("minimal elements decrease in the second order as delta grows") {
  using Outcome = DominanceVerdict::Outcome;
  for (auto f : {Family::lognormal, Family::gamma, Family::weibull, Family::uniform, Family::bernoulli}) {
    for (std::size_t i = 0; i < kDeltaGrid.size(); ++i) {
      for (std::size_t j = i + 1; j < kDeltaGrid.size(); ++j) {
        const FamilySpec lo{f, kDeltaGrid[i]};
        const FamilySpec hi{f, kDeltaGrid[j]};
        if (!hi.feasible()) continue;
        CAPTURE(lo.label());
        CAPTURE(lo.delta);
        CAPTURE(hi.delta);
        const auto y = minimal_element(lo);
        const auto z = minimal_element(hi);
        CHECK(dominates_so(y, z).outcome == Outcome::dominates);
        // Dominance between equal means is the reversed Lorenz order.
        for (double p = 0.05; p < 1.0; p += 0.05) CHECK(lorenz(y, p) >= lorenz(z, p) - 1e-8);
      }
    }
  }
}

TEST_CASE("stochmin inequality and monotonicity of 1 + x - g(x)") {
  for (const auto& s : grid_specs()) {
    CAPTURE(s.label());
    CAPTURE(s.delta);
    const auto z = minimal_element(s);
    double prev = -1.0;
    for (double x = 0.0; x <= 4.0; x += 0.05) {
      const double h = 1 + x - extension_cost(z, x);
      CHECK(h >= prev - 1e-12);
      prev = h;
    }
    // Members: minimal elements of smaller squared CV in the same family, at several means.
    for (double frac : {0.0, 0.5, 1.0}) {
      FamilySpec member_spec = s;
      member_spec.delta = s.delta * frac;
      const auto member = minimal_element(member_spec);
      for (double mu : {0.2, 0.7, 1.0, 1.6, 3.0}) {
        const auto x = member.scaled(mu);
        CHECK(1 + mu - extension_cost(z, mu) <= x.truncated_mean() + 1e-8);
      }
    }
  }
}

TEST_CASE("finite laws are normalized at construction") {
  const auto d = Distribution::finite({{1.0, 0.25}, {0.0, 0.5}, {1.0, 0.25}, {3.0, 0.0}});
  const auto atoms = d.atoms();
  REQUIRE(atoms.size() == 2);
  CHECK(atoms[0] == Atom{0.0, 0.5});
  CHECK(atoms[1] == Atom{1.0, 0.5});
  CHECK_THROWS_AS(Distribution::finite({{1.0, 0.5}, {2.0, 0.4}}), InvalidArgument);
  CHECK_THROWS_AS(Distribution::finite({{-1.0, 0.5}, {2.0, 0.5}}), InvalidArgument);
  CHECK_THROWS_AS(Distribution::finite({}), InvalidArgument);
}

TEST_CASE("factories reject invalid parameters") {
  CHECK_THROWS_AS(Distribution::deterministic(-1), InvalidArgument);
  CHECK_THROWS_AS(Distribution::scaled_bernoulli(1, 1.5), InvalidArgument);
  CHECK_THROWS_AS(Distribution::lognormal(0, -1), InvalidArgument);
  CHECK_THROWS_AS(Distribution::gamma(0, 1), InvalidArgument);
  CHECK_THROWS_AS(Distribution::weibull(1, 0), InvalidArgument);
  CHECK_THROWS_AS(Distribution::uniform(2, 1), InvalidArgument);
  CHECK_THROWS_AS(Distribution::uniform(-1, 1), InvalidArgument);
  CHECK_THROWS_AS(Distribution::triangular(0, 1, 2), InvalidArgument);
  CHECK_THROWS_AS(squared_cv(Distribution::deterministic(0.0)), InvalidArgument);
}

TEST_CASE("sampling") {
  Stream s(1);
  for (int i = 0; i < 10; ++i) CHECK(Distribution::deterministic(0.4).sample(s) == 0.4);

  const auto b = Distribution::scaled_bernoulli(2.0, 0.5);
  const auto f = Distribution::finite({{0.0, 0.5}, {1.0, 0.5}});
  Stream s1(42);
  Stream s2(42);
  Stream s3(43);
  double sum_b = 0.0;
  double ones = 0.0;
  const int n = 1'000'000;
  for (int i = 0; i < n; ++i) {
    const double x = b.sample(s1);
    CHECK_FALSE(x != b.sample(s2));  // identical streams give identical draws
    sum_b += x;
    ones += f.sample(s3);
  }
  CHECK(std::abs(sum_b / n - 1.0) <= 0.005);
  CHECK(std::abs(ones / n - 0.5) <= 0.002);

  for (const auto& d : zoo()) {
    Stream st(7);
    double acc = 0.0;
    const int m = 200'000;
    for (int i = 0; i < m; ++i) {
      const double x = d.sample(st);
      REQUIRE(x >= 0.0);
      acc += x;
    }
    const double se = std::sqrt(d.variance() / m);
    CHECK(std::abs(acc / m - d.mean()) <= 5 * se + 1e-9 * d.mean());
  }
}

TEST_CASE("scaling preserves the kind and multiplies moments") {
  for (const auto& d : zoo()) {
    const auto s = d.scaled(2.5);
    CHECK(s.kind() == d.kind());
    CHECK(s.mean() == Approx(2.5 * d.mean()).epsilon(1e-12));
    CHECK(s.variance() == Approx(6.25 * d.variance()).epsilon(1e-10));
  }
}
