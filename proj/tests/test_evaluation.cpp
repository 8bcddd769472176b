#include <doctest.h>

#include <cmath>

#include "corpus.hpp"
#include "two_machine.hpp"
#include "oracles.hpp"
#include "sebp/error.hpp"
#include "sebp/evaluation.hpp"
#include "sebp/pmf.hpp"

using namespace sebp;
using doctest::Approx;

TEST_CASE("workload PMF by convolution") {
  const std::vector<Distribution> m2{Distribution::finite({{0.5, 0.5}, {0.7, 0.5}}), Distribution::deterministic(0.4)};
  const auto pmf = machine_pmf(m2);
  REQUIRE(pmf.size() == 2);
  CHECK(pmf.points()[0].value == Approx(0.9));
  CHECK(pmf.points()[0].prob == Approx(0.5));
  CHECK(pmf.points()[1].value == Approx(1.1));
  CHECK(pmf.expected_max(1.0) == Approx(1.05));

  const std::vector<Distribution> one{Distribution::finite({{0.2, 0.3}, {0.9, 0.7}})};
  const auto single = machine_pmf(one);
  REQUIRE(single.size() == 2);
  CHECK(single.points()[0] == Atom{0.2, 0.3});
  CHECK(single.points()[1] == Atom{0.9, 0.7});

  const std::vector<Distribution> two(2, Distribution::scaled_bernoulli(1.0, 0.5));
  const auto b = machine_pmf(two);
  REQUIRE(b.size() == 3);
  CHECK(b.points()[0].prob == Approx(0.25));
  CHECK(b.points()[1].prob == Approx(0.5));
  CHECK(b.points()[2].prob == Approx(0.25));
  CHECK(b.points()[2].value == 2.0);
}

TEST_CASE("workload PMF merges near-equal values and keeps the mean") {
  const std::vector<Distribution> jobs{Distribution::finite({{0.1, 0.5}, {0.3, 0.5}}),
                                       Distribution::finite({{0.2, 0.5}, {0.0, 0.5}})};
  const auto pmf = machine_pmf(jobs);
  CHECK(pmf.size() == 3);  // 0.1 + 0.2 and 0.3 + 0.0 coincide up to rounding
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto inst = corpus_instance(seed);
    double total = 0.0;
    const auto all = machine_pmf(inst.jobs());
    for (const auto& a : all.points()) total += a.prob;
    CHECK(total == Approx(1.0).epsilon(1e-12));
    CHECK(all.mean() == Approx(derived_scalars(inst).s).epsilon(1e-9));
  }
}

TEST_CASE("workload PMF cap") {
  const auto inst = gen_pons(2, 30);
  CHECK_NOTHROW(machine_pmf(inst.jobs()));
  const std::vector<Distribution> spread(8, Distribution::finite({{0.0, 0.25}, {0.1, 0.25}, {0.37, 0.25}, {1.13, 0.25}}));
  CHECK_NOTHROW(machine_pmf(spread, 1000));
  CHECK_THROWS_AS(machine_pmf(spread, 100), CapExceeded);
  const std::vector<Distribution> cont{Distribution::uniform(0, 1)};
  CHECK_THROWS_AS(machine_pmf(cont), InvalidArgument);
}

TEST_CASE("exact fixed-assignment cost") {
  const auto inst = two_machine_instance();
  const auto est = expected_cost_fixed(inst, lept_f(inst));
  CHECK(est.value == Approx(2.15).epsilon(1e-14));
  CHECK(est.method == Method::exact);
  CHECK(est.half_width == 0.0);
  CHECK(est.samples == 0);
  CHECK(est.value == Approx(oracle::fixed_cost(inst, lept_f(inst).machine_of)).epsilon(1e-14));

  const Instance det(2, {Distribution::deterministic(0.7), Distribution::deterministic(0.6), Distribution::deterministic(0.2)});
  CHECK(expected_cost_fixed(det, make_assignment(det, {0, 0, 1})).value == Approx(1.3 + 1.0));

  const auto pofa = gen_pofa(2, 2);
  CHECK(expected_cost_fixed(pofa, make_assignment(pofa, {0, 0, 1, 1})).value == Approx(2.5).epsilon(1e-14));

  const Instance cont(2, {Distribution::uniform(0, 1), Distribution::deterministic(0.2), Distribution::deterministic(0.3)});
  CHECK_THROWS_AS(expected_cost_fixed(cont, lept_f(cont)), InvalidArgument);
}

TEST_CASE("exact engines agree with scenario enumeration") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto inst = corpus_instance(seed, 7, 3);
    CAPTURE(seed);
    const auto asg = lept_f(inst);
    CHECK(expected_cost_fixed(inst, asg).value == Approx(oracle::fixed_cost(inst, asg.machine_of)).epsilon(1e-12));
    CHECK(expected_cost_lept_p_exact(inst).value == Approx(oracle::list_policy_expected(inst)).epsilon(1e-12));
    CHECK(expected_opt_anticipative(inst).value == Approx(oracle::anticipative(inst)).epsilon(1e-12));
    CHECK(opt_fractional(inst).value == Approx(oracle::fractional(inst)).epsilon(1e-12));
  }
}

TEST_CASE("LEPT_P expectation on the two-machine example") {
  const auto inst = two_machine_instance();
  CHECK(oracle::list_policy_expected(inst) == Approx(2.125).epsilon(1e-14));
  CHECK(expected_cost_lept_p_exact(inst).value == Approx(2.125).epsilon(1e-14));
  const Instance cont(2, {Distribution::uniform(0, 1), Distribution::deterministic(0.2), Distribution::deterministic(0.3)});
  CHECK_THROWS_AS(expected_cost_lept_p_exact(cont), InvalidArgument);
  ScenarioOptions small;
  small.max_scenarios = 3;
  CHECK_THROWS_AS(expected_cost_lept_p_exact(inst, small), CapExceeded);
  small.allow_mc = true;
  small.mc.samples = 10'000;
  CHECK(expected_cost_lept_p_exact(inst, small).method == Method::monte_carlo);
}

TEST_CASE("clairvoyant optimum") {
  const auto inst = two_machine_instance();
  const double oracle_value = oracle::anticipative(inst);
  CHECK(oracle_value == Approx(2.125).epsilon(1e-14));
  CHECK(expected_opt_anticipative(inst).value == Approx(oracle_value).epsilon(1e-14));
  CHECK(expected_opt_anticipative_reference(inst).value == expected_opt_anticipative(inst).value);

  const auto pons = gen_pons(1, 2);
  CHECK(expected_opt_anticipative(pons).value == Approx(oracle::anticipative(pons)).epsilon(1e-14));

  const Instance det(3, {Distribution::deterministic(0.7), Distribution::deterministic(1.6),
                         Distribution::deterministic(0.2), Distribution::deterministic(0.9)});
  CHECK(expected_opt_anticipative(det).value == Approx(opt_deterministic(det.means(), 3)));

  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto c = corpus_instance(seed);
    const auto d = derived_scalars(c);
    CHECK(expected_opt_anticipative(c).value >= std::max(d.s, c.machines() + d.beta) - 1e-9);
  }

  const Instance cont(2, {Distribution::uniform(0, 1), Distribution::deterministic(0.2), Distribution::gamma(2, 0.3)});
  CHECK_THROWS_AS(expected_opt_anticipative(cont), InvalidArgument);
  ScenarioOptions mc;
  mc.allow_mc = true;
  mc.mc.samples = 20'000;
  const auto est = expected_opt_anticipative(cont, mc);
  CHECK(est.method == Method::monte_carlo);
  CHECK(est.samples == 20'000);
}

TEST_CASE("fractional optimum") {
  const Instance det(2, {Distribution::deterministic(0.7), Distribution::deterministic(1.6)});
  CHECK(opt_fractional(det).value == Approx(2.3));
  const Instance light(3, {Distribution::deterministic(0.7), Distribution::deterministic(0.6)});
  CHECK(opt_fractional(light).value == Approx(3.0));
  CHECK(opt_fractional(gen_pons(1, 2)).value == Approx(2.5).epsilon(1e-14));
  const auto pofa = gen_pofa(3, 4);
  const auto pmf = oracle::binomial(12, 1.0 / 3);
  double expected = 0.0;
  for (int u = 0; u <= 12; ++u) expected += std::max(u, 4) * pmf[static_cast<std::size_t>(u)];
  CHECK(opt_fractional(pofa).value == Approx(expected).epsilon(1e-12));

  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto c = corpus_instance(seed);
    const auto d = derived_scalars(c);
    CHECK(opt_fractional(c).value >= c.machines() * std::max(d.rho, 1.0) - 1e-12);
  }

  const Instance cont(2, {Distribution::uniform(0, 1), Distribution::gamma(2, 0.3)});
  CHECK_THROWS_AS(opt_fractional(cont), InvalidArgument);
  FractionalOptions mc;
  mc.allow_mc = true;
  const auto est = opt_fractional(cont, mc);
  CHECK(est.method == Method::monte_carlo);
  CHECK(est.value >= 2.0);
}

TEST_CASE("Monte Carlo on a deterministic instance is exact") {
  const Instance det(2, {Distribution::deterministic(0.7), Distribution::deterministic(1.6), Distribution::deterministic(0.3)});
  McOptions opts;
  opts.samples = 5000;
  const auto est = expected_cost_mc(det, FixedPolicy{lept_f(det)}, opts);
  CHECK(est.value == Approx(expected_cost_fixed(det, lept_f(det)).value).epsilon(1e-12));
  CHECK(est.half_width <= 1e-12);
  CHECK(est.method == Method::monte_carlo);
  CHECK(est.samples == 5000);
}

TEST_CASE("Monte Carlo covers the exact values on the two-machine example") {
  const auto inst = two_machine_instance();
  McOptions opts;
  opts.samples = 1'000'000;
  opts.seed = 2024;
  const auto f = expected_cost_mc(inst, FixedPolicy{lept_f(inst)}, opts);
  CHECK(std::abs(f.value - 2.15) <= 3 * f.half_width);
  const auto p = expected_cost_mc(inst, LeptPPolicy{}, opts);
  CHECK(std::abs(p.value - 2.125) <= 3 * p.half_width);
  const auto n = expected_cost_mc(inst, NaivePolicy{}, opts);
  CHECK(std::abs(n.value - expected_cost_fixed(inst, naive_assignment(inst)).value) <= 3 * n.half_width);
  CHECK(f.half_width > 0.0);
  CHECK(f.half_width < 1e-3);
}

TEST_CASE("Monte Carlo is reproducible and independent of the worker count") {
  const Instance inst(3, {Distribution::lognormal(-0.4, 0.8), Distribution::gamma(0.8, 1.1),
                          Distribution::weibull(1.5, 0.7), Distribution::uniform(0.1, 1.3),
                          Distribution::triangular(0.0, 2.0, 0.4), Distribution::scaled_bernoulli(3.0, 0.2)});
  McOptions opts;
  opts.samples = 30'001;
  opts.seed = 9;
  for (const Policy& policy : {Policy{FixedPolicy{lept_f(inst)}}, Policy{LeptPPolicy{}}, Policy{NaivePolicy{}}}) {
    const auto ref = expected_cost_mc_reference(inst, policy, opts);
    for (int threads : {1, 2, 3, 8}) {
      McOptions o = opts;
      o.threads = threads;
      const auto est = expected_cost_mc(inst, policy, o);
      CHECK(est.value == ref.value);
      CHECK(est.half_width == ref.half_width);
    }
  }
  McOptions other = opts;
  other.seed = 10;
  CHECK(expected_cost_mc(inst, LeptPPolicy{}, other).value != expected_cost_mc(inst, LeptPPolicy{}, opts).value);
  McOptions one = opts;
  one.samples = 1;
  CHECK_THROWS_AS(expected_cost_mc(inst, LeptPPolicy{}, one), InvalidArgument);
}

TEST_CASE("same seed gives common realizations across policies") {
  // With n = m every sensible policy places one job per machine, so the estimates coincide.
  const Instance inst(3, {Distribution::gamma(2, 0.5), Distribution::uniform(0, 2), Distribution::lognormal(0, 0.5)});
  McOptions opts;
  opts.samples = 10'000;
  const auto f = expected_cost_mc(inst, FixedPolicy{lept_f(inst)}, opts);
  const auto p = expected_cost_mc(inst, LeptPPolicy{}, opts);
  CHECK(f.value == Approx(p.value).epsilon(1e-14));
}

TEST_CASE("clairvoyant enumeration is independent of the worker count") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = corpus_instance(seed, 10, 3);
    ScenarioOptions o;
    const double ref = expected_opt_anticipative_reference(inst, o).value;
    for (int threads : {1, 2, 4}) {
      o.threads = threads;
      CHECK(expected_opt_anticipative(inst, o).value == ref);
    }
  }
}

TEST_CASE("policy ordering and the factor-two bound") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto inst = corpus_instance(seed);
    const double frac = opt_fractional(inst).value;
    const double lf = expected_cost_fixed(inst, lept_f(inst)).value;
    const double nv = expected_cost_fixed(inst, naive_assignment(inst)).value;
    const double lp = expected_cost_lept_p_exact(inst).value;
    CHECK(lf <= nv + 1e-9);
    CHECK(lf <= 2 * frac + 1e-9);
    CHECK(nv <= 2 * frac + 1e-9);
    CHECK(lp <= 2 * frac + 1e-9);
  }
}

TEST_CASE("Monte Carlo agrees with exact values") {
  McOptions opts;
  opts.samples = 100'000;
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const auto inst = corpus_instance(seed);
    opts.seed = seed;
    const auto exact = expected_cost_fixed(inst, lept_f(inst)).value;
    const auto mc = expected_cost_mc(inst, FixedPolicy{lept_f(inst)}, opts);
    CHECK(std::abs(mc.value - exact) <= 4 * mc.half_width + 1e-12);
  }
}
