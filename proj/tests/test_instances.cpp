#include <doctest.h>

#include <cmath>

#include "two_machine.hpp"
#include "sebp/error.hpp"
#include "sebp/instance.hpp"
#include "sebp/json_io.hpp"

using namespace sebp;
using doctest::Approx;

TEST_CASE("derived scalars") {
  const auto f = derived_scalars(two_machine_instance());
  CHECK(f.rho == Approx(0.9).epsilon(1e-14));
  CHECK(f.s == Approx(1.8).epsilon(1e-14));
  CHECK(f.beta == Approx(0.1).epsilon(1e-14));

  const auto ones = derived_scalars(Instance(3, std::vector(3, Distribution::deterministic(1.0))));
  CHECK(ones.rho == 1.0);
  CHECK(ones.s == 3.0);
  CHECK(ones.beta == 0.0);

  const auto big = derived_scalars(Instance(1, {Distribution::deterministic(3.0)}));
  CHECK(big.rho == 3.0);
  CHECK(big.s == 3.0);
  CHECK(big.beta == Approx(2.0));
}

TEST_CASE("instances reject empty or degenerate input") {
  CHECK_THROWS_AS(Instance(0, {Distribution::deterministic(1.0)}), InvalidArgument);
  CHECK_THROWS_AS(Instance(2, {}), InvalidArgument);
  CHECK_THROWS_AS(Instance(2, {Distribution::deterministic(0.0)}), InvalidArgument);
}

TEST_CASE("PoNS generator") {
  const auto a = gen_pons(4, 8);
  CHECK(a.size() == 8);
  for (const auto& d : a.jobs()) CHECK(d == Distribution::scaled_bernoulli(2.0, 0.5));
  CHECK(derived_scalars(a).rho == Approx(1.0).epsilon(1e-15));

  const auto b = gen_pons(3, 3);
  for (const auto& d : b.jobs()) CHECK(d.mean() == 1.0);

  const auto c = gen_pons(1, 2);
  CHECK(c.size() == 2);
  CHECK(c.job(0) == Distribution::scaled_bernoulli(2.0, 0.5));
  CHECK(derived_scalars(c).rho == 1.0);

  CHECK_THROWS_AS(gen_pons(4, 2), InvalidArgument);
  CHECK_THROWS_AS(gen_pons(0, 2), InvalidArgument);
}

TEST_CASE("PoFA generator") {
  const auto a = gen_pofa(1, 3);
  CHECK(a.size() == 3);
  for (const auto& d : a.jobs()) CHECK(d == Distribution::deterministic(1.0));

  const auto b = gen_pofa(2, 2);
  CHECK(b.size() == 4);
  for (const auto& d : b.jobs()) CHECK(d.mean() == 0.5);

  const auto c = gen_pofa(100, 50);
  CHECK(c.size() == 5000);
  CHECK(c.job(17) == Distribution::scaled_bernoulli(1.0, 0.01));
  CHECK(derived_scalars(c).s == Approx(50.0).epsilon(1e-12));
  CHECK(derived_scalars(c).rho == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("ratio-F generator") {
  const auto a = gen_ratio_f(1.0);
  CHECK(a.job(2) == Distribution::deterministic(1.0));
  const auto b = gen_ratio_f(0.01);
  CHECK(b.job(2) == Distribution::scaled_bernoulli(100.0, 0.01));
  const auto c = gen_ratio_f(0.5);
  CHECK(c.job(2) == Distribution::scaled_bernoulli(2.0, 0.5));
  for (const auto& d : b.jobs()) CHECK(d.mean() == Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(gen_ratio_f(0.0), InvalidArgument);
  CHECK_THROWS_AS(gen_ratio_f(1.5), InvalidArgument);

  const auto p = gen_ratio_f_perturbed(0.01, 1e-12);
  CHECK(p.means()[2] > p.means()[0]);
  CHECK(p.means()[2] == Approx(1.0).epsilon(1e-11));
}

TEST_CASE("random instances are reproducible and respect their recipe") {
  RandomInstanceSpec spec;
  spec.n = 5;
  spec.m = 2;
  spec.recipe = FamilySpec{Family::bernoulli, 0.25};
  spec.seed = 7;
  CHECK(gen_random(spec) == gen_random(spec));
  spec.seed = 8;
  const auto other = gen_random(spec);
  spec.seed = 7;
  CHECK_FALSE(gen_random(spec) == other);
  const auto drawn = gen_random(spec);
  for (const auto& d : drawn.jobs()) {
    CHECK(d.mean() >= spec.mean_min * (1 - 1e-12));
    CHECK(d.mean() <= spec.mean_max * (1 + 1e-12));
    CHECK(squared_cv(d) <= 0.25 + 1e-9);
  }

  spec.n = 3;
  spec.m = 4;
  CHECK_THROWS_AS(gen_random(spec), InvalidArgument);

  RandomInstanceSpec finite;
  finite.n = 6;
  finite.m = 2;
  finite.recipe = FiniteRecipe{4, 1.0};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    finite.seed = seed;
    const auto inst = gen_random(finite);
    CHECK(inst.all_short());
    CHECK(inst.all_discrete());
  }
}

TEST_CASE("random family instances cover every family") {
  for (auto fam : {Family::lognormal, Family::gamma, Family::weibull, Family::uniform, Family::bernoulli,
                   Family::triangular}) {
    RandomInstanceSpec spec;
    spec.n = 6;
    spec.m = 3;
    spec.recipe = FamilySpec{fam, fam == Family::triangular ? 0.1 : 0.3, 0.5};
    spec.seed = 11;
    const auto inst = gen_random(spec);
    CHECK(inst.size() == 6);
    CHECK(derived_scalars(inst).beta <= derived_scalars(inst).s);
  }
}

TEST_CASE("instance JSON round-trips bit-exactly") {
  std::vector<Instance> cases{two_machine_instance(), gen_pons(4, 8), gen_pofa(3, 2), gen_ratio_f(0.01)};
  cases.push_back(Instance(2, {Distribution::lognormal(-0.3, 0.7), Distribution::gamma(2.5, 0.4),
                               Distribution::weibull(1.7, 0.3), Distribution::uniform(0.1, 0.9),
                               Distribution::triangular(0.0, 1.0, 1.0 / 3.0)}));
  RandomInstanceSpec spec;
  spec.n = 7;
  spec.m = 3;
  spec.seed = 3;
  cases.push_back(gen_random(spec));
  for (const auto& inst : cases) {
    const auto text = to_json(inst).dump();
    CHECK(instance_from_json(Json::parse(text)) == inst);
  }
}

TEST_CASE("malformed instance JSON is rejected") {
  CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"jobs": []})")), InvalidArgument);
  CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"machines": 2, "jobs": [{"kind": "cauchy"}]})")),
                  InvalidArgument);
  CHECK_THROWS_AS(
      instance_from_json(Json::parse(R"({"machines": 2, "jobs": [{"kind": "finite", "points": [[1, 0.5]]}]})")),
      InvalidArgument);
  CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"machines": 2, "jobs": [{"kind": "gamma", "shape": "a"}]})")),
                  InvalidArgument);
}
