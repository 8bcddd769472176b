#include "sebp/instance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sebp/error.hpp"

namespace sebp {

Instance::Instance(int machines, std::vector<Distribution> jobs)
    : machines_(machines), jobs_(std::move(jobs)) {
  if (machines_ < 1) throw InvalidArgument("an instance needs at least one machine");
  if (jobs_.empty()) throw InvalidArgument("an instance needs at least one job");
  means_.reserve(jobs_.size());
  for (std::size_t j = 0; j < jobs_.size(); ++j) {
    const double mu = jobs_[j].mean();
    if (!(mu > 0.0) || !std::isfinite(mu)) {
      throw InvalidArgument("job " + std::to_string(j + 1) + " must have a finite positive mean");
    }
    means_.push_back(mu);
  }
}

bool Instance::all_discrete() const {
  return std::all_of(jobs_.begin(), jobs_.end(), [](const auto& d) { return d.is_discrete(); });
}

bool Instance::all_short() const {
  return std::all_of(jobs_.begin(), jobs_.end(), [](const auto& d) { return d.support_max() <= 1.0; });
}

DerivedScalars derived_scalars(const Instance& inst) {
  double s = 0.0;
  double beta = 0.0;
  for (std::size_t j = 0; j < inst.size(); ++j) {
    s += inst.means()[j];
    beta += inst.job(j).tail_expectation(1.0);
  }
  return {s / inst.machines(), s, beta};
}

Instance gen_pons(int lambda, int m) {
  if (lambda < 1) throw InvalidArgument("pons instance needs lambda >= 1");
  if (m < lambda) throw InvalidArgument("pons instance needs m >= lambda");
  const double x = static_cast<double>(m) / lambda;
  const double p = static_cast<double>(lambda) / m;
  auto job = (lambda == m) ? Distribution::deterministic(1.0) : Distribution::scaled_bernoulli(x, p);
  return Instance(m, std::vector<Distribution>(static_cast<std::size_t>(m), job));
}

Instance gen_pofa(int k, int m) {
  if (k < 1 || m < 1) throw InvalidArgument("pofa instance needs k >= 1 and m >= 1");
  auto job = (k == 1) ? Distribution::deterministic(1.0)
                      : Distribution::scaled_bernoulli(1.0, 1.0 / k);
  return Instance(m, std::vector<Distribution>(static_cast<std::size_t>(k) * m, job));
}

Instance gen_ratio_f(double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw InvalidArgument("ratio-f instance needs 0 < epsilon <= 1");
  auto third = (epsilon == 1.0) ? Distribution::deterministic(1.0)
                                : Distribution::scaled_bernoulli(1.0 / epsilon, epsilon);
  return Instance(2, {Distribution::deterministic(1.0), Distribution::deterministic(1.0), third});
}

Instance gen_ratio_f_perturbed(double epsilon, double tie_break) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw InvalidArgument("ratio-f instance needs 0 < epsilon <= 1");
  if (!(tie_break > 0.0)) throw InvalidArgument("tie break must be positive");
  const double x = (1.0 + tie_break) / epsilon;
  auto third = (epsilon == 1.0) ? Distribution::deterministic(x) : Distribution::scaled_bernoulli(x, epsilon);
  return Instance(2, {Distribution::deterministic(1.0), Distribution::deterministic(1.0), third});
}

Instance gen_random(const RandomInstanceSpec& spec) {
  if (spec.m < 1) throw InvalidArgument("random instance needs m >= 1");
  if (spec.n <= spec.m) throw InvalidArgument("random instance needs n > m");
  Stream stream(stream_seed(spec.seed, 0));
  std::vector<Distribution> jobs;
  jobs.reserve(static_cast<std::size_t>(spec.n));

  if (const auto* family = std::get_if<FamilySpec>(&spec.recipe)) {
    family->validate();
    if (!(spec.mean_min > 0.0 && spec.mean_min <= spec.mean_max)) {
      throw InvalidArgument("random instance needs 0 < mean_min <= mean_max");
    }
    const double log_lo = std::log(spec.mean_min);
    const double log_hi = std::log(spec.mean_max);
    for (int j = 0; j < spec.n; ++j) {
      const double mean = std::exp(log_lo + stream.uniform() * (log_hi - log_lo));
      FamilySpec member = *family;
      member.delta = stream.uniform() * family->delta;
      jobs.push_back(minimal_element(member).scaled(mean));
    }
  } else {
    const auto& recipe = std::get<FiniteRecipe>(spec.recipe);
    if (recipe.support_size < 1) throw InvalidArgument("finite recipe needs support_size >= 1");
    if (!(recipe.max_value > 0.0)) throw InvalidArgument("finite recipe needs max_value > 0");
    for (int j = 0; j < spec.n; ++j) {
      std::vector<Atom> pts;
      double total = 0.0;
      for (int k = 0; k < recipe.support_size; ++k) {
        const double w = 0.05 + stream.uniform();
        pts.push_back({recipe.max_value * stream.uniform(), w});
        total += w;
      }
      double acc = 0.0;
      for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        pts[k].prob /= total;
        acc += pts[k].prob;
      }
      pts.back().prob = 1.0 - acc;
      auto d = Distribution::finite(std::move(pts));
      if (!(d.mean() > 0.0)) {
        --j;  // all-zero draw; redraw this job
        continue;
      }
      jobs.push_back(std::move(d));
    }
  }
  return Instance(spec.m, std::move(jobs));
}

}  // namespace sebp
