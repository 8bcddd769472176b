#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "sebp/distribution.hpp"
#include "sebp/family.hpp"

namespace sebp {

/// m identical unit-capacity machines and n independent jobs.
class Instance {
 public:
  /// Throws InvalidArgument unless machines >= 1, at least one job, and every job has mean > 0.
  Instance(int machines, std::vector<Distribution> jobs);

  int machines() const { return machines_; }
  std::size_t size() const { return jobs_.size(); }
  const std::vector<Distribution>& jobs() const { return jobs_; }
  const Distribution& job(std::size_t j) const { return jobs_[j]; }
  const std::vector<double>& means() const { return means_; }

  bool all_discrete() const;
  /// Every job takes values in [0, 1] almost surely.
  bool all_short() const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.machines_ == b.machines_ && a.jobs_ == b.jobs_;
  }

 private:
  int machines_;
  std::vector<Distribution> jobs_;
  std::vector<double> means_;
};

struct DerivedScalars {
  double rho;   ///< average expected load s / m
  double s;     ///< total expected processing time
  double beta;  ///< total expected excess, sum of E[(P_j - 1)^+]
};

DerivedScalars derived_scalars(const Instance& inst);

/// m i.i.d. jobs (m/lambda) * Bernoulli(lambda/m). Requires m >= lambda >= 1.
Instance gen_pons(int lambda, int m);

/// k*m i.i.d. Bernoulli(1/k) jobs.
Instance gen_pofa(int k, int m);

/// Two machines; jobs deterministic(1), deterministic(1), (1/eps) * Bernoulli(eps). 0 < eps <= 1.
Instance gen_ratio_f(double epsilon);

/// gen_ratio_f with the third job scaled to mean 1 + tie_break, so that LEPT_F places it first.
Instance gen_ratio_f_perturbed(double epsilon, double tie_break = 1e-12);

/// Random finite-discrete jobs: `support_size` values uniform in [0, max_value] with
/// random weights. max_value <= 1 yields short jobs only.
struct FiniteRecipe {
  int support_size = 3;
  double max_value = 1.0;
};

struct RandomInstanceSpec {
  int n = 5;
  int m = 2;
  std::variant<FamilySpec, FiniteRecipe> recipe = FiniteRecipe{};
  std::uint64_t seed = 0;
  /// Family recipes: job means log-uniform in [mean_min, mean_max], squared CV uniform in [0, delta].
  double mean_min = 0.2;
  double mean_max = 1.0;
};

/// Reproducible random instance. Requires n > m.
Instance gen_random(const RandomInstanceSpec& spec);

}  // namespace sebp
