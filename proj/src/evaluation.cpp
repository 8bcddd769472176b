#include "sebp/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "kernels.hpp"
#include "sebp/error.hpp"
#include "sebp/parallel.hpp"
#include "sebp/rng.hpp"

namespace sebp {

std::string_view to_string(Method method) {
  return method == Method::exact ? "exact" : "monte-carlo";
}

CostEstimate expected_cost_fixed(const Instance& inst, const Assignment& asg, std::size_t pmf_cap) {
  if (asg.machine_of.size() != inst.size() || static_cast<int>(asg.stats.size()) != inst.machines()) {
    throw InvalidArgument("assignment does not match the instance");
  }
  if (!inst.all_discrete()) throw InvalidArgument("exact evaluation needs discrete jobs; use Monte Carlo");
  double total = 0.0;
  for (const auto& jobs : asg.jobs_by_machine()) {
    WorkloadPmf pmf;
    for (std::size_t j : jobs) pmf = convolve(pmf, inst.job(j).atoms(), pmf_cap);
    total += pmf.expected_max(1.0);
  }
  return CostEstimate::exact(total);
}

namespace {

// Per-realization cost of a policy. Holds scratch buffers, so one instance per chunk.
class PolicyCost {
 public:
  PolicyCost(const Instance& inst, const Policy& policy)
      : inst_(inst), policy_(policy), load_(static_cast<std::size_t>(inst.machines())) {
    if (std::holds_alternative<LeptPPolicy>(policy)) order_ = lept_order(inst);
  }

  double operator()(std::span<const double> p) {
    std::fill(load_.begin(), load_.end(), 0.0);
    if (const auto* fixed = std::get_if<FixedPolicy>(&policy_)) {
      for (std::size_t j = 0; j < p.size(); ++j) {
        load_[static_cast<std::size_t>(fixed->assignment.machine_of[j])] += p[j];
      }
    } else if (std::holds_alternative<LeptPPolicy>(policy_)) {
      // A non-idling list schedule: each machine's last completion is its free time.
      for (std::size_t j : order_) *std::min_element(load_.begin(), load_.end()) += p[j];
    } else {
      load_[0] = std::accumulate(p.begin(), p.end(), 0.0);
    }
    double cost = 0.0;
    for (double l : load_) cost += std::max(l, 1.0);
    return cost;
  }

 private:
  const Instance& inst_;
  const Policy& policy_;
  std::vector<std::size_t> order_;
  std::vector<double> load_;
};

template <class MakeCost>
CostEstimate monte_carlo(const Instance& inst, const McOptions& opts, bool parallel,
                         MakeCost&& make_cost) {
  if (opts.samples < 2) throw InvalidArgument("Monte Carlo needs at least 2 samples");
  const int threads = worker_count(opts.threads);
  auto make_body = [&] {
    return [&inst, &opts, cost = make_cost(), p = std::vector<double>(inst.size())](
               std::uint64_t i, detail::RunningStats& acc) mutable {
      Stream stream(stream_seed(opts.seed, i));
      for (std::size_t j = 0; j < p.size(); ++j) p[j] = inst.job(j).sample(stream);
      acc.add(cost(std::span<const double>(p)));
    };
  };
  const auto stats =
      detail::chunked_reduce<detail::RunningStats>(opts.samples, kMcChunk, threads, parallel, make_body);
  const double sd = std::sqrt(stats.variance());
  return {stats.mean, Method::monte_carlo, 1.96 * sd / std::sqrt(static_cast<double>(stats.n)),
          stats.n, opts.seed};
}

void check_policy(const Instance& inst, const Policy& policy) {
  if (const auto* fixed = std::get_if<FixedPolicy>(&policy)) {
    const auto& asg = fixed->assignment;
    if (asg.machine_of.size() != inst.size()) throw InvalidArgument("assignment does not match the instance");
    for (int i : asg.machine_of) {
      if (i < 0 || i >= inst.machines()) throw InvalidArgument("assignment uses a nonexistent machine");
    }
  }
}

CostEstimate policy_mc(const Instance& inst, const Policy& policy, const McOptions& opts, bool parallel) {
  check_policy(inst, policy);
  return monte_carlo(inst, opts, parallel, [&] { return PolicyCost(inst, policy); });
}

// Joint support of a discrete instance, decoded from a mixed-radix index.
class ScenarioSpace {
 public:
  ScenarioSpace(const Instance& inst, std::uint64_t max_scenarios) {
    if (!inst.all_discrete()) throw InvalidArgument("scenario enumeration needs discrete jobs");
    atoms_.reserve(inst.size());
    count_ = 1;
    for (const auto& d : inst.jobs()) {
      atoms_.push_back(d.atoms());
      const auto k = static_cast<std::uint64_t>(atoms_.back().size());
      if (count_ > max_scenarios / k) {
        throw CapExceeded("joint support exceeds the scenario cap of " + std::to_string(max_scenarios));
      }
      count_ *= k;
    }
  }

  std::uint64_t count() const { return count_; }

  /// Writes scenario `index` into `p` and returns its probability.
  double decode(std::uint64_t index, std::vector<double>& p) const {
    double prob = 1.0;
    for (std::size_t j = 0; j < atoms_.size(); ++j) {
      const auto k = static_cast<std::uint64_t>(atoms_[j].size());
      const auto& a = atoms_[j][static_cast<std::size_t>(index % k)];
      index /= k;
      p[j] = a.value;
      prob *= a.prob;
    }
    return prob;
  }

 private:
  std::vector<std::vector<Atom>> atoms_;
  std::uint64_t count_ = 0;
};

constexpr std::uint64_t kScenarioChunk = 1024;

template <class MakeCost>
double enumerate(const Instance& inst, const ScenarioSpace& space, int threads, bool parallel,
                 MakeCost&& make_cost) {
  auto make_body = [&] {
    return [&space, cost = make_cost(), p = std::vector<double>(inst.size())](
               std::uint64_t i, detail::WeightedSum& acc) mutable {
      const double prob = space.decode(i, p);
      acc.sum += prob * cost(std::span<const double>(p));
    };
  };
  return detail::chunked_reduce<detail::WeightedSum>(space.count(), kScenarioChunk, threads, parallel,
                                                     make_body)
      .sum;
}

auto deterministic_opt(const Instance& inst, std::size_t max_jobs) {
  return [m = inst.machines(), max_jobs] {
    return [m, max_jobs](std::span<const double> p) { return opt_deterministic(p, m, max_jobs); };
  };
}

CostEstimate anticipative(const Instance& inst, const ScenarioOptions& opts, bool parallel) {
  if (inst.size() > opts.max_jobs) {
    throw CapExceeded("per-scenario optimum is capped at " + std::to_string(opts.max_jobs) + " jobs");
  }
  const auto make_cost = deterministic_opt(inst, opts.max_jobs);
  try {
    const ScenarioSpace space(inst, opts.max_scenarios);
    return CostEstimate::exact(enumerate(inst, space, worker_count(opts.threads), parallel, make_cost));
  } catch (const CapExceeded&) {
    if (!opts.allow_mc) throw;
  } catch (const InvalidArgument&) {
    if (!opts.allow_mc) throw;
  }
  return monte_carlo(inst, opts.mc, parallel, make_cost);
}

}  // namespace

CostEstimate expected_cost_mc(const Instance& inst, const Policy& policy, const McOptions& options) {
  return policy_mc(inst, policy, options, true);
}

CostEstimate expected_cost_mc_reference(const Instance& inst, const Policy& policy,
                                        const McOptions& options) {
  return policy_mc(inst, policy, options, false);
}

CostEstimate expected_cost_lept_p_exact(const Instance& inst, const ScenarioOptions& options) {
  const Policy policy = LeptPPolicy{};
  try {
    const ScenarioSpace space(inst, options.max_scenarios);
    return CostEstimate::exact(enumerate(inst, space, worker_count(options.threads), true,
                                         [&] { return PolicyCost(inst, policy); }));
  } catch (const CapExceeded&) {
    if (!options.allow_mc) throw;
  } catch (const InvalidArgument&) {
    if (!options.allow_mc) throw;
  }
  return expected_cost_mc(inst, policy, options.mc);
}

CostEstimate expected_opt_anticipative(const Instance& inst, const ScenarioOptions& options) {
  return anticipative(inst, options, true);
}

CostEstimate expected_opt_anticipative_reference(const Instance& inst, const ScenarioOptions& options) {
  return anticipative(inst, options, false);
}

CostEstimate opt_fractional(const Instance& inst, const FractionalOptions& options) {
  const double m = static_cast<double>(inst.machines());
  try {
    return CostEstimate::exact(machine_pmf(inst.jobs(), options.pmf_cap).expected_max(m));
  } catch (const CapExceeded&) {
    if (!options.allow_mc) throw;
  } catch (const InvalidArgument&) {
    if (!options.allow_mc) throw;
  }
  return monte_carlo(inst, options.mc, true, [m] {
    return [m](std::span<const double> p) { return std::max(std::accumulate(p.begin(), p.end(), 0.0), m); };
  });
}

}  // namespace sebp
