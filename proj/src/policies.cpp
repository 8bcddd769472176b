#include "sebp/policies.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sebp/error.hpp"

namespace sebp {

std::vector<std::vector<std::size_t>> Assignment::jobs_by_machine() const {
  std::vector<std::vector<std::size_t>> out(stats.size());
  for (std::size_t j = 0; j < machine_of.size(); ++j) {
    out[static_cast<std::size_t>(machine_of[j])].push_back(j);
  }
  return out;
}

Assignment make_assignment(const Instance& inst, std::vector<int> machine_of) {
  if (machine_of.size() != inst.size()) {
    throw InvalidArgument("assignment has " + std::to_string(machine_of.size()) +
                          " entries for " + std::to_string(inst.size()) + " jobs");
  }
  Assignment asg{std::move(machine_of), std::vector<MachineStats>(static_cast<std::size_t>(inst.machines()))};
  for (std::size_t j = 0; j < inst.size(); ++j) {
    const int i = asg.machine_of[j];
    if (i < 0 || i >= inst.machines()) {
      throw InvalidArgument("job " + std::to_string(j + 1) + " assigned to a nonexistent machine");
    }
    const double excess = inst.job(j).tail_expectation(1.0);
    auto& st = asg.stats[static_cast<std::size_t>(i)];
    st.n += 1;
    st.x += inst.means()[j];
    st.beta += excess;
    st.alpha += inst.means()[j] - excess;
  }
  return asg;
}

std::vector<std::size_t> lept_order(const Instance& inst) {
  std::vector<std::size_t> order(inst.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto& mu = inst.means();
  std::stable_sort(order.begin(), order.end(),
                   [&mu](std::size_t a, std::size_t b) { return mu[a] > mu[b]; });
  return order;
}

Assignment lept_f(const Instance& inst) {
  std::vector<double> load(static_cast<std::size_t>(inst.machines()), 0.0);
  std::vector<int> machine_of(inst.size(), 0);
  for (std::size_t j : lept_order(inst)) {
    const auto it = std::min_element(load.begin(), load.end());  // first minimum
    const auto i = static_cast<std::size_t>(it - load.begin());
    machine_of[j] = static_cast<int>(i);
    load[i] += inst.means()[j];
  }
  return make_assignment(inst, std::move(machine_of));
}

Assignment naive_assignment(const Instance& inst) {
  return make_assignment(inst, std::vector<int>(inst.size(), 0));
}

Schedule lept_p_schedule(const Instance& inst, std::span<const double> realization) {
  if (realization.size() != inst.size()) throw InvalidArgument("realization length must equal n");
  std::vector<double> free_at(static_cast<std::size_t>(inst.machines()), 0.0);
  Schedule s{std::vector<double>(inst.size(), 0.0), std::vector<int>(inst.size(), 0)};
  for (std::size_t j : lept_order(inst)) {
    if (!(realization[j] >= 0.0)) throw InvalidArgument("realized processing times must be >= 0");
    const auto it = std::min_element(free_at.begin(), free_at.end());
    const auto i = static_cast<std::size_t>(it - free_at.begin());
    s.start[j] = *it;
    s.machine[j] = static_cast<int>(i);
    *it += realization[j];
  }
  return s;
}

double schedule_cost(const Schedule& schedule, std::span<const double> realization, int machines) {
  std::vector<double> last(static_cast<std::size_t>(machines), 0.0);
  for (std::size_t j = 0; j < realization.size(); ++j) {
    auto& l = last[static_cast<std::size_t>(schedule.machine[j])];
    l = std::max(l, schedule.start[j] + realization[j]);
  }
  double cost = 0.0;
  for (double l : last) cost += std::max(l, 1.0);
  return cost;
}

double realized_cost(std::span<const int> machine_of, std::span<const double> realization,
                     int machines) {
  std::vector<double> load(static_cast<std::size_t>(machines), 0.0);
  for (std::size_t j = 0; j < realization.size(); ++j) {
    load[static_cast<std::size_t>(machine_of[j])] += realization[j];
  }
  double cost = 0.0;
  for (double l : load) cost += std::max(l, 1.0);
  return cost;
}

bool is_feasible(const Schedule& schedule, std::span<const double> realization, int machines) {
  for (int i = 0; i < machines; ++i) {
    std::vector<std::pair<double, double>> spans;
    for (std::size_t j = 0; j < realization.size(); ++j) {
      if (schedule.machine[j] == i && realization[j] > 0.0) {
        spans.emplace_back(schedule.start[j], schedule.start[j] + realization[j]);
      }
    }
    std::sort(spans.begin(), spans.end());
    for (std::size_t k = 1; k < spans.size(); ++k) {
      if (spans[k].first < spans[k - 1].second - 1e-12) return false;
    }
  }
  return true;
}

bool is_non_idling(const Schedule& schedule, std::span<const double> realization) {
  for (std::size_t j = 0; j < realization.size(); ++j) {
    if (schedule.start[j] == 0.0) continue;
    bool follows = false;
    for (std::size_t k = 0; k < realization.size() && !follows; ++k) {
      follows = k != j && schedule.machine[k] == schedule.machine[j] &&
                std::abs(schedule.start[k] + realization[k] - schedule.start[j]) <= 1e-12;
    }
    if (!follows) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Optimal fixed assignment

namespace {

class FixedSearch {
 public:
  FixedSearch(const Instance& inst, std::size_t pmf_cap)
      : inst_(inst), cap_(pmf_cap), order_(lept_order(inst)) {
    const auto m = static_cast<std::size_t>(inst.machines());
    pmf_.assign(m, WorkloadPmf{});
    cost_.assign(m, 1.0);
    load_.assign(m, 0.0);
    atoms_.reserve(inst.size());
    for (const auto& d : inst.jobs()) atoms_.push_back(d.atoms());
    remaining_.assign(order_.size() + 1, 0.0);
    for (std::size_t k = order_.size(); k-- > 0;) {
      remaining_[k] = remaining_[k + 1] + inst.means()[order_[k]];
    }
    current_.assign(inst.size(), 0);
  }

  void seed(const std::vector<int>& machine_of, double value) {
    best_ = machine_of;
    best_value_ = value;
  }

  void run() { descend(0, 0); }

  const std::vector<int>& best() const { return best_; }
  double best_value() const { return best_value_; }
  std::size_t nodes() const { return nodes_; }

 private:
  // Any completion costs at least sum_i max(c_i, x_i + r_i) >= sum c_i + (r - sum (c_i - x_i))^+.
  double lower_bound(double rest) const {
    double sum_cost = 0.0;
    double slack = 0.0;
    for (std::size_t i = 0; i < cost_.size(); ++i) {
      sum_cost += cost_[i];
      slack += cost_[i] - load_[i];
    }
    return sum_cost + std::max(0.0, rest - slack);
  }

  void descend(std::size_t depth, int used) {
    ++nodes_;
    if (depth == order_.size()) {
      const double value = std::accumulate(cost_.begin(), cost_.end(), 0.0);
      if (value < best_value_) {
        best_value_ = value;
        best_ = current_;
      }
      return;
    }
    const std::size_t job = order_[depth];
    const int limit = std::min(used + 1, inst_.machines());
    for (int i = 0; i < limit; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      WorkloadPmf saved_pmf = pmf_[ui];
      const double saved_cost = cost_[ui];
      const double saved_load = load_[ui];
      pmf_[ui] = convolve(saved_pmf, atoms_[job], cap_);
      cost_[ui] = pmf_[ui].expected_max(1.0);
      load_[ui] = saved_load + inst_.means()[job];
      current_[job] = i;
      if (lower_bound(remaining_[depth + 1]) < best_value_ - 1e-12) {
        descend(depth + 1, std::max(used, i + 1));
      }
      pmf_[ui] = std::move(saved_pmf);
      cost_[ui] = saved_cost;
      load_[ui] = saved_load;
    }
  }

  const Instance& inst_;
  std::size_t cap_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<Atom>> atoms_;
  std::vector<double> remaining_;
  std::vector<WorkloadPmf> pmf_;
  std::vector<double> cost_;
  std::vector<double> load_;
  std::vector<int> current_;
  std::vector<int> best_;
  double best_value_ = 0.0;
  std::size_t nodes_ = 0;
};

double exact_fixed_cost(const Instance& inst, const Assignment& asg, std::size_t cap) {
  double total = 0.0;
  for (const auto& jobs : asg.jobs_by_machine()) {
    WorkloadPmf pmf;
    for (std::size_t j : jobs) pmf = convolve(pmf, inst.job(j).atoms(), cap);
    total += pmf.expected_max(1.0);
  }
  return total;
}

}  // namespace

FixedOptimum opt_fixed_exact(const Instance& inst, std::size_t max_jobs, std::size_t pmf_cap) {
  if (inst.size() > max_jobs) {
    throw CapExceeded("optimal fixed assignment search is capped at " + std::to_string(max_jobs) +
                      " jobs (instance has " + std::to_string(inst.size()) + ")");
  }
  if (!inst.all_discrete()) throw InvalidArgument("optimal fixed assignment needs discrete jobs");
  const Assignment warm = lept_f(inst);
  FixedSearch search(inst, pmf_cap);
  search.seed(warm.machine_of, exact_fixed_cost(inst, warm, pmf_cap));
  search.run();
  return {make_assignment(inst, search.best()), search.best_value(), search.nodes()};
}

// ---------------------------------------------------------------------------
// Deterministic extensible bin packing

double lpt_heuristic(std::span<const double> p, int m) {
  if (m < 1) throw InvalidArgument("need at least one machine");
  std::vector<double> sorted(p.begin(), p.end());
  std::stable_sort(sorted.begin(), sorted.end(), std::greater<>());
  std::vector<double> load(static_cast<std::size_t>(m), 0.0);
  for (double v : sorted) *std::min_element(load.begin(), load.end()) += v;
  double cost = 0.0;
  for (double l : load) cost += std::max(l, 1.0);
  return cost;
}

namespace {

struct DeterministicSearch {
  std::vector<double> jobs;
  std::vector<double> suffix;
  std::vector<double> load;
  double best;

  double bound(double rest) const {
    double cost = 0.0;
    double slack = 0.0;
    for (double l : load) {
      cost += std::max(l, 1.0);
      slack += std::max(1.0 - l, 0.0);
    }
    return cost + std::max(0.0, rest - slack);
  }

  void descend(std::size_t depth) {
    if (depth == jobs.size()) {
      best = std::min(best, bound(0.0));
      return;
    }
    for (std::size_t i = 0; i < load.size(); ++i) {
      // Machines with equal loads are interchangeable.
      bool seen = false;
      for (std::size_t k = 0; k < i && !seen; ++k) seen = load[k] == load[i];
      if (seen) continue;
      load[i] += jobs[depth];
      if (bound(suffix[depth + 1]) < best - 1e-12) descend(depth + 1);
      load[i] -= jobs[depth];
    }
  }
};

}  // namespace

double opt_deterministic(std::span<const double> p, int m, std::size_t max_jobs) {
  if (m < 1) throw InvalidArgument("need at least one machine");
  if (p.size() > max_jobs) {
    throw CapExceeded("deterministic optimum is capped at " + std::to_string(max_jobs) + " jobs");
  }
  DeterministicSearch search;
  search.jobs.assign(p.begin(), p.end());
  std::sort(search.jobs.begin(), search.jobs.end(), std::greater<>());
  search.suffix.assign(search.jobs.size() + 1, 0.0);
  for (std::size_t k = search.jobs.size(); k-- > 0;) {
    search.suffix[k] = search.suffix[k + 1] + search.jobs[k];
  }
  search.load.assign(static_cast<std::size_t>(m), 0.0);
  search.best = lpt_heuristic(p, m);
  const double trivial = std::max(search.suffix[0], static_cast<double>(m));
  if (search.best <= trivial) return search.best;
  search.descend(0);
  return search.best;
}

}  // namespace sebp
