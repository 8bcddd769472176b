#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sebp/instance.hpp"
#include "sebp/pmf.hpp"

namespace sebp {

/// Per-machine statistics of a fixed assignment.
struct MachineStats {
  int n = 0;           ///< number of jobs
  double x = 0.0;      ///< expected workload
  double alpha = 0.0;  ///< truncated load, sum of E[min(P_j, 1)]
  double beta = 0.0;   ///< excess, sum of E[(P_j - 1)^+]

  friend bool operator==(const MachineStats&, const MachineStats&) = default;
};

/// A job-to-machine map fixed before any processing time is observed. Indices are 0-based.
struct Assignment {
  std::vector<int> machine_of;
  std::vector<MachineStats> stats;

  int machines() const { return static_cast<int>(stats.size()); }
  /// Job indices per machine, ascending.
  std::vector<std::vector<std::size_t>> jobs_by_machine() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Builds an Assignment (with its statistics) from a 0-based machine index per job.
Assignment make_assignment(const Instance& inst, std::vector<int> machine_of);

/// Job indices in nonincreasing order of expected processing time, ties by ascending index.
std::vector<std::size_t> lept_order(const Instance& inst);

/// Fixed-assignment LEPT: jobs in lept_order, each onto the machine with the smallest
/// expected load so far (ties to the lowest machine index).
Assignment lept_f(const Instance& inst);

/// Every job on the first machine.
Assignment naive_assignment(const Instance& inst);

/// One realized schedule: start time and machine per job.
struct Schedule {
  std::vector<double> start;
  std::vector<int> machine;
};

/// Static list policy: jobs in lept_order start as early as possible on the first machine
/// to become free (ties to the lowest index).
Schedule lept_p_schedule(const Instance& inst, std::span<const double> realization);

/// Realized cost sum_i max(X_i, 1), with X_i the last completion time on machine i.
double schedule_cost(const Schedule& schedule, std::span<const double> realization, int machines);

/// Realized cost of a fixed assignment.
double realized_cost(std::span<const int> machine_of, std::span<const double> realization,
                     int machines);

/// No two jobs overlap on a machine.
bool is_feasible(const Schedule& schedule, std::span<const double> realization, int machines);
/// Every start time is 0 or the completion time of another job on the same machine.
bool is_non_idling(const Schedule& schedule, std::span<const double> realization);

struct FixedOptimum {
  Assignment assignment;
  double value = 0.0;
  std::size_t nodes = 0;  ///< search nodes visited
};

/// Optimal fixed assignment by branch and bound over restricted-growth strings (one
/// representative per machine relabeling). Costs come from exact workload convolution.
/// Requires discrete jobs and n <= max_jobs; throws CapExceeded otherwise.
FixedOptimum opt_fixed_exact(const Instance& inst, std::size_t max_jobs = 12,
                             std::size_t pmf_cap = kDefaultPmfCap);

/// Optimal deterministic extensible bin packing cost for realization p on m machines.
double opt_deterministic(std::span<const double> p, int m, std::size_t max_jobs = 20);

/// Longest processing time first onto the least loaded machine; returns the cost.
double lpt_heuristic(std::span<const double> p, int m);

}  // namespace sebp
