#pragma once

#include <cstdint>
#include <variant>

#include "sebp/cost.hpp"
#include "sebp/instance.hpp"
#include "sebp/pmf.hpp"
#include "sebp/policies.hpp"

namespace sebp {

struct FixedPolicy {
  Assignment assignment;
};
struct LeptPPolicy {};
struct NaivePolicy {};

using Policy = std::variant<FixedPolicy, LeptPPolicy, NaivePolicy>;

struct McOptions {
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 0;
  int threads = 0;  ///< 0: OpenMP default capped by SEBP_THREADS
};

/// Realizations are drawn in fixed chunks of this many samples; chunk statistics are merged
/// in chunk order, so results do not depend on the worker count.
inline constexpr std::uint64_t kMcChunk = 4096;

/// Exact expected cost sum_i E[max(X_i, 1)] of a fixed assignment via workload convolution.
/// Needs discrete jobs; throws CapExceeded past `pmf_cap`.
CostEstimate expected_cost_fixed(const Instance& inst, const Assignment& asg,
                                 std::size_t pmf_cap = kDefaultPmfCap);

/// Monte Carlo estimate of the expected cost of a policy. Realization i draws the jobs in
/// index order from Stream(stream_seed(seed, i)), so runs with the same seed share
/// realizations across policies. Requires samples >= 2.
CostEstimate expected_cost_mc(const Instance& inst, const Policy& policy, const McOptions& options);

/// Single-threaded reference for expected_cost_mc with the identical chunked reduction.
CostEstimate expected_cost_mc_reference(const Instance& inst, const Policy& policy,
                                        const McOptions& options);

struct ScenarioOptions {
  std::uint64_t max_scenarios = 1'000'000;
  std::size_t max_jobs = 20;  ///< cap handed to opt_deterministic
  bool allow_mc = false;      ///< fall back to Monte Carlo instead of throwing CapExceeded
  McOptions mc{};
  int threads = 0;
};

/// Exact expected cost of the list policy LEPT_P by enumerating the joint support.
CostEstimate expected_cost_lept_p_exact(const Instance& inst, const ScenarioOptions& options = {});

/// E[OPT(P)]: expected cost of the clairvoyant optimum, by scenario enumeration with
/// opt_deterministic per scenario, or Monte Carlo when enumeration is impossible and allowed.
CostEstimate expected_opt_anticipative(const Instance& inst, const ScenarioOptions& options = {});

/// Single-threaded reference for the enumeration route of expected_opt_anticipative.
CostEstimate expected_opt_anticipative_reference(const Instance& inst,
                                                 const ScenarioOptions& options = {});

struct FractionalOptions {
  std::size_t pmf_cap = kDefaultPmfCap;
  bool allow_mc = false;
  McOptions mc{};
};

/// Optimal fractional assignment cost E[max(sum_j P_j, m)], exactly by convolving all jobs
/// or by Monte Carlo when allowed.
CostEstimate opt_fractional(const Instance& inst, const FractionalOptions& options = {});

}  // namespace sebp
