#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sebp/distribution.hpp"

namespace sebp {

/// Default bound on the support size of any intermediate convolution result.
inline constexpr std::size_t kDefaultPmfCap = 10'000'000;

/// Exact law of one machine's workload: sorted values with their probabilities.
class WorkloadPmf {
 public:
  /// The point mass at 0 (an empty machine).
  WorkloadPmf() : points_{{0.0, 1.0}} {}
  explicit WorkloadPmf(std::vector<Atom> sorted_points) : points_(std::move(sorted_points)) {}

  const std::vector<Atom>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  double mean() const;
  /// E[(X - a)^+].
  double tail_expectation(double a) const;
  /// E[max(X, floor)] evaluated as floor + E[(X - floor)^+].
  double expected_max(double floor) const { return floor + tail_expectation(floor); }

 private:
  std::vector<Atom> points_;
};

/// Law of X + Y for independent X and Y. Values within a relative 1e-12 are merged into their
/// probability-weighted average. Throws CapExceeded when the result would exceed `cap`.
WorkloadPmf convolve(const WorkloadPmf& x, std::span<const Atom> y, std::size_t cap = kDefaultPmfCap);

/// Law of the sum of independent discrete jobs.
WorkloadPmf machine_pmf(std::span<const Distribution> jobs, std::size_t cap = kDefaultPmfCap);

}  // namespace sebp
