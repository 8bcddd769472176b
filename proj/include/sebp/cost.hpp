#pragma once

#include <cstdint>
#include <string_view>

namespace sebp {

enum class Method { exact, monte_carlo };

std::string_view to_string(Method method);

/// An expected cost with the way it was obtained. For Monte Carlo estimates
/// half_width is the 95% confidence half-width 1.96 * sd / sqrt(samples).
struct CostEstimate {
  double value = 0.0;
  Method method = Method::exact;
  double half_width = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  static CostEstimate exact(double v) { return {v, Method::exact, 0.0, 0, 0}; }
};

}  // namespace sebp
