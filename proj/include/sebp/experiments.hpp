#pragma once

#include <cstdint>
#include <vector>

namespace sebp {

struct PonsPoint {
  int lambda;
  int m;
  double opt_p;
  double opt_r;
  double ratio;
  double limit;
};

/// opt_p / opt_r of gen_pons(lambda, m) for each m, against the m -> infinity limit.
std::vector<PonsPoint> experiment_pons(int lambda, const std::vector<int>& ms);

struct PofaPoint {
  int k;
  int m;
  double opt_f;
  double opt_p;
  double ratio;
  double limit;
};

/// opt_f / opt_p of gen_pofa(k, m) over the grid ks x ms, row-major in ks.
std::vector<PofaPoint> experiment_pofa(const std::vector<int>& ks, const std::vector<int>& ms);

struct RatioFPoint {
  double epsilon;
  double lept_f;   ///< exact LEPT_F cost on the tie-broken instance
  double opt_f;    ///< exact optimal fixed assignment on the original instance
  double ratio;
  double expected; ///< (4 - epsilon) / 3
};

std::vector<RatioFPoint> experiment_ratio_f(const std::vector<double>& epsilons, double tie_break = 1e-12);

}  // namespace sebp
