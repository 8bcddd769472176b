#include "sebp/experiments.hpp"

#include "sebp/bounds.hpp"
#include "sebp/evaluation.hpp"
#include "sebp/instance.hpp"
#include "sebp/policies.hpp"

namespace sebp {

std::vector<PonsPoint> experiment_pons(int lambda, const std::vector<int>& ms) {
  std::vector<PonsPoint> out;
  out.reserve(ms.size());
  for (int m : ms) {
    const auto f = pons_closed_forms(lambda, m);
    out.push_back({lambda, m, f.opt_p, f.opt_r, f.opt_p / f.opt_r, f.limit_ratio});
  }
  return out;
}

std::vector<PofaPoint> experiment_pofa(const std::vector<int>& ks, const std::vector<int>& ms) {
  std::vector<PofaPoint> out;
  out.reserve(ks.size() * ms.size());
  for (int k : ks) {
    for (int m : ms) {
      const auto f = pofa_closed_forms(k, m);
      out.push_back({k, m, f.opt_f, f.opt_p, f.opt_f / f.opt_p, f.limit_ratio});
    }
  }
  return out;
}

std::vector<RatioFPoint> experiment_ratio_f(const std::vector<double>& epsilons, double tie_break) {
  std::vector<RatioFPoint> out;
  out.reserve(epsilons.size());
  for (double eps : epsilons) {
    const Instance perturbed = gen_ratio_f_perturbed(eps, tie_break);
    const double lept = expected_cost_fixed(perturbed, lept_f(perturbed)).value;
    const double opt = opt_fixed_exact(gen_ratio_f(eps)).value;
    out.push_back({eps, lept, opt, lept / opt, (4.0 - eps) / 3.0});
  }
  return out;
}

}  // namespace sebp
