#include "sebp/bounds.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <string>

#include "sebp/error.hpp"
#include "sebp/numerics.hpp"
#include "sebp/parallel.hpp"
#include "sebp/policies.hpp"

namespace sebp {

double poisson_max_ratio(int lambda) {
  if (lambda < 1) throw InvalidArgument("poisson_max_ratio needs lambda >= 1");
  const double l = lambda;
  return 1.0 + std::exp(-l + l * std::log(l) - std::lgamma(l + 1.0));
}

double binomial_pmf(long long n, double p, long long u) {
  if (n < 0 || u < 0 || u > n || !(p >= 0.0 && p <= 1.0)) return 0.0;
  if (p == 0.0) return u == 0 ? 1.0 : 0.0;
  if (p == 1.0) return u == n ? 1.0 : 0.0;
  const double nn = static_cast<double>(n);
  const double uu = static_cast<double>(u);
  const double log_choose = std::lgamma(nn + 1.0) - std::lgamma(uu + 1.0) - std::lgamma(nn - uu + 1.0);
  return std::exp(log_choose + uu * std::log(p) + (nn - uu) * std::log1p(-p));
}

namespace {

// E[max(Y, c)] - E[Y] = sum_{u < c} (c - u) P(Y = u) for Y ~ Binomial(n, p) and integer c.
double binomial_shortfall(long long n, double p, long long c) {
  double acc = 0.0;
  for (long long u = 0; u < c && u <= n; ++u) acc += static_cast<double>(c - u) * binomial_pmf(n, p, u);
  return acc;
}

}  // namespace

PonsForms pons_closed_forms(int lambda, int m) {
  if (lambda < 1 || m < lambda) throw InvalidArgument("PoNS forms need m >= lambda >= 1");
  const double l = lambda;
  const double mm = m;
  const double opt_r = mm + (mm / l) * binomial_shortfall(m, l / mm, lambda);
  return {2.0 * mm - l, opt_r, 2.0 / poisson_max_ratio(lambda)};
}

PofaForms pofa_closed_forms(int k, int m) {
  if (k < 1 || m < 1) throw InvalidArgument("PoFA forms need k, m >= 1");
  const double mm = m;
  const double opt_f = mm * (1.0 + std::pow(1.0 - 1.0 / k, k));
  const long long jobs = static_cast<long long>(k) * m;
  const double opt_p = mm + binomial_shortfall(jobs, 1.0 / k, m);
  return {opt_f, opt_p, (1.0 + std::exp(-1.0)) / poisson_max_ratio(m)};
}

double family_objective(const Distribution& minimal, double t) {
  return (2.0 - 1.0 / t) * extension_cost(minimal, t) + (1.0 / t - 1.0) * extension_cost(minimal, 2.0 * t);
}

double family_bound(const FamilySpec& spec) {
  spec.validate();
  const Distribution z = minimal_element(spec);
  const auto best =
      numerics::scan_and_refine_max([&z](double t) { return family_objective(z, t); }, 1e-6, 1.0);
  return best.value;
}

std::string TableRow::label() const { return FamilySpec{family, 0.0, alpha}.label(); }

std::vector<double> default_table_deltas() { return {0.0, 1.0 / 8, 1.0 / 6, 1.0 / 4, 1.0 / 3, 1.0 / 2, 1.0}; }

std::vector<TableRow> default_table_rows() {
  return {{Family::lognormal},  {Family::gamma},         {Family::weibull},
          {Family::uniform},    {Family::bernoulli},     {Family::triangular, 0.0},
          {Family::triangular, 0.25}, {Family::triangular, 0.5}, {Family::triangular, 0.75},
          {Family::triangular, 1.0}};
}

namespace {

Table compute_table(const std::vector<double>& deltas, const std::vector<TableRow>& rows, int threads,
                    bool parallel) {
  const std::size_t cols = deltas.size();
  const auto cells = static_cast<std::int64_t>(rows.size() * cols);
  Table out(rows.size(), std::vector<std::optional<double>>(cols));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(cells));
  auto cell = [&](std::int64_t idx) {
    const auto r = static_cast<std::size_t>(idx) / cols;
    const auto c = static_cast<std::size_t>(idx) % cols;
    try {
      const FamilySpec spec{rows[r].family, deltas[c], rows[r].alpha};
      if (spec.feasible()) out[r][c] = family_bound(spec);
    } catch (...) {
      errors[static_cast<std::size_t>(idx)] = std::current_exception();
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t i = 0; i < cells; ++i) cell(i);
  } else {
    for (std::int64_t i = 0; i < cells; ++i) cell(i);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace

Table table_1(const std::vector<double>& deltas, const std::vector<TableRow>& rows, int threads) {
  return compute_table(deltas, rows, worker_count(threads), true);
}

Table table_1_reference(const std::vector<double>& deltas, const std::vector<TableRow>& rows) {
  return compute_table(deltas, rows, 1, false);
}

PietraBound pietra_bound(double varrho) {
  if (!(varrho >= 0.0 && varrho < 1.0)) throw InvalidArgument("Pietra bound needs 0 <= varrho < 1");
  auto g = [varrho](double t) { return std::max(1.0 + varrho * t, varrho + t); };
  auto f = [&g](double t) { return (2.0 - 1.0 / t) * g(t) + (1.0 / t - 1.0) * g(2.0 * t); };
  const auto best = numerics::scan_and_refine_max(f, 1e-6, 1.0);
  const double r2 = std::numbers::sqrt2;
  return {best.value, best.argmax, 4.0 - 2.0 * r2 + 2.0 * varrho * (r2 - 1.0)};
}

BoundReport bound_report(const Instance& inst, const BoundOptions& options) {
  const auto d = derived_scalars(inst);
  const double m = inst.machines();
  BoundReport rep{};
  rep.rho = d.rho;
  rep.s = d.s;
  rep.beta = d.beta;
  rep.lb_trivial = m * std::max(d.rho, 1.0);
  rep.lb_truncated = std::max(d.s, m + d.beta);
  const Assignment asg = lept_f(inst);
  bool exact = false;
  if (inst.all_discrete()) {
    try {
      rep.policy_value = expected_cost_fixed(inst, asg, options.pmf_cap);
      exact = true;
    } catch (const CapExceeded&) {
    }
  }
  if (!exact) rep.policy_value = expected_cost_mc(inst, FixedPolicy{asg}, options.mc);
  rep.ratio_vs_lb = rep.policy_value.value / rep.lb_truncated;
  rep.guarantee = 1.0 + std::exp(-1.0);
  return rep;
}

}  // namespace sebp
