#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sebp/cost.hpp"
#include "sebp/evaluation.hpp"
#include "sebp/family.hpp"
#include "sebp/instance.hpp"

namespace sebp {

/// 1 + e^-lambda lambda^lambda / lambda!, i.e. E[max(Y, lambda)] / lambda for Y ~ Poisson(lambda).
double poisson_max_ratio(int lambda);

/// P(Binomial(n, p) = u), evaluated in log space.
double binomial_pmf(long long n, double p, long long u);

struct PonsForms {
  double opt_p;
  double opt_r;
  double limit_ratio;
};

/// Optimal non-anticipatory and fractional costs of gen_pons(lambda, m), plus the m -> infinity
/// limit of their ratio. Requires m >= lambda >= 1.
PonsForms pons_closed_forms(int lambda, int m);

struct PofaForms {
  double opt_f;
  double opt_p;
  double limit_ratio;
};

/// Optimal fixed-assignment and non-anticipatory costs of gen_pofa(k, m), plus the k -> infinity
/// limit of their ratio for this m. Requires k, m >= 1.
PofaForms pofa_closed_forms(int k, int m);

/// f(t) = (2 - 1/t) g(t) + (1/t - 1) g(2t) with g the extension cost of the family's minimal element.
double family_objective(const Distribution& minimal, double t);

/// Supremum of family_objective over t in (0, 1]: a 1e-3 grid from t = 1e-6, then golden-section
/// refinement to 1e-8. Throws InvalidArgument for an infeasible spec.
double family_bound(const FamilySpec& spec);

/// A table row: a family, with the mode position for triangular rows.
struct TableRow {
  Family family;
  double alpha = 0.0;
  std::string label() const;
};

std::vector<double> default_table_deltas();
std::vector<TableRow> default_table_rows();

/// Cell (r, c) holds family_bound for rows[r] at deltas[c], or nullopt when the family cannot
/// reach that squared coefficient of variation. Cells are evaluated in parallel.
using Table = std::vector<std::vector<std::optional<double>>>;
Table table_1(const std::vector<double>& deltas, const std::vector<TableRow>& rows, int threads = 0);
/// Serial evaluation of the same cells.
Table table_1_reference(const std::vector<double>& deltas, const std::vector<TableRow>& rows);

struct PietraBound {
  double numeric;      ///< maximum found by scan and refinement
  double argmax;       ///< maximizing t
  double closed_form;  ///< 4 - 2 sqrt 2 + 2 varrho (sqrt 2 - 1)
};

/// Guarantee for job laws whose Pietra index is at most varrho, 0 <= varrho < 1.
PietraBound pietra_bound(double varrho);

struct BoundOptions {
  std::size_t pmf_cap = kDefaultPmfCap;
  McOptions mc{};
};

struct BoundReport {
  double rho;
  double s;
  double beta;
  double lb_trivial;    ///< m max(rho, 1)
  double lb_truncated;  ///< max(s, m + beta)
  CostEstimate policy_value;  ///< LEPT_F, exact when the instance allows it
  double ratio_vs_lb;
  double guarantee;  ///< 1 + 1/e
};

BoundReport bound_report(const Instance& inst, const BoundOptions& options = {});

}  // namespace sebp
