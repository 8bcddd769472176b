#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sebp/bounds.hpp"
#include "sebp/error.hpp"
#include "sebp/evaluation.hpp"
#include "sebp/experiments.hpp"
#include "sebp/instance.hpp"
#include "sebp/json_io.hpp"
#include "sebp/policies.hpp"

namespace {

using sebp::Json;

enum ExitCode { kOk = 0, kInvalid = 2, kCap = 3, kNumerical = 4 };

double parse_number(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
      value = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } else {
      const double num = parse_number(text.substr(0, slash));
      const double den = parse_number(text.substr(slash + 1));
      if (den == 0.0) throw std::invalid_argument(text);
      value = num / den;
    }
  } catch (const std::logic_error&) {
    throw sebp::InvalidArgument("not a number: \"" + text + "\"");
  }
  return value;
}

sebp::TableRow parse_row(const std::string& text) {
  const auto colon = text.find(':');
  sebp::TableRow row{sebp::family_from_string(text.substr(0, colon))};
  if (colon != std::string::npos) {
    if (row.family != sebp::Family::triangular) {
      throw sebp::InvalidArgument("only triangular rows take a mode position: \"" + text + "\"");
    }
    row.alpha = parse_number(text.substr(colon + 1));
  }
  return row;
}

std::string row_name(const sebp::TableRow& row) {
  std::ostringstream os;
  os << sebp::to_string(row.family);
  if (row.family == sebp::Family::triangular) os << ':' << row.alpha;
  return os.str();
}

Json timing(std::chrono::steady_clock::time_point start) {
  const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::time_t now = std::time(nullptr);
  std::ostringstream ts;
  ts << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
  return {{"timestamp", ts.str()}, {"wall_time_s", elapsed}};
}

// ---------------------------------------------------------------------------

struct InstanceArgs {
  std::string kind;
  int lambda = 1;
  int m = 2;
  int k = 2;
  int n = 5;
  double epsilon = 0.01;
  std::string family = "finite";
  double delta = 0.25;
  double alpha = 0.0;
  int support_size = 3;
  double max_value = 1.0;
  double mean_min = 0.2;
  double mean_max = 1.0;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_instance(const InstanceArgs& a) {
  auto make = [&]() -> sebp::Instance {
    if (a.kind == "pons") return sebp::gen_pons(a.lambda, a.m);
    if (a.kind == "pofa") return sebp::gen_pofa(a.k, a.m);
    if (a.kind == "ratio-f") return sebp::gen_ratio_f(a.epsilon);
    sebp::RandomInstanceSpec spec;
    spec.n = a.n;
    spec.m = a.m;
    spec.seed = a.seed;
    spec.mean_min = a.mean_min;
    spec.mean_max = a.mean_max;
    if (a.family == "finite") {
      spec.recipe = sebp::FiniteRecipe{a.support_size, a.max_value};
    } else {
      spec.recipe = sebp::FamilySpec{sebp::family_from_string(a.family), a.delta, a.alpha};
    }
    return sebp::gen_random(spec);
  };
  const Json j = sebp::to_json(make());
  if (a.out.empty() || a.out == "-") {
    std::cout << j.dump(2) << '\n';
  } else {
    sebp::write_json(a.out, j);
  }
  return kOk;
}

struct EvalArgs {
  std::string instance;
  std::string policy = "lept-f";
  std::string method = "exact";
  sebp::McOptions mc{};
  sebp::ScenarioOptions scenarios{};
  std::size_t pmf_cap = sebp::kDefaultPmfCap;
  std::size_t max_fixed_jobs = 12;
};

int cmd_eval(const EvalArgs& a) {
  const sebp::Instance inst = sebp::read_instance(a.instance);
  const bool exact = a.method == "exact";
  Json out = Json::object();
  sebp::CostEstimate est;
  if (a.policy == "lept-f" || a.policy == "naive") {
    const auto asg = a.policy == "lept-f" ? sebp::lept_f(inst) : sebp::naive_assignment(inst);
    if (exact) {
      est = sebp::expected_cost_fixed(inst, asg, a.pmf_cap);
    } else {
      const sebp::Policy policy = a.policy == "naive" ? sebp::Policy{sebp::NaivePolicy{}}
                                                      : sebp::Policy{sebp::FixedPolicy{asg}};
      est = sebp::expected_cost_mc(inst, policy, a.mc);
    }
    out["assignment"] = sebp::to_json(asg);
  } else if (a.policy == "lept-p") {
    est = exact ? sebp::expected_cost_lept_p_exact(inst, a.scenarios)
                : sebp::expected_cost_mc(inst, sebp::LeptPPolicy{}, a.mc);
  } else {
    if (!exact) throw sebp::InvalidArgument("opt-f is only available with --method exact");
    const auto best = sebp::opt_fixed_exact(inst, a.max_fixed_jobs, a.pmf_cap);
    est = sebp::CostEstimate::exact(best.value);
    out["assignment"] = sebp::to_json(best.assignment);
    out["nodes"] = best.nodes;
  }
  Json result = sebp::to_json(est);
  result["policy"] = a.policy;
  result.update(out);
  std::cout << result.dump(2) << '\n';
  return kOk;
}

struct BoundsArgs {
  std::string instance;
  sebp::BoundOptions options{};
};

int cmd_bounds(const BoundsArgs& a) {
  const auto rep = sebp::bound_report(sebp::read_instance(a.instance), a.options);
  std::cout << sebp::to_json(rep).dump(2) << '\n';
  return kOk;
}

struct TableArgs {
  std::vector<std::string> deltas{"0", "1/8", "1/6", "1/4", "1/3", "1/2", "1"};
  std::vector<std::string> families{"lognormal",        "gamma",           "weibull",
                                    "uniform",          "bernoulli",       "triangular:0",
                                    "triangular:0.25",  "triangular:0.5",  "triangular:0.75",
                                    "triangular:1"};
  int threads = 0;
};

int cmd_table(const TableArgs& a) {
  std::vector<double> deltas;
  for (const auto& d : a.deltas) deltas.push_back(parse_number(d));
  std::vector<sebp::TableRow> rows;
  for (const auto& f : a.families) rows.push_back(parse_row(f));
  const auto table = sebp::table_1(deltas, rows, a.threads);
  std::cout << "family";
  for (const auto& d : a.deltas) std::cout << ',' << d;
  std::cout << '\n';
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::cout << row_name(rows[r]);
    for (const auto& cell : table[r]) {
      std::cout << ',';
      if (cell) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", *cell);
        std::cout << buf;
      } else {
        std::cout << '-';
      }
    }
    std::cout << '\n';
  }
  return kOk;
}

struct ExperimentArgs {
  int lambda = 4;
  std::vector<int> ms{8, 32, 128, 512, 2048};
  std::vector<int> ks{1, 2, 10, 50, 200};
  std::vector<double> epsilons{0.5, 0.1, 0.05, 0.01};
  double tie_break = 1e-12;
};

int cmd_experiment(const std::string& name, const ExperimentArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  Json result;
  result["experiment"] = name;
  Json points = Json::array();
  if (name == "pons") {
    result["grid"] = {{"lambda", a.lambda}, {"m", a.ms}};
    for (const auto& p : sebp::experiment_pons(a.lambda, a.ms)) {
      points.push_back({{"lambda", p.lambda}, {"m", p.m}, {"opt_p", p.opt_p}, {"opt_r", p.opt_r},
                        {"ratio", p.ratio}, {"limit", p.limit}});
    }
  } else if (name == "pofa") {
    result["grid"] = {{"k", a.ks}, {"m", a.ms}};
    for (const auto& p : sebp::experiment_pofa(a.ks, a.ms)) {
      points.push_back({{"k", p.k}, {"m", p.m}, {"opt_f", p.opt_f}, {"opt_p", p.opt_p},
                        {"ratio", p.ratio}, {"limit", p.limit}});
    }
  } else {
    result["grid"] = {{"epsilon", a.epsilons}, {"tie_break", a.tie_break}};
    for (const auto& p : sebp::experiment_ratio_f(a.epsilons, a.tie_break)) {
      points.push_back({{"epsilon", p.epsilon}, {"lept_f", p.lept_f}, {"opt_f", p.opt_f},
                        {"ratio", p.ratio}, {"expected", p.expected}});
    }
  }
  result["points"] = points;
  result["metadata"] = {{"method", "exact"}, {"timing", timing(start)}};
  std::cout << result.dump(2) << '\n';
  return kOk;
}

void add_mc_flags(CLI::App* cmd, sebp::McOptions& mc) {
  cmd->add_option("--samples", mc.samples, "Monte Carlo sample count")->capture_default_str();
  cmd->add_option("--seed", mc.seed, "Monte Carlo base seed")->capture_default_str();
  cmd->add_option("--threads", mc.threads, "worker threads (0: OpenMP default capped by SEBP_THREADS)")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stochastic extensible bin packing: policies, expected costs and guarantees"};
  app.require_subcommand(1);

  InstanceArgs inst_args;
  auto* instance = app.add_subcommand("instance", "instance tools");
  instance->require_subcommand(1);
  auto* gen = instance->add_subcommand("gen", "generate an instance as JSON");
  gen->add_option("--kind", inst_args.kind, "pons | pofa | ratio-f | random")
      ->required()
      ->check(CLI::IsMember({"pons", "pofa", "ratio-f", "random"}));
  gen->add_option("--lambda", inst_args.lambda, "pons: jobs are (m/lambda) Bernoulli(lambda/m)")->capture_default_str();
  gen->add_option("--m", inst_args.m, "number of machines")->capture_default_str();
  gen->add_option("--k", inst_args.k, "pofa: k m jobs Bernoulli(1/k)")->capture_default_str();
  gen->add_option("--epsilon", inst_args.epsilon, "ratio-f: success probability")->capture_default_str();
  gen->add_option("--n", inst_args.n, "random: number of jobs (> m)")->capture_default_str();
  gen->add_option("--family", inst_args.family,
                  "random: finite | lognormal | gamma | weibull | uniform | bernoulli | triangular")
      ->capture_default_str();
  gen->add_option("--delta", inst_args.delta, "random families: squared CV bound")->capture_default_str();
  gen->add_option("--alpha", inst_args.alpha, "random triangular: mode position")->capture_default_str();
  gen->add_option("--support-size", inst_args.support_size, "random finite: support points per job")
      ->capture_default_str();
  gen->add_option("--max-value", inst_args.max_value, "random finite: largest value")->capture_default_str();
  gen->add_option("--mean-min", inst_args.mean_min, "random families: smallest job mean")->capture_default_str();
  gen->add_option("--mean-max", inst_args.mean_max, "random families: largest job mean")->capture_default_str();
  gen->add_option("--seed", inst_args.seed, "random: seed")->capture_default_str();
  gen->add_option("-o,--output", inst_args.out, "output path (stdout when omitted)");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "expected cost of a policy");
  eval->add_option("--instance", eval_args.instance, "instance JSON")->required();
  eval->add_option("--policy", eval_args.policy, "lept-f | lept-p | naive | opt-f")
      ->check(CLI::IsMember({"lept-f", "lept-p", "naive", "opt-f"}))
      ->capture_default_str();
  eval->add_option("--method", eval_args.method, "exact | mc")
      ->check(CLI::IsMember({"exact", "mc"}))
      ->capture_default_str();
  add_mc_flags(eval, eval_args.mc);
  eval->add_option("--pmf-cap", eval_args.pmf_cap, "largest workload support in exact convolution")
      ->capture_default_str();
  eval->add_option("--max-scenarios", eval_args.scenarios.max_scenarios, "lept-p exact: joint support cap")
      ->capture_default_str();
  eval->add_option("--max-fixed-jobs", eval_args.max_fixed_jobs, "opt-f: job cap of the exhaustive search")
      ->capture_default_str();

  BoundsArgs bounds_args;
  auto* bounds = app.add_subcommand("bounds", "lower bounds and the LEPT_F ratio");
  bounds->add_option("--instance", bounds_args.instance, "instance JSON")->required();
  bounds->add_option("--pmf-cap", bounds_args.options.pmf_cap, "exact convolution cap before Monte Carlo")
      ->capture_default_str();
  add_mc_flags(bounds, bounds_args.options.mc);

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "family guarantees as CSV");
  table->add_option("--deltas", table_args.deltas, "squared CV bounds; fractions like 1/8 allowed")
      ->delimiter(',')
      ->capture_default_str();
  table->add_option("--families", table_args.families, "rows; triangular rows as triangular:<alpha>")
      ->delimiter(',')
      ->capture_default_str();
  table->add_option("--threads", table_args.threads, "worker threads")->capture_default_str();

  ExperimentArgs exp_args;
  std::string exp_name;
  auto* experiment = app.add_subcommand("experiment", "convergence experiments as JSON");
  experiment->add_option("name", exp_name, "pons | pofa | ratio-f")
      ->required()
      ->check(CLI::IsMember({"pons", "pofa", "ratio-f"}));
  experiment->add_option("--lambda", exp_args.lambda, "pons: lambda")->capture_default_str();
  experiment->add_option("--ms", exp_args.ms, "machine counts")->delimiter(',')->capture_default_str();
  experiment->add_option("--ks", exp_args.ks, "pofa: values of k")->delimiter(',')->capture_default_str();
  experiment->add_option("--epsilons", exp_args.epsilons, "ratio-f: values of epsilon")
      ->delimiter(',')
      ->capture_default_str();
  experiment->add_option("--tie-break", exp_args.tie_break, "ratio-f: mean increase of the third job")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*gen) return cmd_instance(inst_args);
    if (*eval) return cmd_eval(eval_args);
    if (*bounds) return cmd_bounds(bounds_args);
    if (*table) return cmd_table(table_args);
    if (*experiment) return cmd_experiment(exp_name, exp_args);
  } catch (const sebp::CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (try --method mc or raise the cap)\n";
    return kCap;
  } catch (const sebp::NumericalFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumerical;
  } catch (const sebp::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return kInvalid;
}
