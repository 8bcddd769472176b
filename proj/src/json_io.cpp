#include "sebp/json_io.hpp"

#include <fstream>
#include <string>

#include "sebp/error.hpp"

namespace sebp {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

double number(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw InvalidArgument(std::string("distribution field \"") + key + "\" must be a number");
  }
  return j.at(key).get<double>();
}

}  // namespace

Json to_json(const Distribution& d) {
  Json j;
  j["kind"] = std::string(to_string(d.kind()));
  std::visit(Overloaded{
                 [&](const law::Finite& f) {
                   Json pts = Json::array();
                   for (const auto& a : f.points) pts.push_back({a.value, a.prob});
                   j["points"] = pts;
                 },
                 [&](const law::Deterministic& v) { j["value"] = v.value; },
                 [&](const law::ScaledBernoulli& v) {
                   j["x"] = v.x;
                   j["p"] = v.p;
                 },
                 [&](const law::Lognormal& v) {
                   j["mu"] = v.mu;
                   j["sigma"] = v.sigma;
                 },
                 [&](const law::Gamma& v) {
                   j["shape"] = v.shape;
                   j["scale"] = v.scale;
                 },
                 [&](const law::Weibull& v) {
                   j["shape"] = v.shape;
                   j["scale"] = v.scale;
                 },
                 [&](const law::Uniform& v) {
                   j["a"] = v.a;
                   j["b"] = v.b;
                 },
                 [&](const law::Triangular& v) {
                   j["a"] = v.a;
                   j["b"] = v.b;
                   j["c"] = v.c;
                 },
             },
             d.law());
  return j;
}

Distribution distribution_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw InvalidArgument("distribution must be an object with a string \"kind\"");
  }
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "finite") {
    if (!j.contains("points") || !j.at("points").is_array()) {
      throw InvalidArgument("finite distribution needs a \"points\" array");
    }
    std::vector<Atom> pts;
    for (const auto& p : j.at("points")) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
        throw InvalidArgument("finite points must be [value, probability] pairs");
      }
      pts.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    return Distribution::finite(std::move(pts));
  }
  if (kind == "deterministic") return Distribution::deterministic(number(j, "value"));
  if (kind == "scaled-bernoulli") return Distribution::scaled_bernoulli(number(j, "x"), number(j, "p"));
  if (kind == "lognormal") return Distribution::lognormal(number(j, "mu"), number(j, "sigma"));
  if (kind == "gamma") return Distribution::gamma(number(j, "shape"), number(j, "scale"));
  if (kind == "weibull") return Distribution::weibull(number(j, "shape"), number(j, "scale"));
  if (kind == "uniform") return Distribution::uniform(number(j, "a"), number(j, "b"));
  if (kind == "triangular") {
    return Distribution::triangular(number(j, "a"), number(j, "b"), number(j, "c"));
  }
  throw InvalidArgument("unknown distribution kind \"" + kind + "\"");
}

Json to_json(const Instance& inst) {
  Json jobs = Json::array();
  for (const auto& d : inst.jobs()) jobs.push_back(to_json(d));
  return {{"machines", inst.machines()}, {"jobs", jobs}};
}

Instance instance_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("machines") || !j.at("machines").is_number_integer() ||
      !j.contains("jobs") || !j.at("jobs").is_array()) {
    throw InvalidArgument("instance must have an integer \"machines\" and a \"jobs\" array");
  }
  std::vector<Distribution> jobs;
  for (const auto& d : j.at("jobs")) jobs.push_back(distribution_from_json(d));
  return Instance(j.at("machines").get<int>(), std::move(jobs));
}

Json to_json(const Assignment& asg) {
  Json machine_of = Json::array();
  for (int i : asg.machine_of) machine_of.push_back(i + 1);
  Json stats = Json::array();
  for (const auto& s : asg.stats) {
    stats.push_back({{"n", s.n}, {"x", s.x}, {"alpha", s.alpha}, {"beta", s.beta}});
  }
  return {{"machine_of", machine_of}, {"stats", stats}};
}

Json to_json(const CostEstimate& est) {
  return {{"value", est.value},
          {"method", std::string(to_string(est.method))},
          {"half_width", est.half_width},
          {"samples", est.samples},
          {"seed", est.seed}};
}

Json to_json(const BoundReport& rep) {
  return {{"rho", rep.rho},
          {"s", rep.s},
          {"beta", rep.beta},
          {"lb_trivial", rep.lb_trivial},
          {"lb_truncated", rep.lb_truncated},
          {"policy_value", to_json(rep.policy_value)},
          {"ratio_vs_lb", rep.ratio_vs_lb},
          {"guarantee", rep.guarantee}};
}

Instance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open instance file " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("malformed instance JSON in " + path.string() + ": " + e.what());
  }
  return instance_from_json(j);
}

void write_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace sebp
