#include "sebp/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sebp/error.hpp"

namespace sebp {
namespace {
constexpr double kMergeTolerance = 1e-12;

bool by_value(const Atom& a, const Atom& b) { return a.value < b.value; }
}  // namespace

double WorkloadPmf::mean() const {
  double m = 0.0;
  for (const auto& a : points_) m += a.value * a.prob;
  return m;
}

double WorkloadPmf::tail_expectation(double a) const {
  // Points are sorted, so only the upper end contributes.
  double acc = 0.0;
  for (auto it = points_.rbegin(); it != points_.rend() && it->value > a; ++it) {
    acc += it->prob * (it->value - a);
  }
  return acc;
}

namespace {

struct ConvolveBuffers {
  std::vector<Atom> merged;
  std::vector<Atom> shifted;
  std::vector<Atom> scratch;
};

// Writes the law of X + Y into `out`, which must not alias `xs`.
void convolve_into(const std::vector<Atom>& xs, std::span<const Atom> y, std::size_t cap,
                   ConvolveBuffers& buf, std::vector<Atom>& out) {
  if (xs.size() * y.size() > cap) {
    throw CapExceeded("convolution support " + std::to_string(xs.size() * y.size()) +
                      " exceeds cap " + std::to_string(cap));
  }
  // Each shifted copy of x is sorted; merge them one by one.
  auto& merged = buf.merged;
  merged.clear();
  if (y.size() == 2) {
    const Atom lo = y[0];
    const Atom hi = y[1];
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < xs.size() || j < xs.size()) {
      const bool take_lo = j == xs.size() || (i < xs.size() && xs[i].value + lo.value <= xs[j].value + hi.value);
      if (take_lo) {
        merged.push_back({xs[i].value + lo.value, xs[i].prob * lo.prob});
        ++i;
      } else {
        merged.push_back({xs[j].value + hi.value, xs[j].prob * hi.prob});
        ++j;
      }
    }
    y = {};
  }
  for (const auto& b : y) {
    buf.shifted.clear();
    for (const auto& a : xs) buf.shifted.push_back({a.value + b.value, a.prob * b.prob});
    buf.scratch.clear();
    std::merge(merged.begin(), merged.end(), buf.shifted.begin(), buf.shifted.end(),
               std::back_inserter(buf.scratch), by_value);
    merged.swap(buf.scratch);
  }
  out.clear();
  double group_start = 0.0;
  double weighted = 0.0;
  for (const auto& a : merged) {
    const double tol = kMergeTolerance * std::max(1.0, std::abs(group_start));
    if (!out.empty() && a.value - group_start <= tol) {
      auto& last = out.back();
      weighted += a.value * a.prob;
      last.prob += a.prob;
      if (a.value != last.value && last.prob > 0.0) last.value = weighted / last.prob;
    } else {
      out.push_back(a);
      group_start = a.value;
      weighted = a.value * a.prob;
    }
  }
}

}  // namespace

WorkloadPmf convolve(const WorkloadPmf& x, std::span<const Atom> y, std::size_t cap) {
  if (y.empty()) return x;
  ConvolveBuffers buf;
  std::vector<Atom> out;
  convolve_into(x.points(), y, cap, buf, out);
  return WorkloadPmf(std::move(out));
}

WorkloadPmf machine_pmf(std::span<const Distribution> jobs, std::size_t cap) {
  std::vector<Atom> current{{0.0, 1.0}};
  std::vector<Atom> next;
  ConvolveBuffers buf;
  for (const auto& d : jobs) {
    if (!d.is_discrete()) throw InvalidArgument("exact workload law needs discrete jobs");
    const auto atoms = d.atoms();
    if (atoms.empty()) continue;
    convolve_into(current, atoms, cap, buf, next);
    current.swap(next);
  }
  return WorkloadPmf(std::move(current));
}

}  // namespace sebp
