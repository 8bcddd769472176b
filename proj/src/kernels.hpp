// Chunked reductions shared by the Monte Carlo and scenario-enumeration engines.
// The OpenMP driver and the serial reference walk identical chunks and merge the
// per-chunk accumulators in chunk order, so both return bit-identical results.
#pragma once

#include <cmath>
#include <cstdint>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sebp::detail {

/// Welford accumulator; merge() is Chan's pairwise update.
struct RunningStats {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
  }

  void merge(const RunningStats& o) {
    if (o.n == 0) return;
    if (n == 0) {
      *this = o;
      return;
    }
    const double total = static_cast<double>(n + o.n);
    const double delta = o.mean - mean;
    mean += delta * static_cast<double>(o.n) / total;
    m2 += o.m2 + delta * delta * static_cast<double>(n) * static_cast<double>(o.n) / total;
    n += o.n;
  }

  double variance() const { return n > 1 ? m2 / static_cast<double>(n - 1) : 0.0; }
};

struct WeightedSum {
  double sum = 0.0;
  void merge(const WeightedSum& o) { sum += o.sum; }
};

/// Runs `body(index, acc)` for every index in [0, count), chunk by chunk. `make_body()` is
/// called once per chunk so each chunk owns its scratch space.
template <class Acc, class MakeBody>
Acc chunked_reduce(std::uint64_t count, std::uint64_t chunk, int threads, bool parallel,
                   MakeBody&& make_body) {
  const std::uint64_t chunks = (count + chunk - 1) / chunk;
  std::vector<Acc> parts(chunks);
  std::vector<std::exception_ptr> errors(chunks);
  auto run_chunk = [&](std::uint64_t c) {
    try {
      auto body = make_body();
      Acc acc{};
      const std::uint64_t end = std::min(count, (c + 1) * chunk);
      for (std::uint64_t i = c * chunk; i < end; ++i) body(i, acc);
      parts[c] = acc;
    } catch (...) {
      errors[c] = std::current_exception();
    }
  };
  if (parallel) {
    const auto n = static_cast<std::int64_t>(chunks);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t c = 0; c < n; ++c) run_chunk(static_cast<std::uint64_t>(c));
  } else {
    for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
  }
  Acc total{};
  for (std::uint64_t c = 0; c < chunks; ++c) {
    if (errors[c]) std::rethrow_exception(errors[c]);
    total.merge(parts[c]);
  }
  return total;
}

}  // namespace sebp::detail
