#include "sebp/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sebp {

int worker_count(int requested) {
  if (requested > 0) return requested;
#ifdef _OPENMP
  int n = omp_get_max_threads();
#else
  int n = 1;
#endif
  if (const char* env = std::getenv("SEBP_THREADS")) {
    try {
      int cap = std::stoi(env);
      if (cap > 0) n = std::min(n, cap);
    } catch (...) {
      // unparsable value: keep the default
    }
  }
  return std::max(n, 1);
}

}  // namespace sebp
