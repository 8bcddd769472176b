#pragma once

namespace sebp {

/// Number of OpenMP workers to use. `requested` > 0 wins; otherwise the
/// SEBP_THREADS environment variable caps the OpenMP default.
int worker_count(int requested = 0);

}  // namespace sebp
