#pragma once

#include <cstdint>

namespace cospectra {

// Knobs shared by the expensive operations.  Defaults keep everything inside
// desk-scale memory; the vertex budget can also come from COSPECTRA_BUDGET.
struct RunConfig {
  long long vertex_budget = 1'000'000;
  double eigen_tol = 1e-12;        // bisection interval width for eigenvalues
  double grid_step = 1e-3;         // measure grid resolution
  int positivity_samples = 1000;   // interior samples for positivity checks
  int threads = 1;                 // worker pool size for batch solves

  // Applies the COSPECTRA_BUDGET environment override, if present.
  static RunConfig from_env();
};

}  // namespace cospectra
