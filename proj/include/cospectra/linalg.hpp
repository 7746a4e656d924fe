#pragma once

#include <Eigen/Dense>

#include <vector>

#include "cospectra/graph.hpp"

namespace cospectra {

Eigen::MatrixXd dense_adjacency(const FiniteGraph& g);

// All adjacency eigenvalues, ascending (dense symmetric solver).
std::vector<double> dense_spectrum(const FiniteGraph& g);

// Largest adjacency eigenvalue.  Dense solve for small graphs, otherwise a
// deterministic Lanczos iteration (fixed all-ones start vector) run until the
// Ritz residual bound drops below resid_tol.
double top_eigenvalue(const FiniteGraph& g, double resid_tol = 1e-10);

}  // namespace cospectra
