#pragma once

#include <string>
#include <vector>

#include "cospectra/family.hpp"
#include "cospectra/graph.hpp"
#include "cospectra/jacobi.hpp"
#include "cospectra/rationals.hpp"

namespace cospectra {

// One orthogonal summand of a spherically symmetric tree's adjacency:
// multiplicity copies of the half-line Jacobi operator with off-diagonals
// sqrt(d_level), sqrt(d_level+1), ...
struct DecompComponent {
  int level = 0;
  BigInt multiplicity;
  JacobiSpec jacobi;
};

// m_0 = 1 and m_n = (prod_{q<n-1} d_q) * (d_{n-1} - 1); the partial sums
// telescope to the sphere sizes.
std::vector<BigInt> multiplicities(const BranchingSeq& b, int up_to);

// Components with level 0..up_to for a branching-driven tree family
// (ssrt / rootedtree / tree kinds).
std::vector<DecompComponent> decompose(const GraphFamily& tree, int up_to);

struct VerifyReport {
  int depth = 0;
  long long ball_vertices = 0;
  bool dims_ok = false;
  bool spectra_ok = false;
  double spectra_max_dev = 0.0;
  bool conjugation_ok = false;
  double conjugation_max_dev = 0.0;
  bool ok() const { return dims_ok && spectra_ok && conjugation_ok; }
};

// Audits the decomposition against the depth-`depth` ball:
//   dims        - component dimensions add up level by level
//   spectra     - ball spectrum equals the union of truncated-section spectra
//                 as a multiset (within spectra_tol)
//   conjugation - an explicitly built orthonormal sphere basis conjugates the
//                 ball adjacency into the block-Jacobi model (within conj_tol,
//                 including orthonormality of the basis itself)
VerifyReport verify_decomposition(const GraphFamily& tree, int depth,
                                  double spectra_tol = 1e-8,
                                  double conj_tol = 1e-10,
                                  long long budget = 1'000'000);

std::string verify_report_json(const VerifyReport& r);

}  // namespace cospectra
