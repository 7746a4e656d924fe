#pragma once

#include <optional>
#include <vector>

#include "cospectra/graph.hpp"

namespace cospectra {

enum class AffineKind { A, D, E };

// Witness that the host contains a spectral-radius-2 diagram as a subgraph.
// embedding[i] is the host position of diagram vertex i, in the order used by
// affine_diagram.
struct ForbiddenWitness {
  AffineKind kind = AffineKind::A;
  int n = 0;
  std::vector<int> embedding;
};

// The diagrams with largest adjacency eigenvalue exactly 2:
//   A(n), n >= 2: cycle 0-1-...-n-0 (n+1 vertices)
//   D(n), n >= 4: path 1..n-1 plus leaves 0 at vertex 2 and n at vertex n-2
//   E(6)/E(7)/E(8): star with arm lengths (2,2,2)/(3,3,1)/(5,2,1); vertex 0 is
//   the centre, arms listed near-to-far in the order above
FiniteGraph affine_diagram(AffineKind kind, int n);

// Spectral radius < 2 counterparts (for tests): the path on n vertices, the
// path 0..n-2 with an extra leaf n-1 at vertex 1, and the E(n) stars with arm
// lengths (2,2,1)/(3,2,1)/(4,2,1) for n = 6/7/8.
FiniteGraph path_graph(int n);
FiniteGraph dynkin_d(int n);
FiniteGraph dynkin_e(int n);

// Smallest forbidden subgraph by (kind A < D < E, then n); the embedding
// tie-break among equals is deterministic (canonical scan order).  Simple
// graphs only.
std::optional<ForbiddenWitness> find_forbidden_subgraph(const FiniteGraph& g);

// Checks that the embedding maps every diagram edge onto a host edge and
// repeats no vertex.
bool witness_is_valid(const FiniteGraph& host, const ForbiddenWitness& w);

enum class NormClass { IsRay, IsDInfinity, IsLine, NormExceeds2 };

struct Classification {
  NormClass result = NormClass::IsRay;
  std::optional<ForbiddenWitness> witness;
  int radius = 0;  // ball radius around the origin where the witness lives
};

// Decides whether the family's adjacency norm exceeds 2.  Witness-free
// families are recognised structurally; the rest are scanned by growing
// balls around the origin until a witness appears.  Finite imports are
// rejected (FiniteInput) - their norm is a plain eigenvalue computation.
Classification classify_norm_le_2(const GraphFamily& family, long long budget = 1'000'000);

}  // namespace cospectra
