#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cospectra/errors.hpp"
#include "cospectra/family.hpp"
#include "cospectra/rationals.hpp"

namespace cospectra {

// Vertex keys, one flavour per family:
//   Ray/Line/Finite  -> integer (Ray: n >= 0, Finite: position)
//   Lattice          -> integer coordinate vector of length d
//   trees            -> path from the root, one child index per level
//   DInfinity        -> integer n >= 0, plus the doubled origin 0'
struct DinfKey {
  bool prime = false;
  long long n = 0;
  friend bool operator==(const DinfKey&, const DinfKey&) = default;
  friend bool operator<(const DinfKey& a, const DinfKey& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.prime && !b.prime;  // 0' sorts before 0
  }
};

using TreePath = std::vector<int>;
using VertexKey = std::variant<long long, std::vector<long long>, TreePath, DinfKey>;

std::string render_key(const VertexKey& key);
// Inverse of render_key for the given family ("" or "root" is the tree root).
VertexKey parse_key(const GraphFamily& family, const std::string& text);
VertexKey origin_key(const GraphFamily& family);

// Finite symmetric graph held as compressed neighbour lists with per-edge
// multiplicities.  Loops and parallel edges are only allowed when multi is
// set (Schreier graphs); a loop of multiplicity m contributes m to both the
// degree and the diagonal of the adjacency matrix.
struct FiniteGraph {
  std::vector<std::vector<std::pair<int, int>>> adj;  // sorted (neighbour, multiplicity)
  std::vector<VertexKey> labels;                      // optional, position -> key
  std::vector<int> level;                             // optional BFS level (balls)
  std::vector<char> boundary;                         // 1 = truncated w.r.t. the family
  bool multi = false;

  FiniteGraph() = default;
  explicit FiniteGraph(int n, bool multi_ = false) : adj((std::size_t)n), multi(multi_) {}

  int size() const { return (int)adj.size(); }
  void add_edge(int u, int v, int m = 1);
  int multiplicity(int u, int v) const;
  int degree(int v) const;
  bool connected() const;
};

// y = A x with exact arithmetic when T is an exact type.
template <class T>
std::vector<T> adjacency_apply(const FiniteGraph& g, const std::vector<T>& x) {
  if ((int)x.size() != g.size())
    throw DimensionMismatch("adjacency_apply: vector length " + std::to_string(x.size()) +
                            " != vertex count " + std::to_string(g.size()));
  std::vector<T> y((std::size_t)g.size(), T(0));
  for (int v = 0; v < g.size(); ++v)
    for (auto [u, m] : g.adj[(std::size_t)v]) y[(std::size_t)v] += T(m) * x[(std::size_t)u];
  return y;
}

// Sorted neighbour keys of a vertex in the infinite family.
std::vector<VertexKey> neighbors(const GraphFamily& family, const VertexKey& key);

// Metric ball of the given radius.  Positions are assigned level by level in
// canonical key order, so position 0 is the centre.  Throws SizeLimitExceeded
// once the vertex count passes the budget.
FiniteGraph ball(const GraphFamily& family, const VertexKey& center, int radius,
                 long long budget = 1'000'000);

// Number of closed walks of length n based at the key; works on the ball of
// radius ceil(n/2) and counts exactly.
WalkCount closed_walk_count(const GraphFamily& family, const VertexKey& key, int n,
                            long long budget = 1'000'000);

// Edge-list text: "u v [multiplicity]" per line, 0-indexed, '#' comments,
// loops as "u u m".  A "# vertices N" header preserves isolated vertices.
void export_edge_list(const FiniteGraph& g, std::ostream& out);
FiniteGraph import_edge_list(std::istream& in, bool multi = false);

}  // namespace cospectra
