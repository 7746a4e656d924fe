#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cospectra/errors.hpp"

namespace cospectra {

struct FiniteGraph;

// Branching sequence of a spherically symmetric rooted tree: every vertex at
// depth r has d_r children.  Stored as a finite prefix followed by a period
// that repeats forever, so d_r is defined for all r >= 0.  Entries are >= 2.
struct BranchingSeq {
  std::vector<int> prefix;
  std::vector<int> period;

  BranchingSeq() : period{2} {}
  BranchingSeq(std::vector<int> pre, std::vector<int> per);

  int at(long long r) const;

  // The sequence (d_n, d_{n+1}, ...).
  BranchingSeq tail(long long n) const;

  // Primitive period and shortest prefix; two representations describe the
  // same sequence iff their canonical forms are identical.
  BranchingSeq canonical() const;
  bool same_sequence(const BranchingSeq& other) const;

  bool operator==(const BranchingSeq& other) const = default;
};

struct GraphFamily {
  enum class Kind {
    Ray,          // half-line 0 - 1 - 2 - ...
    Line,         // two-sided integer line
    DInfinity,    // half-line with a doubled origin 0, 0'
    Lattice,      // Z^d with nearest-neighbour edges
    RootedTree,   // rooted tree, every vertex has d children
    RegularTree,  // unrooted d-regular tree
    Ssrt,         // spherically symmetric rooted tree
    Finite,       // imported finite graph
  };

  Kind kind = Kind::Ray;
  int degree = 0;  // Lattice dimension or tree parameter d
  BranchingSeq branching;
  std::shared_ptr<const FiniteGraph> finite;

  static GraphFamily ray();
  static GraphFamily line();
  static GraphFamily dinfinity();
  static GraphFamily lattice(int d);       // d >= 1
  static GraphFamily rooted_tree(int d);   // d >= 2
  static GraphFamily regular_tree(int d);  // d >= 3
  static GraphFamily ssrt(BranchingSeq b);
  static GraphFamily finite_graph(FiniteGraph g);
};

// Largest vertex degree in the family.
int max_degree(const GraphFamily& family);

// Branching sequence of the spherically symmetric families; InvalidParameter
// for anything that is not such a tree.
BranchingSeq branching_of(const GraphFamily& family);

// All p cyclic shifts of a purely periodic branching sequence (prefix must be
// empty); rotation k starts the period at entry k.
std::vector<BranchingSeq> rotations(const BranchingSeq& seq);

// JSON descriptor {"family": ..., "params": {...}} and its inverse.
std::string family_to_json(const GraphFamily& family);
GraphFamily family_from_json(const std::string& text);

// Compact CLI syntax: "ray", "lattice:2", "rootedtree:3", "tree:4",
// "ssrt:2,3" (period), "ssrt:3|2,2" (prefix | period).
GraphFamily parse_family(const std::string& text);
std::string family_name(const GraphFamily& family);

}  // namespace cospectra
