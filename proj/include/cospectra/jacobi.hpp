#pragma once

#include <vector>

#include "cospectra/family.hpp"
#include "cospectra/measure.hpp"
#include "cospectra/rationals.hpp"

namespace cospectra {

// Half-infinite symmetric tridiagonal matrix with zero diagonal.  Off-
// diagonal entry i (between rows i and i+1) is scale * sqrt(sq(i)), where sq
// is an eventually periodic sequence of positive rationals kept exact, so
// moment computations stay in rational arithmetic.
struct JacobiSpec {
  std::vector<Rational> sq_prefix;
  std::vector<Rational> sq_period;  // never empty
  Rational scale = 1;

  JacobiSpec();
  JacobiSpec(std::vector<Rational> prefix, std::vector<Rational> period, Rational scale_ = 1);

  const Rational& sq_at(long long i) const;
  double entry(long long i) const;

  // Entries (scale * a_n, scale * a_{n+1}, ...).
  JacobiSpec tail(long long n) const;

  // True when both specs describe the same operator entry by entry (scale is
  // folded into the squared entries and the periodic form is canonicalised).
  bool same_operator(const JacobiSpec& other) const;
};

JacobiSpec free_jacobi();                            // all entries 1
JacobiSpec jacobi_a(const Rational& a_squared);      // first entry a, rest 1
JacobiSpec jacobi_from_branching(const BranchingSeq& b, long long offset);
JacobiSpec scaled(JacobiSpec j, const Rational& k);  // k > 0

// Leading n x n principal block; off holds the n-1 off-diagonal entries.
struct Tridiagonal {
  std::vector<double> off;
  int size() const { return (int)off.size() + 1; }
};

Tridiagonal truncate(const JacobiSpec& j, int n);

struct EigenSystem {
  std::vector<double> eigenvalues;       // ascending
  std::vector<double> first_components;  // squared first eigenvector entries
};

// Sturm-sequence bisection on the Gershgorin interval; deterministic, each
// eigenvalue bracketed to width tol.  first_components sum to 1 (they are
// the Gauss weights of the truncated operator).
EigenSystem eigen(const Tridiagonal& t, double tol = 1e-12);
std::vector<double> tridiagonal_eigenvalues(const Tridiagonal& t, double tol = 1e-12);
double tridiagonal_top(const Tridiagonal& t, double tol = 1e-12);
double tridiagonal_bottom(const Tridiagonal& t, double tol = 1e-12);

// n-point Gauss rule of the spectral measure at the first basis vector:
// nodes are the truncation eigenvalues, weights the squared first components.
// Matches the exact moments up to order 2n-1.
SpectralMeasure quadrature_measure(const JacobiSpec& j, int n, double tol = 1e-12);

// Exact moments <J^k e0, e0> for k = 0..up_to via the rational transfer
// recurrence (no eigenvalues involved).
std::vector<Rational> jacobi_moments(const JacobiSpec& j, int up_to);

// Point spectrum of the operator with first entry a and all later entries 1:
// empty for 0 < a <= sqrt(2), otherwise the simple pair +-a^2/sqrt(a^2-1).
std::vector<double> point_spectrum_ja(double a);

// CSV rows "index,eigenvalue,weight" for the truncation eigensystem.
void export_eigensystem_csv(const EigenSystem& es, std::ostream& out);

// Compact CLI syntax: "free", "a2:3/2" (squared first entry), "branching:3|2"
// or "branching:2,3@1" (branching sequence, optional offset), all optionally
// wrapped as "K*SPEC" for a rational scale factor K.
JacobiSpec parse_jacobi(const std::string& text);

}  // namespace cospectra
