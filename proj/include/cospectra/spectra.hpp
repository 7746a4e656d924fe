#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cospectra/config.hpp"
#include "cospectra/family.hpp"
#include "cospectra/measure.hpp"

namespace cospectra {

enum class MeasureClassKind { LebesgueOnSpectrum, LebesguePlusAtoms };
enum class MultiplicityKind { One, Uniform, UniformInfinite };

struct Multiplicity {
  MultiplicityKind kind = MultiplicityKind::One;
  int n = 1;  // only read for Uniform
  std::string render() const;
  friend bool operator==(const Multiplicity& a, const Multiplicity& b) {
    return a.kind == b.kind && (a.kind != MultiplicityKind::Uniform || a.n == b.n);
  }
};

// The unitary-equivalence invariant: spectrum interval (with any point
// spectrum listed), the equivalence class of the scalar spectral measure, and
// the multiplicity function.  provenance says where the entry comes from
// ("catalog: ..." for the fixed families, "derived: ..." for branching
// sequences outside it).
struct MarkedSpectrum {
  double lo = 0.0, hi = 0.0;
  std::vector<double> atoms;
  MeasureClassKind measure_class = MeasureClassKind::LebesgueOnSpectrum;
  Multiplicity multiplicity;
  std::string provenance;
};

std::string render_interval(double lo, double hi);
std::string render_measure_class(const MarkedSpectrum& m);

// Catalog entries; rejects finite imports (NotCataloged).  Branching-driven
// tree families that match a rooted/regular tree are folded onto the catalog;
// other periodic branchings get derived (uncertified) data.
MarkedSpectrum marked_spectrum(const GraphFamily& family);

// Exact operator norm of the cataloged families; NotCataloged otherwise.
double catalog_norm(const GraphFamily& family);

// A concrete representative of the family's scalar measure class: semicircle
// for rooted trees and the half-line, arcsine for the line (and the
// absolutely continuous part of the two-ended ray with tail), grid
// convolutions of arcsine for lattices, a rescaled semicircle (class
// representative only) for regular trees.
SpectralMeasure catalog_measure(const GraphFamily& family, const RunConfig& cfg = {});

struct NormEstimate {
  std::vector<int> radii;
  std::vector<double> lower_bounds;     // ball top eigenvalues, nondecreasing
  double extrapolated = 0.0;            // Richardson endpoint from the last two
  std::optional<double> catalog;        // exact norm when cataloged
};

std::vector<int> default_radii(const GraphFamily& family);

// Top adjacency eigenvalue of the radius-r ball for each radius.  Balls of
// branching-driven trees are evaluated through their orthogonal Jacobi
// sections (exact, no materialization); everything else materializes the
// ball.  Radii must be strictly increasing; empty means the family default.
NormEstimate norm_estimate(const GraphFamily& family, std::vector<int> radii = {},
                           long long budget = 1'000'000);

// CSV rows "radius,lower_bound".
void export_norm_csv(const NormEstimate& est, std::ostream& out);

enum class Verdict { Cospectral, NotCospectral };

struct CospectralResult {
  Verdict verdict = Verdict::NotCospectral;
  std::string reason;  // first differing component; empty when cospectral
  MarkedSpectrum left, right;
  // numeric evidence (attached, never the verdict's source)
  NormEstimate norm_left, norm_right;
  double endpoint_gap = 0.0;
  bool endpoint_ok = false;  // |gap| <= 1e-3
  bool positivity_left = false, positivity_right = false;
};

// Compares marked spectra componentwise (interval, measure class, atom list,
// multiplicity) over the crisp catalog; NotCataloged for finite imports and
// non-catalog branchings.
CospectralResult are_cospectral(const GraphFamily& a, const GraphFamily& b,
                                long long budget = 1'000'000);

std::string cospectral_json(const CospectralResult& r);

struct DinfinityReport {
  bool kernel_ok = false;   // A xi = 0 exactly (integers) on every tested ball
  int kernel_radius_lo = 2, kernel_radius_hi = 12;
  std::vector<double> margins;  // n = 4..20: 2 - max |eigenvalue| of D_n
  bool all_inside = false;      // every margin > 0
  bool monotone_ok = false;     // D_n top eigenvalue increases with n
};

// The two computable facts behind the two-ended catalog entry: the explicit
// kernel vector (value +1 at 0, -1 at 0', else 0) and the finite sections
// staying strictly inside (-2, 2).
DinfinityReport dinfinity_checks();

std::string dinfinity_report_json(const DinfinityReport& r);

struct RotationReport {
  std::vector<BranchingSeq> rotations;
  bool components_match = false;  // distinct tail Jacobi specs coincide setwise
  std::vector<double> norm_endpoints;
  double norm_max_gap = 0.0;
  bool norm_ok = false;  // pairwise within 1e-3
  std::vector<std::pair<double, double>> support_endpoints;
  double support_max_gap = 0.0;
  bool support_ok = false;  // endpoint agreement within 1e-3
  bool ok() const { return components_match && norm_ok && support_ok; }
};

// Compares the rotations of a purely periodic branching sequence: the trees
// share their component sets beyond one period, and the numeric endpoints
// (norm schedule, quadrature support) agree.  NonPeriodic unless the prefix
// is empty.
RotationReport compare_rotations(const BranchingSeq& seq, int quad_nodes = 256);

std::string rotation_report_json(const RotationReport& r);

}  // namespace cospectra
