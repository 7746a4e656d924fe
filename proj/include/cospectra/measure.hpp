#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "cospectra/config.hpp"
#include "cospectra/errors.hpp"
#include "cospectra/rationals.hpp"

namespace cospectra {

// A probability measure on the real line in one of four representations:
//   Density  - closed form (semicircle with parameter d, or arcsine)
//   Grid     - uniform cells [lo + i*step, lo + (i+1)*step) with the average
//              density per cell; cell masses come from the exact distribution
//              function, so endpoint cells absorb inverse-sqrt singularities
//              analytically
//   Moments  - exact rational moment list, moments[0] == 1
//   Discrete - finite atom list (quadrature output)
// Moments mode is the source of truth for exact identities; Grid mode backs
// positivity checks, plots and numeric convolution.
struct SpectralMeasure {
  enum class Rep { Density, Grid, Moments, Discrete };
  enum class DensityKind { Semicircle, Arcsine };

  Rep rep = Rep::Density;
  DensityKind kind = DensityKind::Semicircle;
  double param = 1.0;  // Semicircle: d, support [-2 sqrt d, 2 sqrt d]; Arcsine: half-width

  double lo = 0.0, step = 0.0;
  std::vector<double> values;

  std::vector<Rational> moments;

  std::vector<double> nodes, weights;
};

SpectralMeasure semicircle(double d);
SpectralMeasure arcsine();  // half-width 2
SpectralMeasure measure_from_moments(std::vector<Rational> moments);
SpectralMeasure measure_from_discrete(std::vector<double> nodes, std::vector<double> weights);

// Exact moment lists of the closed forms: semicircle d -> d^m Catalan(m),
// arcsine (half-width 2) -> C(2m, m); odd moments vanish.
std::vector<Rational> semicircle_moments(int up_to, const Rational& d);
std::vector<Rational> arcsine_moments(int up_to);

double density_at(const SpectralMeasure& m, double x);
double cdf_at(const SpectralMeasure& m, double x);
std::pair<double, double> support(const SpectralMeasure& m);

// Pushforward under x -> k x (k > 0).  The Rational overload is exact in
// Moments mode (moment n picks up k^n); the double overload covers the
// density, grid and discrete representations.
SpectralMeasure rescale_measure(const SpectralMeasure& m, double k);
SpectralMeasure rescale_measure(const SpectralMeasure& m, const Rational& k);

// Density -> Grid conversion with exact cell masses; Grid passes through.
SpectralMeasure to_grid(const SpectralMeasure& m, double step);

// Additive convolution.  Moments x Moments is exact (binomial formula, length
// min of the inputs); Discrete x Discrete is exact; grid-convertible pairs
// use step-matched discrete convolution with Minkowski-sum support.  A single
// atom at 0 acts as the identity.  Everything else is RepresentationMismatch.
SpectralMeasure convolve(const SpectralMeasure& a, const SpectralMeasure& b,
                         const RunConfig& cfg = {});

// Moments as doubles.  Moments mode reads the stored list; Discrete sums
// directly; Density converts to a grid at cfg.grid_step; Grid integrates
// x^k against the cumulative mass function (summation by parts + composite
// Simpson), which keeps sqrt-edge densities accurate.
std::vector<double> moments_of(const SpectralMeasure& m, int up_to, const RunConfig& cfg = {});

// Exact moments; Moments representation only.
std::vector<Rational> moments_exact(const SpectralMeasure& m, int up_to);

// Samples the density on the support shrunk by 1% of the half-width at each
// end; reports the first non-positive sample.  Discrete measures check atom
// weights instead.
struct Positivity {
  bool all_positive = true;
  double fails_at = 0.0;
};
Positivity positivity_on_interior(const SpectralMeasure& m, int samples);

// CSV: densities/grids as "x,value" (cell midpoints), discrete as
// "x,value" atoms, moments as "order,numerator,denominator".
void export_measure_csv(const SpectralMeasure& m, std::ostream& out, double grid_step = 1e-3);

}  // namespace cospectra
