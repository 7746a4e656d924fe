#include "doctest.h"

#include "cospectra/measure.hpp"

#include <cmath>
#include <sstream>

using namespace cospectra;

namespace {

// Oracle: moment of a convolution by the binomial expansion of (X + Y)^k.
Rational conv_moment_oracle(const std::vector<Rational>& a, const std::vector<Rational>& b,
                            int k) {
  Rational s = 0;
  for (int j = 0; j <= k; ++j) s += Rational(binomial((unsigned)k, (unsigned)j)) * a[j] * b[k - j];
  return s;
}

}  // namespace

TEST_CASE("closed-form moments: semicircle and arcsine") {
  const auto sc = semicircle_moments(12, Rational(1));
  const auto sc3 = semicircle_moments(12, Rational(3));
  const auto as = arcsine_moments(12);
  Rational three_pow = 1;
  for (int m = 0; m <= 6; ++m, three_pow *= 3) {
    CHECK(sc[2 * m] == Rational(catalan((unsigned)m)));
    CHECK(sc3[2 * m] == Rational(catalan((unsigned)m)) * three_pow);
    CHECK(as[2 * m] == Rational(binomial(2 * (unsigned)m, (unsigned)m)));
    if (2 * m + 1 <= 12) {
      CHECK(sc[2 * m + 1] == 0);
      CHECK(as[2 * m + 1] == 0);
    }
  }
}

TEST_CASE("density integrates to one and matches closed-form support") {
  for (double d : {1.0, 2.0, 3.0}) {
    const SpectralMeasure m = semicircle(d);
    const auto [lo, hi] = support(m);
    CHECK(lo == doctest::Approx(-2.0 * std::sqrt(d)).epsilon(1e-14));
    CHECK(hi == doctest::Approx(2.0 * std::sqrt(d)).epsilon(1e-14));
    CHECK(cdf_at(m, hi + 1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cdf_at(m, 0.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(density_at(m, 0.0) == doctest::Approx(1.0 / (M_PI * std::sqrt(d))).epsilon(1e-12));
  }
  const SpectralMeasure a = arcsine();
  CHECK(cdf_at(a, 0.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(density_at(a, 0.0) == doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-12));
  CHECK(support(a).second == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("grid conversion preserves mass and moments") {
  for (const SpectralMeasure& m : {semicircle(1), arcsine()}) {
    const SpectralMeasure g = to_grid(m, 1e-3);
    CHECK(g.rep == SpectralMeasure::Rep::Grid);
    double mass = 0;
    for (double v : g.values) mass += v * g.step;
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
  }
  // Semicircle grid moments reach the exact Catalan values at a fine step.
  {
    RunConfig cfg;
    cfg.grid_step = 1e-4;
    const SpectralMeasure g = to_grid(semicircle(1), 1e-4);
    const auto exact = semicircle_moments(12, Rational(1));
    const auto approx = moments_of(g, 12, cfg);
    for (int k = 0; k <= 12; ++k)
      CHECK(approx[k] == doctest::Approx(to_double(exact[k])).epsilon(1e-6));
  }
  // The arcsine endpoint singularities cost a little accuracy at step 1e-3.
  {
    const SpectralMeasure g = to_grid(arcsine(), 1e-3);
    const auto exact = arcsine_moments(8);
    const auto approx = moments_of(g, 8);
    for (int k = 0; k <= 8; ++k)
      CHECK(approx[k] == doctest::Approx(to_double(exact[k])).epsilon(1e-4));
  }
}

TEST_CASE("moment-mode convolution is the exact binomial formula") {
  const auto a = semicircle_moments(10, Rational(1));
  const auto b = arcsine_moments(10);
  const SpectralMeasure conv =
      convolve(measure_from_moments(a), measure_from_moments(b));
  REQUIRE(conv.rep == SpectralMeasure::Rep::Moments);
  const auto got = moments_exact(conv, 10);
  for (int k = 0; k <= 10; ++k) CHECK(got[k] == conv_moment_oracle(a, b, k));
}

TEST_CASE("lattice moments via repeated convolution match walk combinatorics") {
  // Sum of two independent arcsine variables: moment 2m is sum_j C(2m,2j) C(2j,j) C(2m-2j,m-j).
  const auto as = arcsine_moments(16);
  SpectralMeasure two = convolve(measure_from_moments(as), measure_from_moments(as));
  const auto got = moments_exact(two, 16);
  for (int m = 0; m <= 8; ++m) {
    CHECK(got[2 * m] == conv_moment_oracle(as, as, 2 * m));
    // Also equals C(2m, m)^2 (closed walks on the square lattice).
    CHECK(got[2 * m] == Rational(binomial(2 * (unsigned)m, (unsigned)m) *
                                 binomial(2 * (unsigned)m, (unsigned)m)));
  }
}

TEST_CASE("grid convolution approximates the exact moments") {
  RunConfig cfg;
  cfg.grid_step = 2e-3;
  const SpectralMeasure conv = convolve(arcsine(), arcsine(), cfg);
  const auto approx = moments_of(conv, 6, cfg);
  const auto as = arcsine_moments(6);
  for (int k = 0; k <= 6; ++k)
    CHECK(approx[k] ==
          doctest::Approx(to_double(conv_moment_oracle(as, as, k))).epsilon(2e-4));
  const auto [lo, hi] = support(conv);
  CHECK(lo == doctest::Approx(-4.0).epsilon(1e-6));
  CHECK(hi == doctest::Approx(4.0).epsilon(1e-6));
}

TEST_CASE("rescale acts on moments exactly and on support numerically") {
  const SpectralMeasure m = measure_from_moments(semicircle_moments(6, Rational(1)));
  const SpectralMeasure r = rescale_measure(m, Rational(3, 2));
  const auto got = moments_exact(r, 6);
  const auto base = semicircle_moments(6, Rational(1));
  Rational pw = 1;
  for (int k = 0; k <= 6; ++k) {
    CHECK(got[k] == base[k] * pw);
    pw *= Rational(3, 2);
  }
  const SpectralMeasure sd = rescale_measure(semicircle(1), 2.0);
  CHECK(support(sd).second == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(cdf_at(sd, 0.0) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("discrete convolution and identity atom") {
  const SpectralMeasure a = measure_from_discrete({-1, 1}, {0.5, 0.5});
  const SpectralMeasure conv = convolve(a, a);
  REQUIRE(conv.rep == SpectralMeasure::Rep::Discrete);
  REQUIRE(conv.nodes.size() == 3);
  CHECK(conv.nodes[1] == doctest::Approx(0.0));
  CHECK(conv.weights[1] == doctest::Approx(0.5));
  const SpectralMeasure id = measure_from_discrete({0}, {1});
  const SpectralMeasure same = convolve(a, id);
  REQUIRE(same.nodes.size() == 2);
  CHECK(same.nodes[0] == doctest::Approx(-1.0));
}

TEST_CASE("positivity sampling") {
  CHECK(positivity_on_interior(semicircle(2), 500).all_positive);
  CHECK(positivity_on_interior(arcsine(), 500).all_positive);
  const Positivity bad = positivity_on_interior(measure_from_discrete({0, 1}, {1.5, -0.5}), 10);
  CHECK_FALSE(bad.all_positive);
  CHECK(bad.fails_at == doctest::Approx(1.0));
}

TEST_CASE("csv export formats") {
  std::ostringstream mom;
  export_measure_csv(measure_from_moments(arcsine_moments(2)), mom);
  CHECK(mom.str() == "order,numerator,denominator\n0,1,1\n1,0,1\n2,2,1\n");
  std::ostringstream disc;
  export_measure_csv(measure_from_discrete({0.5}, {1.0}), disc);
  CHECK(disc.str() == "x,value\n0.5,1\n");
}
