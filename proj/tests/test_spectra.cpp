#include "doctest.h"

#include "cospectra/spectra.hpp"

#include <cmath>
#include <sstream>

using namespace cospectra;

TEST_CASE("catalog intervals and norms") {
  CHECK(catalog_norm(parse_family("ray")) == 2.0);
  CHECK(catalog_norm(parse_family("line")) == 2.0);
  CHECK(catalog_norm(parse_family("dinfinity")) == 2.0);
  CHECK(catalog_norm(parse_family("lattice:3")) == 6.0);
  CHECK(catalog_norm(parse_family("rootedtree:4")) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(catalog_norm(parse_family("tree:5")) == doctest::Approx(4.0).epsilon(1e-15));
  const MarkedSpectrum lat = marked_spectrum(parse_family("lattice:2"));
  CHECK(lat.lo == -4.0);
  CHECK(lat.hi == 4.0);
  CHECK(lat.atoms.empty());
  CHECK(lat.multiplicity.kind == MultiplicityKind::UniformInfinite);
}

TEST_CASE("marked spectrum distinguishes the three norm-2 families") {
  const MarkedSpectrum ray = marked_spectrum(parse_family("ray"));
  const MarkedSpectrum line = marked_spectrum(parse_family("line"));
  const MarkedSpectrum dinf = marked_spectrum(parse_family("dinfinity"));
  CHECK(ray.multiplicity == Multiplicity{MultiplicityKind::One, 1});
  CHECK(line.multiplicity == Multiplicity{MultiplicityKind::Uniform, 2});
  CHECK(dinf.multiplicity == Multiplicity{MultiplicityKind::One, 1});
  CHECK(ray.atoms.empty());
  CHECK(line.atoms.empty());
  REQUIRE(dinf.atoms.size() == 1);
  CHECK(dinf.atoms[0] == 0.0);
  CHECK(ray.measure_class == MeasureClassKind::LebesgueOnSpectrum);
  CHECK(dinf.measure_class == MeasureClassKind::LebesguePlusAtoms);
}

TEST_CASE("branching families fold onto the catalog") {
  const MarkedSpectrum a = marked_spectrum(parse_family("ssrt:3"));
  const MarkedSpectrum b = marked_spectrum(parse_family("rootedtree:3"));
  CHECK(a.lo == b.lo);
  CHECK(a.hi == b.hi);
  CHECK(a.multiplicity == b.multiplicity);
  // tree:3 written as branching prefix 3 then constant 2.
  const MarkedSpectrum c = marked_spectrum(parse_family("ssrt:3|2,2"));
  const MarkedSpectrum d = marked_spectrum(parse_family("tree:3"));
  CHECK(c.hi == doctest::Approx(d.hi).epsilon(1e-15));
  // A branching outside the catalog is marked as derived.
  const MarkedSpectrum e = marked_spectrum(parse_family("ssrt:2,3"));
  CHECK(e.provenance.rfind("derived", 0) == 0);
  CHECK(e.hi > 2.0);
}

TEST_CASE("default norm schedules extrapolate to the catalog value") {
  struct Row {
    const char* family;
    double target;
    double tol;
  };
  for (const Row& row : {Row{"ray", 2.0, 1e-6}, Row{"line", 2.0, 1e-6},
                         Row{"dinfinity", 2.0, 1e-6}, Row{"lattice:2", 4.0, 1e-3},
                         Row{"rootedtree:2", 2.0 * std::sqrt(2.0), 1e-3},
                         Row{"tree:3", 2.0 * std::sqrt(2.0), 1e-3}}) {
    CAPTURE(row.family);
    const NormEstimate est = norm_estimate(parse_family(row.family));
    REQUIRE(est.catalog.has_value());
    CHECK(*est.catalog == doctest::Approx(row.target).epsilon(1e-12));
    CHECK(std::abs(est.extrapolated - row.target) < row.tol);
    // Lower bounds are genuine lower bounds, nondecreasing in the radius.
    for (std::size_t i = 0; i < est.lower_bounds.size(); ++i) {
      CHECK(est.lower_bounds[i] <= row.target + 1e-9);
      if (i) CHECK(est.lower_bounds[i] >= est.lower_bounds[i - 1] - 1e-12);
    }
  }
}

TEST_CASE("norm_estimate validates its radius schedule") {
  CHECK_THROWS_AS(norm_estimate(parse_family("ray"), {5, 5}), InvalidParameter);
  CHECK_THROWS_AS(norm_estimate(parse_family("ray"), {0, 3}), InvalidParameter);
  const NormEstimate est = norm_estimate(parse_family("ray"), {3, 6});
  std::ostringstream out;
  export_norm_csv(est, out);
  CHECK(out.str().rfind("radius,lower_bound\n3,", 0) == 0);
}

TEST_CASE("lattice(1) is the line") {
  const NormEstimate est = norm_estimate(parse_family("lattice:1"));
  REQUIRE(est.catalog.has_value());
  CHECK(*est.catalog == 2.0);
  const MarkedSpectrum m = marked_spectrum(parse_family("lattice:1"));
  CHECK(m.multiplicity == Multiplicity{MultiplicityKind::Uniform, 2});
}

TEST_CASE("cospectral pairs across families") {
  CHECK(are_cospectral(parse_family("lattice:2"), parse_family("rootedtree:4")).verdict ==
        Verdict::Cospectral);
  CHECK(are_cospectral(parse_family("lattice:2"), parse_family("tree:5")).verdict ==
        Verdict::Cospectral);
  const CospectralResult rl = are_cospectral(parse_family("ray"), parse_family("line"));
  CHECK(rl.verdict == Verdict::NotCospectral);
  CHECK(rl.reason.find("multiplicity") != std::string::npos);
  const CospectralResult rd = are_cospectral(parse_family("ray"), parse_family("dinfinity"));
  CHECK(rd.verdict == Verdict::NotCospectral);
  CHECK(rd.reason.find("measure class") != std::string::npos);
  const CospectralResult mismatch =
      are_cospectral(parse_family("lattice:2"), parse_family("rootedtree:3"));
  CHECK(mismatch.verdict == Verdict::NotCospectral);
  CHECK(mismatch.reason.find("spectrum") != std::string::npos);
}

TEST_CASE("cospectral evidence is attached") {
  const CospectralResult r = are_cospectral(parse_family("ray"), parse_family("line"));
  CHECK(r.endpoint_ok);
  CHECK(r.positivity_left);
  CHECK(r.positivity_right);
  CHECK(std::abs(r.endpoint_gap) < 1e-3);
  const std::string json = cospectral_json(r);
  CHECK(json.find("\"verdict\"") != std::string::npos);
  CHECK(json.find("\"provenance\"") != std::string::npos);
}

TEST_CASE("cospectral rejects uncataloged input") {
  CHECK_THROWS_AS(are_cospectral(parse_family("ssrt:2,3"), parse_family("ray")), NotCataloged);
}

TEST_CASE("two-ended checks: exact kernel and strict sections") {
  const DinfinityReport r = dinfinity_checks();
  CHECK(r.kernel_ok);
  CHECK(r.all_inside);
  CHECK(r.monotone_ok);
  REQUIRE(r.margins.size() == 17);  // n = 4..20
  // Section top eigenvalue of D_n is 2 cos(pi / (2n - 2)).
  for (int n = 4; n <= 20; ++n) {
    const double margin = 2.0 - 2.0 * std::cos(M_PI / (2.0 * n - 2.0));
    CHECK(r.margins[(std::size_t)(n - 4)] == doctest::Approx(margin).epsilon(1e-9));
  }
}

TEST_CASE("rotation comparison: trivial and mixed periods") {
  const RotationReport one = compare_rotations(BranchingSeq({}, {2}));
  CHECK(one.rotations.size() == 1);
  CHECK(one.ok());
  const RotationReport two = compare_rotations(BranchingSeq({}, {2, 3}), 128);
  CHECK(two.rotations.size() == 2);
  CHECK(two.components_match);
  CHECK(two.norm_ok);
  CHECK(two.support_ok);
  CHECK_THROWS_AS(compare_rotations(BranchingSeq({3}, {2})), NonPeriodic);
}

TEST_CASE("catalog measures have the advertised support") {
  RunConfig cfg;
  const SpectralMeasure ray = catalog_measure(parse_family("ray"), cfg);
  CHECK(support(ray).second == doctest::Approx(2.0).epsilon(1e-12));
  const SpectralMeasure lat = catalog_measure(parse_family("lattice:2"), cfg);
  CHECK(support(lat).second == doctest::Approx(4.0).epsilon(1e-5));
  const SpectralMeasure rt = catalog_measure(parse_family("rootedtree:3"), cfg);
  CHECK(support(rt).second == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-12));
}
