#include "cospectra/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"

#include "cospectra/classify.hpp"
#include "cospectra/errors.hpp"
#include "cospectra/format.hpp"
#include "cospectra/graph.hpp"
#include "cospectra/jacobi.hpp"
#include "cospectra/linalg.hpp"
#include "cospectra/ssrt.hpp"

namespace cospectra {

namespace {

// Folds branching sequences that coincide with a cataloged tree onto the
// catalog entry, and the 1-dimensional lattice onto the line.
GraphFamily normalize_family(const GraphFamily& f) {
  if (f.kind == GraphFamily::Kind::Lattice && f.degree == 1) return GraphFamily::line();
  if (f.kind == GraphFamily::Kind::Ssrt) {
    const BranchingSeq b = f.branching.canonical();
    if (b.prefix.empty() && b.period.size() == 1) return GraphFamily::rooted_tree(b.period[0]);
    if (b.prefix.size() == 1 && b.period.size() == 1 && b.prefix[0] == b.period[0] + 1)
      return GraphFamily::regular_tree(b.prefix[0]);
    GraphFamily g = f;
    g.branching = b;
    return g;
  }
  return f;
}

}  // namespace

std::string Multiplicity::render() const {
  switch (kind) {
    case MultiplicityKind::One:
      return "1";
    case MultiplicityKind::Uniform:
      return std::to_string(n);
    case MultiplicityKind::UniformInfinite:
      return "infinite";
  }
  return "?";
}

std::string render_interval(double lo, double hi) {
  return "[" + format_double(lo) + ", " + format_double(hi) + "]";
}

std::string render_measure_class(const MarkedSpectrum& m) {
  if (m.measure_class == MeasureClassKind::LebesgueOnSpectrum) return "Lebesgue";
  std::string out = "Lebesgue plus atoms {";
  for (size_t i = 0; i < m.atoms.size(); ++i) {
    if (i) out += ", ";
    out += format_double(m.atoms[i]);
  }
  return out + "}";
}

MarkedSpectrum marked_spectrum(const GraphFamily& family) {
  const GraphFamily f = normalize_family(family);
  MarkedSpectrum m;
  switch (f.kind) {
    case GraphFamily::Kind::Ray:
      m.lo = -2.0;
      m.hi = 2.0;
      m.multiplicity = {MultiplicityKind::One, 1};
      m.provenance = "catalog: half-line adjacency is the free Jacobi operator, cyclic from the endpoint";
      return m;
    case GraphFamily::Kind::Line:
      m.lo = -2.0;
      m.hi = 2.0;
      m.multiplicity = {MultiplicityKind::Uniform, 2};
      m.provenance = "catalog: two-sided line, multiplicity 2 from the even/odd splitting";
      return m;
    case GraphFamily::Kind::DInfinity:
      m.lo = -2.0;
      m.hi = 2.0;
      m.atoms = {0.0};
      m.measure_class = MeasureClassKind::LebesguePlusAtoms;
      m.multiplicity = {MultiplicityKind::One, 1};
      m.provenance = "catalog: half-line with doubled endpoint; the difference vector at 0, 0' is in the kernel";
      return m;
    case GraphFamily::Kind::Lattice:
      m.lo = -2.0 * f.degree;
      m.hi = 2.0 * f.degree;
      m.multiplicity = {MultiplicityKind::UniformInfinite, 1};
      m.provenance = "catalog: d-fold sum of commuting line operators";
      return m;
    case GraphFamily::Kind::RootedTree:
      m.lo = -2.0 * std::sqrt(static_cast<double>(f.degree));
      m.hi = 2.0 * std::sqrt(static_cast<double>(f.degree));
      m.multiplicity = {MultiplicityKind::UniformInfinite, 1};
      m.provenance = "catalog: constant-branching decomposition into scaled free Jacobi components";
      return m;
    case GraphFamily::Kind::RegularTree:
      m.lo = -2.0 * std::sqrt(static_cast<double>(f.degree - 1));
      m.hi = 2.0 * std::sqrt(static_cast<double>(f.degree - 1));
      m.multiplicity = {MultiplicityKind::UniformInfinite, 1};
      m.provenance = "catalog: regular tree; all Jacobi components share the sqrt(d-1) tail";
      return m;
    case GraphFamily::Kind::Ssrt: {
      const NormEstimate est = norm_estimate(f);
      m.lo = -est.extrapolated;
      m.hi = est.extrapolated;
      m.multiplicity = {MultiplicityKind::UniformInfinite, 1};
      m.provenance =
          "derived: interval from extrapolated ball lower bounds; measure class and "
          "multiplicity are structural guesses, not certified";
      return m;
    }
    case GraphFamily::Kind::Finite:
      throw NotCataloged("finite graphs are not in the marked-spectrum catalog");
  }
  throw NotCataloged("unknown family kind");
}

double catalog_norm(const GraphFamily& family) {
  const GraphFamily f = normalize_family(family);
  switch (f.kind) {
    case GraphFamily::Kind::Ray:
    case GraphFamily::Kind::Line:
    case GraphFamily::Kind::DInfinity:
      return 2.0;
    case GraphFamily::Kind::Lattice:
      return 2.0 * f.degree;
    case GraphFamily::Kind::RootedTree:
      return 2.0 * std::sqrt(static_cast<double>(f.degree));
    case GraphFamily::Kind::RegularTree:
      return 2.0 * std::sqrt(static_cast<double>(f.degree - 1));
    default:
      throw NotCataloged("no exact norm outside the catalog");
  }
}

SpectralMeasure catalog_measure(const GraphFamily& family, const RunConfig& cfg) {
  const GraphFamily f = normalize_family(family);
  switch (f.kind) {
    case GraphFamily::Kind::Ray:
      return semicircle(1.0);
    case GraphFamily::Kind::Line:
    case GraphFamily::Kind::DInfinity:  // absolutely continuous part
      return arcsine();
    case GraphFamily::Kind::Lattice: {
      const SpectralMeasure g = to_grid(arcsine(), cfg.grid_step);
      SpectralMeasure acc = g;
      for (int i = 1; i < f.degree; ++i) acc = convolve(acc, g, cfg);
      return acc;
    }
    case GraphFamily::Kind::RootedTree:
      return semicircle(static_cast<double>(f.degree));
    case GraphFamily::Kind::RegularTree:
      // class representative only: any positive density on the interval
      return semicircle(static_cast<double>(f.degree - 1));
    case GraphFamily::Kind::Ssrt:
      return quadrature_measure(jacobi_from_branching(f.branching, 0), 512);
    case GraphFamily::Kind::Finite:
      throw NotCataloged("finite graphs are not in the measure catalog");
  }
  throw NotCataloged("unknown family kind");
}

std::vector<int> default_radii(const GraphFamily& family) {
  const GraphFamily f = normalize_family(family);
  switch (f.kind) {
    case GraphFamily::Kind::Ray:
    case GraphFamily::Kind::Line:
    case GraphFamily::Kind::DInfinity:
      return {10, 100, 1000};
    case GraphFamily::Kind::Lattice:
      if (f.degree == 2) return {5, 10, 20, 40};
      if (f.degree == 3) return {8, 16, 32, 64};
      return {2, 4, 8};
    case GraphFamily::Kind::RootedTree:
    case GraphFamily::Kind::RegularTree:
    case GraphFamily::Kind::Ssrt:
      return {4, 8, 16, 32, 64};
    case GraphFamily::Kind::Finite:
      throw NotCataloged("finite graphs have no radius schedule");
  }
  throw NotCataloged("unknown family kind");
}

namespace {

double ball_top(const GraphFamily& f, int r, long long budget) {
  switch (f.kind) {
    case GraphFamily::Kind::Ray:
      return tridiagonal_top(truncate(free_jacobi(), r + 1));
    case GraphFamily::Kind::Line:
      return tridiagonal_top(truncate(free_jacobi(), 2 * r + 1));
    case GraphFamily::Kind::RootedTree:
    case GraphFamily::Kind::RegularTree:
    case GraphFamily::Kind::Ssrt: {
      // The ball adjacency is orthogonally equivalent to the direct sum of
      // its truncated Jacobi sections, so the top over sections IS the ball
      // top eigenvalue - no materialization needed.
      const BranchingSeq b = branching_of(f);
      double best = 0.0;
      for (int n = 0; n <= r; ++n)
        best = std::max(best, tridiagonal_top(truncate(jacobi_from_branching(b, n), r - n + 1)));
      return best;
    }
    case GraphFamily::Kind::DInfinity:
    case GraphFamily::Kind::Lattice: {
      const FiniteGraph g = ball(f, origin_key(f), r, budget);
      return top_eigenvalue(g);
    }
    default:
      throw NotCataloged("norm estimation targets the infinite catalog");
  }
}

double extrapolation_shift(const GraphFamily& f) {
  // Ball tops behave like L - c/(r + delta)^2; delta is exact for the
  // path-shaped balls and a good model elsewhere.
  switch (f.kind) {
    case GraphFamily::Kind::Ray:
    case GraphFamily::Kind::RootedTree:
    case GraphFamily::Kind::RegularTree:
    case GraphFamily::Kind::Ssrt:
      return 2.0;
    default:
      return 1.0;
  }
}

}  // namespace

NormEstimate norm_estimate(const GraphFamily& family, std::vector<int> radii, long long budget) {
  const GraphFamily f = normalize_family(family);
  if (f.kind == GraphFamily::Kind::Finite)
    throw NotCataloged("norm estimation targets the infinite catalog; finite graphs have a direct top eigenvalue");
  if (radii.empty()) radii = default_radii(f);
  for (size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] < 1) throw InvalidParameter("radii must be >= 1");
    if (i > 0 && radii[i] <= radii[i - 1]) throw InvalidParameter("radii must be strictly increasing");
  }
  NormEstimate est;
  est.radii = radii;
  try {
    est.catalog = catalog_norm(f);
  } catch (const NotCataloged&) {
  }
  est.lower_bounds.reserve(radii.size());
  for (int r : radii) est.lower_bounds.push_back(ball_top(f, r, budget));
  if (radii.size() >= 2) {
    const double delta = extrapolation_shift(f);
    const size_t k = radii.size() - 1;
    const double t1 = 1.0 / ((radii[k - 1] + delta) * (radii[k - 1] + delta));
    const double t2 = 1.0 / ((radii[k] + delta) * (radii[k] + delta));
    const double b1 = est.lower_bounds[k - 1], b2 = est.lower_bounds[k];
    est.extrapolated = b2 + (b2 - b1) * t2 / (t1 - t2);
  } else {
    est.extrapolated = est.lower_bounds.back();
  }
  return est;
}

void export_norm_csv(const NormEstimate& est, std::ostream& out) {
  out << "radius,lower_bound\n";
  for (size_t i = 0; i < est.radii.size(); ++i)
    out << est.radii[i] << "," << format_double(est.lower_bounds[i]) << "\n";
}

CospectralResult are_cospectral(const GraphFamily& a0, const GraphFamily& b0, long long budget) {
  const GraphFamily a = normalize_family(a0), b = normalize_family(b0);
  for (const GraphFamily* f : {&a, &b}) {
    if (f->kind == GraphFamily::Kind::Finite)
      throw NotCataloged("finite graphs are not in the catalog");
    if (f->kind == GraphFamily::Kind::Ssrt)
      throw NotCataloged(
          "branching sequence outside the crisp catalog; cospectrality verdicts are theorem-backed only");
  }
  CospectralResult res;
  res.left = marked_spectrum(a);
  res.right = marked_spectrum(b);

  const double tol = 1e-12;
  const auto atoms_equal = [&] {
    if (res.left.atoms.size() != res.right.atoms.size()) return false;
    for (size_t i = 0; i < res.left.atoms.size(); ++i)
      if (std::abs(res.left.atoms[i] - res.right.atoms[i]) > tol) return false;
    return true;
  };
  if (std::abs(res.left.lo - res.right.lo) > tol || std::abs(res.left.hi - res.right.hi) > tol) {
    res.verdict = Verdict::NotCospectral;
    res.reason = "spectrum " + render_interval(res.left.lo, res.left.hi) + " ≠ " +
                 render_interval(res.right.lo, res.right.hi);
  } else if (res.left.measure_class != res.right.measure_class || !atoms_equal()) {
    res.verdict = Verdict::NotCospectral;
    res.reason =
        "measure class " + render_measure_class(res.left) + " ≠ " + render_measure_class(res.right);
  } else if (!(res.left.multiplicity == res.right.multiplicity)) {
    res.verdict = Verdict::NotCospectral;
    res.reason = "multiplicity " + res.left.multiplicity.render() + " ≠ " +
                 res.right.multiplicity.render();
  } else {
    res.verdict = Verdict::Cospectral;
  }

  res.norm_left = norm_estimate(a, {}, budget);
  res.norm_right = norm_estimate(b, {}, budget);
  res.endpoint_gap = std::abs(res.norm_left.extrapolated - res.norm_right.extrapolated);
  res.endpoint_ok = res.endpoint_gap <= 1e-3;
  RunConfig cfg;
  res.positivity_left =
      positivity_on_interior(catalog_measure(a, cfg), cfg.positivity_samples).all_positive;
  res.positivity_right =
      positivity_on_interior(catalog_measure(b, cfg), cfg.positivity_samples).all_positive;
  return res;
}

namespace {

nlohmann::json marked_json(const MarkedSpectrum& m) {
  return {{"interval", {m.lo, m.hi}},
          {"atoms", m.atoms},
          {"measure_class", render_measure_class(m)},
          {"multiplicity", m.multiplicity.render()},
          {"provenance", m.provenance}};
}

nlohmann::json norm_json(const NormEstimate& e) {
  nlohmann::json j{{"radii", e.radii},
                   {"lower_bounds", e.lower_bounds},
                   {"extrapolated", e.extrapolated}};
  if (e.catalog) j["catalog"] = *e.catalog;
  return j;
}

}  // namespace

std::string cospectral_json(const CospectralResult& r) {
  nlohmann::json j{
      {"verdict", r.verdict == Verdict::Cospectral ? "Cospectral" : "NotCospectral"},
      {"reason", r.reason},
      {"left", marked_json(r.left)},
      {"right", marked_json(r.right)},
      {"evidence",
       {{"norm",
         {{"left", norm_json(r.norm_left)},
          {"right", norm_json(r.norm_right)},
          {"endpoint_gap", r.endpoint_gap},
          {"tolerance", 1e-3},
          {"ok", r.endpoint_ok}}},
        {"positivity", {{"left", r.positivity_left}, {"right", r.positivity_right}}}}}};
  return j.dump(2);
}

DinfinityReport dinfinity_checks() {
  DinfinityReport rep;
  const GraphFamily dinf = GraphFamily::dinfinity();
  rep.kernel_ok = true;
  for (int r = rep.kernel_radius_lo; r <= rep.kernel_radius_hi; ++r) {
    const FiniteGraph g = ball(dinf, origin_key(dinf), r, 1'000'000);
    std::vector<long long> xi(static_cast<size_t>(g.size()), 0);
    int at0 = -1, at0p = -1;
    for (int i = 0; i < g.size(); ++i) {
      const std::string k = render_key(g.labels[static_cast<size_t>(i)]);
      if (k == "0") at0 = i;
      if (k == "0'") at0p = i;
    }
    if (at0 < 0 || at0p < 0) {
      rep.kernel_ok = false;
      continue;
    }
    xi[static_cast<size_t>(at0)] = 1;
    xi[static_cast<size_t>(at0p)] = -1;
    for (long long y : adjacency_apply(g, xi))
      if (y != 0) rep.kernel_ok = false;
  }

  rep.all_inside = true;
  rep.monotone_ok = true;
  double prev_top = 0.0;
  for (int n = 4; n <= 20; ++n) {
    const std::vector<double> ev = dense_spectrum(dynkin_d(n));
    const double top = std::max(std::abs(ev.front()), std::abs(ev.back()));
    rep.margins.push_back(2.0 - top);
    if (!(top < 2.0)) rep.all_inside = false;
    if (!(ev.back() > prev_top)) rep.monotone_ok = false;
    prev_top = ev.back();
  }
  return rep;
}

std::string dinfinity_report_json(const DinfinityReport& r) {
  nlohmann::json j{{"kernel_ok", r.kernel_ok},
                   {"kernel_radii", {r.kernel_radius_lo, r.kernel_radius_hi}},
                   {"section_margins", r.margins},
                   {"sections_from", 4},
                   {"all_inside", r.all_inside},
                   {"monotone_ok", r.monotone_ok}};
  return j.dump(2);
}

RotationReport compare_rotations(const BranchingSeq& seq, int quad_nodes) {
  if (!seq.prefix.empty()) throw NonPeriodic("rotation comparison needs a purely periodic branching sequence");
  if (quad_nodes < 2) throw InvalidParameter("quad_nodes must be >= 2");
  RotationReport rep;
  rep.rotations = rotations(seq);
  const int p = static_cast<int>(seq.period.size());

  // (i) the distinct Jacobi operators occurring at levels >= p coincide
  // across rotations (one full period of levels is a complete window).
  std::vector<std::vector<JacobiSpec>> sets;
  for (const BranchingSeq& rot : rep.rotations) {
    std::vector<JacobiSpec> set;
    for (int n = p; n < 2 * p; ++n) {
      const JacobiSpec j = jacobi_from_branching(rot, n);
      bool seen = false;
      for (const JacobiSpec& k : set) seen = seen || k.same_operator(j);
      if (!seen) set.push_back(j);
    }
    sets.push_back(std::move(set));
  }
  rep.components_match = true;
  for (size_t i = 1; i < sets.size(); ++i) {
    if (sets[i].size() != sets[0].size()) rep.components_match = false;
    for (const JacobiSpec& j : sets[i]) {
      bool seen = false;
      for (const JacobiSpec& k : sets[0]) seen = seen || k.same_operator(j);
      if (!seen) rep.components_match = false;
    }
  }

  // (ii) extrapolated norm endpoints agree pairwise.
  for (const BranchingSeq& rot : rep.rotations)
    rep.norm_endpoints.push_back(norm_estimate(GraphFamily::ssrt(rot)).extrapolated);
  rep.norm_max_gap = 0.0;
  for (size_t i = 0; i < rep.norm_endpoints.size(); ++i)
    for (size_t j = i + 1; j < rep.norm_endpoints.size(); ++j)
      rep.norm_max_gap =
          std::max(rep.norm_max_gap, std::abs(rep.norm_endpoints[i] - rep.norm_endpoints[j]));
  rep.norm_ok = rep.norm_max_gap <= 1e-3;

  // (iii) quadrature support endpoints agree pairwise.
  for (const BranchingSeq& rot : rep.rotations) {
    const SpectralMeasure q = quadrature_measure(jacobi_from_branching(rot, 0), quad_nodes);
    rep.support_endpoints.push_back(support(q));
  }
  rep.support_max_gap = 0.0;
  for (size_t i = 0; i < rep.support_endpoints.size(); ++i)
    for (size_t j = i + 1; j < rep.support_endpoints.size(); ++j) {
      rep.support_max_gap = std::max(
          rep.support_max_gap,
          std::abs(rep.support_endpoints[i].first - rep.support_endpoints[j].first));
      rep.support_max_gap = std::max(
          rep.support_max_gap,
          std::abs(rep.support_endpoints[i].second - rep.support_endpoints[j].second));
    }
  rep.support_ok = rep.support_max_gap <= 1e-3;
  return rep;
}

std::string rotation_report_json(const RotationReport& r) {
  nlohmann::json rots = nlohmann::json::array();
  for (const BranchingSeq& b : r.rotations) rots.push_back(b.period);
  nlohmann::json supports = nlohmann::json::array();
  for (const auto& [lo, hi] : r.support_endpoints) supports.push_back({lo, hi});
  nlohmann::json j{{"rotations", rots},
                   {"components_match", r.components_match},
                   {"norm_endpoints", r.norm_endpoints},
                   {"norm_max_gap", r.norm_max_gap},
                   {"norm_ok", r.norm_ok},
                   {"support_endpoints", supports},
                   {"support_max_gap", r.support_max_gap},
                   {"support_ok", r.support_ok},
                   {"ok", r.ok()}};
  return j.dump(2);
}

}  // namespace cospectra
