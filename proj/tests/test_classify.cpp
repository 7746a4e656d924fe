#include "doctest.h"

#include "cospectra/classify.hpp"
#include "cospectra/linalg.hpp"

#include <cmath>

using namespace cospectra;

namespace {

double spectral_radius(const FiniteGraph& g) {
  const auto ev = dense_spectrum(g);
  return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

}  // namespace

TEST_CASE("affine diagrams have spectral radius exactly 2") {
  for (int n = 2; n <= 10; ++n)
    CHECK(spectral_radius(affine_diagram(AffineKind::A, n)) == doctest::Approx(2.0).epsilon(1e-12));
  for (int n = 4; n <= 10; ++n)
    CHECK(spectral_radius(affine_diagram(AffineKind::D, n)) == doctest::Approx(2.0).epsilon(1e-12));
  for (int n : {6, 7, 8})
    CHECK(spectral_radius(affine_diagram(AffineKind::E, n)) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("affine diagram shapes") {
  const FiniteGraph a5 = affine_diagram(AffineKind::A, 5);
  CHECK(a5.size() == 6);
  for (int v = 0; v < 6; ++v) CHECK(a5.degree(v) == 2);
  const FiniteGraph d6 = affine_diagram(AffineKind::D, 6);
  CHECK(d6.size() == 7);
  const FiniteGraph e8 = affine_diagram(AffineKind::E, 8);
  CHECK(e8.size() == 9);
  CHECK(e8.degree(0) == 3);
  CHECK_THROWS_AS(affine_diagram(AffineKind::A, 1), InvalidParameter);
  CHECK_THROWS_AS(affine_diagram(AffineKind::D, 3), InvalidParameter);
  CHECK_THROWS_AS(affine_diagram(AffineKind::E, 9), InvalidParameter);
}

TEST_CASE("finite diagrams stay strictly below 2") {
  for (int n = 1; n <= 12; ++n) CHECK(spectral_radius(path_graph(n)) < 2.0);
  for (int n = 4; n <= 12; ++n) CHECK(spectral_radius(dynkin_d(n)) < 2.0);
  for (int n : {6, 7, 8}) CHECK(spectral_radius(dynkin_e(n)) < 2.0);
}

TEST_CASE("no witness inside the radius-2 diagrams") {
  for (int n = 1; n <= 12; ++n) CHECK_FALSE(find_forbidden_subgraph(path_graph(n)).has_value());
  for (int n = 4; n <= 12; ++n) CHECK_FALSE(find_forbidden_subgraph(dynkin_d(n)).has_value());
  for (int n : {6, 7, 8}) CHECK_FALSE(find_forbidden_subgraph(dynkin_e(n)).has_value());
}

TEST_CASE("witnesses found in each affine diagram are valid and tight") {
  for (int n = 2; n <= 9; ++n) {
    const FiniteGraph g = affine_diagram(AffineKind::A, n);
    const auto w = find_forbidden_subgraph(g);
    REQUIRE(w.has_value());
    CHECK(w->kind == AffineKind::A);
    CHECK(w->n == n);
    CHECK(witness_is_valid(g, *w));
  }
  for (int n = 4; n <= 9; ++n) {
    const FiniteGraph g = affine_diagram(AffineKind::D, n);
    const auto w = find_forbidden_subgraph(g);
    REQUIRE(w.has_value());
    CHECK(w->kind == AffineKind::D);
    CHECK(w->n == n);
    CHECK(witness_is_valid(g, *w));
  }
  for (int n : {6, 7, 8}) {
    const FiniteGraph g = affine_diagram(AffineKind::E, n);
    const auto w = find_forbidden_subgraph(g);
    REQUIRE(w.has_value());
    CHECK(w->kind == AffineKind::E);
    CHECK(w->n == n);
    CHECK(witness_is_valid(g, *w));
  }
}

TEST_CASE("witness priority: cycles beat branch vertices") {
  // A triangle with a pendant path contains A(2) and nothing smaller.
  FiniteGraph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  const auto w = find_forbidden_subgraph(g);
  REQUIRE(w.has_value());
  CHECK(w->kind == AffineKind::A);
  CHECK(w->n == 2);
  CHECK(witness_is_valid(g, *w));
}

TEST_CASE("degree-4 vertex yields the smallest D witness") {
  FiniteGraph star(5);
  for (int v = 1; v <= 4; ++v) star.add_edge(0, v);
  const auto w = find_forbidden_subgraph(star);
  REQUIRE(w.has_value());
  CHECK(w->kind == AffineKind::D);
  CHECK(w->n == 4);
  CHECK(witness_is_valid(star, *w));
}

TEST_CASE("two branch vertices yield a D witness along the connecting path") {
  // H-shape: two degree-3 vertices at distance 3.
  FiniteGraph g(8);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(5, 6);
  g.add_edge(5, 7);
  const auto w = find_forbidden_subgraph(g);
  REQUIRE(w.has_value());
  CHECK(w->kind == AffineKind::D);
  CHECK(w->n == 7);  // D(n) has n+1 vertices; here all 8 are used
  CHECK(witness_is_valid(g, *w));
}

TEST_CASE("spider with long legs yields an E witness") {
  // Star with arm lengths (2,2,2): exactly E(6).
  FiniteGraph g(7);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 3);
  g.add_edge(3, 4);
  g.add_edge(0, 5);
  g.add_edge(5, 6);
  const auto w = find_forbidden_subgraph(g);
  REQUIRE(w.has_value());
  CHECK(w->kind == AffineKind::E);
  CHECK(w->n == 6);
  CHECK(witness_is_valid(g, *w));
  // Arm lengths (5,2,1): E(8); arms (4,2,1) stay Dynkin.
  FiniteGraph e8(9);
  e8.add_edge(0, 1);
  for (int i = 1; i < 5; ++i) e8.add_edge(i, i + 1);
  e8.add_edge(0, 6);
  e8.add_edge(6, 7);
  e8.add_edge(0, 8);
  const auto w8 = find_forbidden_subgraph(e8);
  REQUIRE(w8.has_value());
  CHECK(w8->kind == AffineKind::E);
  CHECK(w8->n == 8);
  CHECK(witness_is_valid(e8, *w8));
}

TEST_CASE("witness_is_valid rejects broken embeddings") {
  const FiniteGraph host = affine_diagram(AffineKind::A, 3);
  ForbiddenWitness w{AffineKind::A, 3, {0, 1, 2, 2}};  // repeated vertex
  CHECK_FALSE(witness_is_valid(host, w));
  ForbiddenWitness w2{AffineKind::A, 3, {0, 1, 3, 2}};  // wrong cycle order
  CHECK_FALSE(witness_is_valid(host, w2));
  ForbiddenWitness w3{AffineKind::A, 3, {0, 1, 2, 9}};  // out of range
  CHECK_FALSE(witness_is_valid(host, w3));
}

TEST_CASE("classification of the infinite families") {
  CHECK(classify_norm_le_2(parse_family("ray")).result == NormClass::IsRay);
  CHECK(classify_norm_le_2(parse_family("line")).result == NormClass::IsLine);
  CHECK(classify_norm_le_2(parse_family("lattice:1")).result == NormClass::IsLine);
  CHECK(classify_norm_le_2(parse_family("dinfinity")).result == NormClass::IsDInfinity);
  for (const char* desc : {"lattice:2", "lattice:3", "tree:3", "rootedtree:2", "ssrt:2,3"}) {
    CAPTURE(desc);
    const Classification c = classify_norm_le_2(parse_family(desc));
    CHECK(c.result == NormClass::NormExceeds2);
    REQUIRE(c.witness.has_value());
    const FiniteGraph b = ball(parse_family(desc), origin_key(parse_family(desc)), c.radius);
    CHECK(witness_is_valid(b, *c.witness));
  }
  CHECK_THROWS_AS(classify_norm_le_2(GraphFamily::finite_graph(path_graph(3))), FiniteInput);
}
