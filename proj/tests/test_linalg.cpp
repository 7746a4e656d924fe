#include "doctest.h"

#include "cospectra/graph.hpp"
#include "cospectra/linalg.hpp"

#include <cmath>
#include <random>

using namespace cospectra;

namespace {

FiniteGraph path(int n) {
  FiniteGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

FiniteGraph cycle(int n) {
  FiniteGraph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

FiniteGraph random_graph(int n, double p, std::mt19937& rng) {
  FiniteGraph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("dense adjacency places multiplicities and loops") {
  FiniteGraph g(3, true);
  g.add_edge(0, 1, 2);
  g.add_edge(1, 1, 3);
  const Eigen::MatrixXd m = dense_adjacency(g);
  CHECK(m(0, 1) == 2.0);
  CHECK(m(1, 0) == 2.0);
  CHECK(m(1, 1) == 3.0);
  CHECK(m(2, 2) == 0.0);
}

TEST_CASE("dense spectrum of paths and cycles is the classical one") {
  for (int n : {2, 5, 9}) {
    const auto ev = dense_spectrum(path(n));
    for (int k = 1; k <= n; ++k)
      CHECK(ev[k - 1] ==
            doctest::Approx(2.0 * std::cos(M_PI * (n + 1 - k) / (n + 1))).epsilon(1e-10));
  }
  const auto cyc = dense_spectrum(cycle(6));
  CHECK(cyc.back() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(cyc.front() == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("top_eigenvalue agrees with the dense solver on random graphs") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 30 + (int)(rng() % 60);
    const FiniteGraph g = random_graph(n, 0.15, rng);
    const auto ev = dense_spectrum(g);
    CHECK(top_eigenvalue(g) == doctest::Approx(ev.back()).epsilon(1e-8));
  }
}

TEST_CASE("lanczos path engages on large graphs and matches the closed form") {
  // Path on 2000 vertices: top eigenvalue 2 cos(pi / 2001).
  const FiniteGraph g = path(2000);
  CHECK(top_eigenvalue(g) == doctest::Approx(2.0 * std::cos(M_PI / 2001.0)).epsilon(1e-10));
  // Large cycle: exactly 2, with a flat start vector this is immediate.
  CHECK(top_eigenvalue(cycle(1500)) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("top_eigenvalue handles multigraphs") {
  // Loop of multiplicity 2 on one vertex: eigenvalue 2.
  FiniteGraph g(1, true);
  g.add_edge(0, 0, 2);
  CHECK(top_eigenvalue(g) == doctest::Approx(2.0).epsilon(1e-12));
  const auto ev = dense_spectrum(g);
  REQUIRE(ev.size() == 1);
  CHECK(ev[0] == doctest::Approx(2.0).epsilon(1e-12));
}
