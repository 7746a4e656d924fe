#include "cospectra/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "cospectra/errors.hpp"

namespace cospectra {

Eigen::MatrixXd dense_adjacency(const FiniteGraph& g) {
  const int n = g.size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int v = 0; v < n; ++v)
    for (auto [u, mult] : g.adj[(std::size_t)v]) m(v, u) = (double)mult;
  return m;
}

std::vector<double> dense_spectrum(const FiniteGraph& g) {
  if (g.size() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense_adjacency(g),
                                                        Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

namespace {

constexpr double kPivotFloor = 1e-280;

// Sturm count for a general symmetric tridiagonal (diag, off).
int sturm_count(const std::vector<double>& diag, const std::vector<double>& off, double x) {
  int count = 0;
  double q = diag[0] - x;
  if (q > -kPivotFloor && q < kPivotFloor) q = -kPivotFloor;
  if (q < 0) ++count;
  for (std::size_t i = 0; i < off.size(); ++i) {
    q = diag[i + 1] - x - off[i] * off[i] / q;
    if (q > -kPivotFloor && q < kPivotFloor) q = -kPivotFloor;
    if (q < 0) ++count;
  }
  return count;
}

double tridiag_largest(const std::vector<double>& diag, const std::vector<double>& off) {
  const int n = (int)diag.size();
  double r = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = std::abs(diag[(std::size_t)i]);
    if (i > 0) row += std::abs(off[(std::size_t)i - 1]);
    if (i + 1 < n) row += std::abs(off[(std::size_t)i]);
    r = std::max(r, row);
  }
  double lo = -r - 1.0, hi = r + 1.0;
  while (hi - lo > 1e-14 * (r + 1.0)) {
    double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) break;
    if (sturm_count(diag, off, mid) >= n)
      hi = mid;
    else
      lo = mid;
  }
  return lo + (hi - lo) / 2.0;
}

// Last component (by magnitude) of the unit eigenvector of the tridiagonal
// at the given eigenvalue, via one inverse-iteration sweep.
double last_component(const std::vector<double>& diag, const std::vector<double>& off,
                      double lambda) {
  const std::size_t n = diag.size();
  if (n == 1) return 1.0;
  // Thomas solve of (T - lambda) y = ones with a pivot floor; near-singular
  // pivots are exactly what inverse iteration wants.
  std::vector<double> c(n - 1), d(n), y(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) d[i] = diag[i] - lambda;
  double piv = d[0];
  if (std::abs(piv) < kPivotFloor) piv = kPivotFloor;
  c[0] = off[0] / piv;
  y[0] /= piv;
  for (std::size_t i = 1; i < n; ++i) {
    piv = d[i] - off[i - 1] * c[i - 1];
    if (std::abs(piv) < kPivotFloor) piv = kPivotFloor;
    if (i + 1 < n) c[i] = off[i] / piv;
    y[i] = (y[i] - off[i - 1] * y[i - 1]) / piv;
  }
  for (std::size_t i = n - 1; i-- > 0;) y[i] -= c[i] * y[i + 1];
  double norm = 0.0;
  for (double v : y) norm += v * v;
  norm = std::sqrt(norm);
  if (!(norm > 0) || !std::isfinite(norm)) return 1.0;
  return std::abs(y[n - 1]) / norm;
}

double lanczos_top(const FiniteGraph& g, double resid_tol) {
  const std::size_t n = (std::size_t)g.size();
  const std::size_t max_iter = std::min(n, (std::size_t)6000);
  std::vector<double> x(n, 1.0 / std::sqrt((double)n)), x_prev(n, 0.0), w(n);
  std::vector<double> alpha, beta;
  double theta = 0.0, theta_prev = 0.0;
  int stagnant = 0;
  double scale = 1.0;
  for (std::size_t j = 0; j < max_iter; ++j) {
    // w = A x - beta_{j-1} x_prev
    for (std::size_t v = 0; v < n; ++v) {
      double acc = 0.0;
      for (auto [u, m] : g.adj[v]) acc += (double)m * x[(std::size_t)u];
      w[v] = acc - (j > 0 ? beta.back() : 0.0) * x_prev[v];
    }
    double a = 0.0;
    for (std::size_t v = 0; v < n; ++v) a += w[v] * x[v];
    alpha.push_back(a);
    for (std::size_t v = 0; v < n; ++v) w[v] -= a * x[v];
    double b = 0.0;
    for (std::size_t v = 0; v < n; ++v) b += w[v] * w[v];
    b = std::sqrt(b);
    scale = std::max(scale, std::abs(a) + b);

    const bool check = (j + 1 == max_iter) || b <= 1e-13 * scale || (j >= 8 && j % 4 == 3);
    if (check) {
      theta = tridiag_largest(alpha, beta);
      const double resid = b * last_component(alpha, beta, theta);
      if (resid <= resid_tol) return theta;
      if (std::abs(theta - theta_prev) <= 1e-14 * scale) {
        if (++stagnant >= 10) return theta;  // monotone sequence has flatlined
      } else {
        stagnant = 0;
      }
      theta_prev = theta;
    }
    if (b <= 1e-13 * scale) return tridiag_largest(alpha, beta);  // invariant subspace
    beta.push_back(b);
    x_prev.swap(x);
    for (std::size_t v = 0; v < n; ++v) x[v] = w[v] / b;
  }
  return theta;
}

}  // namespace

double top_eigenvalue(const FiniteGraph& g, double resid_tol) {
  if (g.size() == 0) throw InvalidParameter("top_eigenvalue of an empty graph");
  if (g.size() <= 512) {
    std::vector<double> spec = dense_spectrum(g);
    return spec.back();
  }
  return lanczos_top(g, resid_tol);
}

}  // namespace cospectra
