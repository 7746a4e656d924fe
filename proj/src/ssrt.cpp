#include "cospectra/ssrt.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

#include "json.hpp"

#include "cospectra/errors.hpp"
#include "cospectra/linalg.hpp"

namespace cospectra {

std::vector<BigInt> multiplicities(const BranchingSeq& b, int up_to) {
  if (up_to < 0) throw InvalidParameter("multiplicities: up_to must be >= 0");
  std::vector<BigInt> m;
  m.reserve(static_cast<size_t>(up_to) + 1);
  m.push_back(1);
  BigInt prod = 1;  // prod_{q < n-1} d_q
  for (int n = 1; n <= up_to; ++n) {
    m.push_back(prod * (b.at(n - 1) - 1));
    prod *= b.at(n - 1);
  }
  return m;
}

std::vector<DecompComponent> decompose(const GraphFamily& tree, int up_to) {
  const BranchingSeq b = branching_of(tree);
  std::vector<BigInt> m = multiplicities(b, up_to);
  std::vector<DecompComponent> out;
  out.reserve(static_cast<size_t>(up_to) + 1);
  for (int n = 0; n <= up_to; ++n)
    out.push_back({n, m[static_cast<size_t>(n)], jacobi_from_branching(b, n)});
  return out;
}

VerifyReport verify_decomposition(const GraphFamily& tree, int depth, double spectra_tol,
                                  double conj_tol, long long budget) {
  if (depth < 0) throw InvalidParameter("verify_decomposition: depth must be >= 0");
  const BranchingSeq b = branching_of(tree);
  const FiniteGraph g = ball(tree, origin_key(tree), depth, budget);
  const int N = g.size();

  VerifyReport rep;
  rep.depth = depth;
  rep.ball_vertices = N;

  std::vector<std::vector<int>> lev(static_cast<size_t>(depth) + 1);
  std::vector<int> local(static_cast<size_t>(N));
  for (int i = 0; i < N; ++i) lev[static_cast<size_t>(g.level[static_cast<size_t>(i)])].push_back(i);
  for (const auto& L : lev)
    for (size_t k = 0; k < L.size(); ++k) local[static_cast<size_t>(L[k])] = static_cast<int>(k);

  const std::vector<BigInt> m = multiplicities(b, depth);

  // (i) dimensions: partial multiplicity sums telescope to the sphere sizes,
  // and the component lengths fill the ball exactly.
  rep.dims_ok = true;
  BigInt prefix = 0;
  for (int r = 0; r <= depth; ++r) {
    prefix += m[static_cast<size_t>(r)];
    if (prefix != BigInt(lev[static_cast<size_t>(r)].size())) rep.dims_ok = false;
  }
  std::vector<long long> base(static_cast<size_t>(depth) + 2, 0);
  for (int n = 0; n <= depth; ++n)
    base[static_cast<size_t>(n) + 1] =
        base[static_cast<size_t>(n)] + m[static_cast<size_t>(n)].convert_to<long long>() * (depth - n + 1);
  if (base.back() != N) rep.dims_ok = false;

  // (ii) spectra: ball eigenvalues against the union of truncated sections.
  std::vector<double> model;
  model.reserve(static_cast<size_t>(N));
  for (int n = 0; n <= depth; ++n) {
    const Tridiagonal t = truncate(jacobi_from_branching(b, n), depth - n + 1);
    const std::vector<double> ev = tridiagonal_eigenvalues(t);
    const long long copies = m[static_cast<size_t>(n)].convert_to<long long>();
    for (long long c = 0; c < copies; ++c) model.insert(model.end(), ev.begin(), ev.end());
  }
  std::sort(model.begin(), model.end());
  const std::vector<double> actual = dense_spectrum(g);
  if (model.size() != actual.size()) {
    rep.spectra_ok = false;
    rep.spectra_max_dev = std::numeric_limits<double>::infinity();
  } else {
    double gap = 0.0;
    for (size_t i = 0; i < model.size(); ++i) gap = std::max(gap, std::abs(model[i] - actual[i]));
    rep.spectra_max_dev = gap;
    rep.spectra_ok = gap <= spectra_tol;
  }

  if (!rep.dims_ok) {  // without the layout there is no basis to conjugate by
    rep.conjugation_ok = false;
    rep.conjugation_max_dev = std::numeric_limits<double>::infinity();
    return rep;
  }

  // (iii) conjugation: build the sphere basis level by level.  Components born
  // at earlier levels propagate by the normalized child-copy map (an exact
  // isometry since every level-(r-1) vertex has d_{r-1} children inside the
  // ball); the newborn component is the per-parent mean-centered complement.
  std::vector<int> par(static_cast<size_t>(N), -1);
  std::vector<std::vector<int>> children(static_cast<size_t>(N));
  for (int u = 0; u < N; ++u)
    for (const auto& [v, mult] : g.adj[static_cast<size_t>(u)]) {
      (void)mult;
      if (g.level[static_cast<size_t>(v)] == g.level[static_cast<size_t>(u)] + 1)
        children[static_cast<size_t>(u)].push_back(v);
      else
        par[static_cast<size_t>(u)] = v;
    }

  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(N, N);
  const auto col_of = [&](int n, long long j, int r) {
    return base[static_cast<size_t>(n)] + j * (depth - n + 1) + (r - n);
  };

  std::vector<std::vector<Eigen::VectorXd>> prev(static_cast<size_t>(depth) + 1);
  prev[0].push_back(Eigen::VectorXd::Ones(1));
  B(lev[0][0], col_of(0, 0, 0)) = 1.0;

  for (int r = 1; r <= depth; ++r) {
    const int s = static_cast<int>(lev[static_cast<size_t>(r)].size());
    const double inv = 1.0 / std::sqrt(static_cast<double>(b.at(r - 1)));
    std::vector<std::vector<Eigen::VectorXd>> cur(static_cast<size_t>(depth) + 1);

    for (int n = 0; n < r; ++n) {
      cur[static_cast<size_t>(n)].reserve(prev[static_cast<size_t>(n)].size());
      for (const Eigen::VectorXd& v : prev[static_cast<size_t>(n)]) {
        Eigen::VectorXd w = Eigen::VectorXd::Zero(s);
        for (size_t pl = 0; pl < lev[static_cast<size_t>(r) - 1].size(); ++pl)
          for (int c : children[static_cast<size_t>(lev[static_cast<size_t>(r) - 1][pl])])
            w[local[static_cast<size_t>(c)]] = v[static_cast<long>(pl)] * inv;
        cur[static_cast<size_t>(n)].push_back(std::move(w));
      }
    }

    std::vector<Eigen::VectorXd>& born = cur[static_cast<size_t>(r)];
    for (int p : lev[static_cast<size_t>(r) - 1]) {
      const auto& ch = children[static_cast<size_t>(p)];
      const int dc = static_cast<int>(ch.size());
      std::vector<Eigen::VectorXd> kept;
      for (int t = 0; t < dc; ++t) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(s);
        v[local[static_cast<size_t>(ch[static_cast<size_t>(t)])]] = 1.0;
        for (int u2 = 0; u2 < dc; ++u2)
          v[local[static_cast<size_t>(ch[static_cast<size_t>(u2)])]] -= 1.0 / dc;
        for (int pass = 0; pass < 2; ++pass)
          for (const Eigen::VectorXd& k : kept) v -= k.dot(v) * k;
        const double nrm = v.norm();
        if (nrm > 1e-8) {
          v /= nrm;
          kept.push_back(std::move(v));
        }
      }
      if (static_cast<int>(kept.size()) != dc - 1)
        throw ToleranceFailure("sphere basis construction degenerated");
      for (Eigen::VectorXd& k : kept) born.push_back(std::move(k));
    }

    for (int n = 0; n <= r; ++n)
      for (size_t j = 0; j < cur[static_cast<size_t>(n)].size(); ++j) {
        const long long c = col_of(n, static_cast<long long>(j), r);
        for (int t = 0; t < s; ++t)
          B(lev[static_cast<size_t>(r)][static_cast<size_t>(t)], c) = cur[static_cast<size_t>(n)][j][t];
      }
    prev = std::move(cur);
  }

  const Eigen::MatrixXd A = dense_adjacency(g);
  Eigen::MatrixXd M = B.transpose() * (A * B);
  double dev = (B.transpose() * B - Eigen::MatrixXd::Identity(N, N)).cwiseAbs().maxCoeff();
  for (int n = 0; n <= depth; ++n) {
    const JacobiSpec jn = jacobi_from_branching(b, n);
    const int len = depth - n + 1;
    const long long copies = m[static_cast<size_t>(n)].convert_to<long long>();
    for (long long j = 0; j < copies; ++j) {
      const long long off = base[static_cast<size_t>(n)] + j * len;
      for (int i = 0; i + 1 < len; ++i) {
        const double e = jn.entry(i);
        M(off + i, off + i + 1) -= e;
        M(off + i + 1, off + i) -= e;
      }
    }
  }
  dev = std::max(dev, M.cwiseAbs().maxCoeff());
  rep.conjugation_max_dev = dev;
  rep.conjugation_ok = dev <= conj_tol;
  return rep;
}

std::string verify_report_json(const VerifyReport& r) {
  nlohmann::json j{{"depth", r.depth},
                   {"ball_vertices", r.ball_vertices},
                   {"dims_ok", r.dims_ok},
                   {"spectra_ok", r.spectra_ok},
                   {"spectra_max_dev", r.spectra_max_dev},
                   {"conjugation_ok", r.conjugation_ok},
                   {"conjugation_max_dev", r.conjugation_max_dev},
                   {"ok", r.ok()}};
  return j.dump(2);
}

}  // namespace cospectra
