#include "cospectra/measure.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "cospectra/format.hpp"

namespace cospectra {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require(bool ok, const char* msg) {
  if (!ok) throw InvalidParameter(msg);
}

// Composite Simpson over equally spaced samples g_0..g_N (N intervals of
// width h).  Odd N is finished with a 3/8 panel on the last three intervals.
double simpson(const std::vector<double>& g, double h) {
  const std::size_t n = g.size() - 1;  // interval count
  if (n == 0) return 0.0;
  if (n == 1) return h * (g[0] + g[1]) / 2.0;
  double total = 0.0;
  std::size_t even_part = (n % 2 == 0) ? n : n - 3;
  for (std::size_t i = 0; i + 2 <= even_part; i += 2)
    total += h / 3.0 * (g[i] + 4.0 * g[i + 1] + g[i + 2]);
  if (n % 2 != 0) {
    std::size_t i = even_part;
    total += 3.0 * h / 8.0 * (g[i] + 3.0 * g[i + 1] + 3.0 * g[i + 2] + g[i + 3]);
  }
  return total;
}

}  // namespace

SpectralMeasure semicircle(double d) {
  require(d > 0, "semicircle parameter must be positive");
  SpectralMeasure m;
  m.rep = SpectralMeasure::Rep::Density;
  m.kind = SpectralMeasure::DensityKind::Semicircle;
  m.param = d;
  return m;
}

SpectralMeasure arcsine() {
  SpectralMeasure m;
  m.rep = SpectralMeasure::Rep::Density;
  m.kind = SpectralMeasure::DensityKind::Arcsine;
  m.param = 2.0;
  return m;
}

SpectralMeasure measure_from_moments(std::vector<Rational> moments) {
  require(!moments.empty(), "moment list must contain order 0");
  if (moments[0] != 1) throw InvalidParameter("moment of order 0 must equal 1");
  SpectralMeasure m;
  m.rep = SpectralMeasure::Rep::Moments;
  m.moments = std::move(moments);
  return m;
}

SpectralMeasure measure_from_discrete(std::vector<double> nodes, std::vector<double> weights) {
  require(nodes.size() == weights.size(), "node and weight counts differ");
  require(!nodes.empty(), "discrete measure needs at least one atom");
  SpectralMeasure m;
  m.rep = SpectralMeasure::Rep::Discrete;
  m.nodes = std::move(nodes);
  m.weights = std::move(weights);
  return m;
}

std::vector<Rational> semicircle_moments(int up_to, const Rational& d) {
  require(up_to >= 0, "moment order must be >= 0");
  std::vector<Rational> out((std::size_t)up_to + 1, Rational(0));
  Rational power = 1;
  for (int m = 0; 2 * m <= up_to; ++m) {
    out[(std::size_t)(2 * m)] = power * Rational(catalan((unsigned)m));
    power *= d;
  }
  return out;
}

std::vector<Rational> arcsine_moments(int up_to) {
  require(up_to >= 0, "moment order must be >= 0");
  std::vector<Rational> out((std::size_t)up_to + 1, Rational(0));
  for (int m = 0; 2 * m <= up_to; ++m)
    out[(std::size_t)(2 * m)] = Rational(binomial((unsigned)(2 * m), (unsigned)m));
  return out;
}

std::pair<double, double> support(const SpectralMeasure& m) {
  switch (m.rep) {
    case SpectralMeasure::Rep::Density:
      if (m.kind == SpectralMeasure::DensityKind::Semicircle) {
        double r = 2.0 * std::sqrt(m.param);
        return {-r, r};
      }
      return {-m.param, m.param};
    case SpectralMeasure::Rep::Grid:
      return {m.lo, m.lo + m.step * (double)m.values.size()};
    case SpectralMeasure::Rep::Discrete: {
      auto [lo, hi] = std::minmax_element(m.nodes.begin(), m.nodes.end());
      return {*lo, *hi};
    }
    case SpectralMeasure::Rep::Moments:
      throw InvalidParameter("support is not defined for a bare moment list");
  }
  throw InvalidParameter("unknown representation");
}

double density_at(const SpectralMeasure& m, double x) {
  switch (m.rep) {
    case SpectralMeasure::Rep::Density:
      if (m.kind == SpectralMeasure::DensityKind::Semicircle) {
        double s = 4.0 * m.param - x * x;
        return s > 0 ? std::sqrt(s) / (2.0 * kPi * m.param) : 0.0;
      } else {
        double s = m.param * m.param - x * x;
        return s > 0 ? 1.0 / (kPi * std::sqrt(s)) : 0.0;
      }
    case SpectralMeasure::Rep::Grid: {
      if (m.values.empty()) return 0.0;
      double t = (x - m.lo) / m.step;
      if (t < 0 || t >= (double)m.values.size()) return 0.0;
      return m.values[(std::size_t)t];
    }
    default:
      throw RepresentationMismatch("density_at needs a density or grid representation");
  }
}

double cdf_at(const SpectralMeasure& m, double x) {
  switch (m.rep) {
    case SpectralMeasure::Rep::Density:
      if (m.kind == SpectralMeasure::DensityKind::Semicircle) {
        double r = 2.0 * std::sqrt(m.param);
        if (x <= -r) return 0.0;
        if (x >= r) return 1.0;
        return 0.5 + x * std::sqrt(4.0 * m.param - x * x) / (4.0 * kPi * m.param) +
               std::asin(x / r) / kPi;
      } else {
        double r = m.param;
        if (x <= -r) return 0.0;
        if (x >= r) return 1.0;
        return 0.5 + std::asin(x / r) / kPi;
      }
    case SpectralMeasure::Rep::Grid: {
      double total = 0.0;
      for (std::size_t i = 0; i < m.values.size(); ++i) {
        double right = m.lo + m.step * (double)(i + 1);
        if (x >= right)
          total += m.values[i] * m.step;
        else if (x > m.lo + m.step * (double)i)
          total += m.values[i] * (x - (m.lo + m.step * (double)i));
        else
          break;
      }
      return total;
    }
    case SpectralMeasure::Rep::Discrete: {
      double total = 0.0;
      for (std::size_t i = 0; i < m.nodes.size(); ++i)
        if (m.nodes[i] <= x) total += m.weights[i];
      return total;
    }
    case SpectralMeasure::Rep::Moments:
      throw RepresentationMismatch("cdf_at is not defined for a bare moment list");
  }
  throw InvalidParameter("unknown representation");
}

SpectralMeasure rescale_measure(const SpectralMeasure& m, double k) {
  require(k > 0, "rescale factor must be positive");
  SpectralMeasure out = m;
  switch (m.rep) {
    case SpectralMeasure::Rep::Density:
      out.param = (m.kind == SpectralMeasure::DensityKind::Semicircle) ? m.param * k * k
                                                                       : m.param * k;
      return out;
    case SpectralMeasure::Rep::Grid:
      out.lo = m.lo * k;
      out.step = m.step * k;
      for (double& v : out.values) v /= k;
      return out;
    case SpectralMeasure::Rep::Discrete:
      for (double& x : out.nodes) x *= k;
      return out;
    case SpectralMeasure::Rep::Moments:
      throw RepresentationMismatch(
          "rescaling a moment list needs an exact rational factor");
  }
  throw InvalidParameter("unknown representation");
}

SpectralMeasure rescale_measure(const SpectralMeasure& m, const Rational& k) {
  require(k > 0, "rescale factor must be positive");
  if (m.rep != SpectralMeasure::Rep::Moments) return rescale_measure(m, to_double(k));
  SpectralMeasure out = m;
  Rational power = 1;
  for (std::size_t n = 0; n < out.moments.size(); ++n) {
    out.moments[n] *= power;
    power *= k;
  }
  return out;
}

SpectralMeasure to_grid(const SpectralMeasure& m, double step) {
  require(step > 0, "grid step must be positive");
  if (m.rep == SpectralMeasure::Rep::Grid) return m;
  if (m.rep != SpectralMeasure::Rep::Density)
    throw RepresentationMismatch("to_grid needs a density or grid representation");
  auto [a, b] = support(m);
  std::size_t cells = (std::size_t)std::ceil((b - a) / step - 1e-12);
  if (cells == 0) cells = 1;
  SpectralMeasure out;
  out.rep = SpectralMeasure::Rep::Grid;
  out.lo = a;
  out.step = step;
  out.values.resize(cells);
  double prev = 0.0;  // cdf_at(m, a) == 0
  for (std::size_t i = 0; i < cells; ++i) {
    double right = a + step * (double)(i + 1);
    double next = (i + 1 == cells) ? 1.0 : cdf_at(m, right);
    out.values[i] = (next - prev) / step;
    prev = next;
  }
  return out;
}

namespace {

SpectralMeasure convolve_grids(const SpectralMeasure& a, const SpectralMeasure& b) {
  if (std::abs(a.step - b.step) > 1e-12 * std::max(a.step, b.step))
    throw RepresentationMismatch("grid convolution needs matching steps");
  const double h = a.step;
  const std::size_t na = a.values.size(), nb = b.values.size();
  SpectralMeasure out;
  out.rep = SpectralMeasure::Rep::Grid;
  out.lo = a.lo + b.lo;
  out.step = h;
  out.values.assign(na + nb, 0.0);
  // Summing one cell-uniform block from each factor gives a triangular bump
  // of width 2h centred on a cell boundary of the output grid; its mass
  // splits evenly between the two adjacent cells.
  for (std::size_t i = 0; i < na; ++i) {
    const double ma = a.values[i] * h;
    if (ma == 0.0) continue;
    for (std::size_t j = 0; j < nb; ++j) {
      const double mass = ma * b.values[j] * h;
      out.values[i + j] += 0.5 * mass;
      out.values[i + j + 1] += 0.5 * mass;
    }
  }
  for (double& v : out.values) v /= h;
  return out;
}

bool grid_convertible(const SpectralMeasure& m) {
  return m.rep == SpectralMeasure::Rep::Density || m.rep == SpectralMeasure::Rep::Grid;
}

bool is_point_mass_at_zero(const SpectralMeasure& m) {
  return m.rep == SpectralMeasure::Rep::Discrete && m.nodes.size() == 1 && m.nodes[0] == 0.0 &&
         m.weights[0] == 1.0;
}

}  // namespace

SpectralMeasure convolve(const SpectralMeasure& a, const SpectralMeasure& b,
                         const RunConfig& cfg) {
  if (is_point_mass_at_zero(b)) return a;
  if (is_point_mass_at_zero(a)) return b;
  if (a.rep == SpectralMeasure::Rep::Moments && b.rep == SpectralMeasure::Rep::Moments) {
    const std::size_t len = std::min(a.moments.size(), b.moments.size());
    std::vector<Rational> out(len, Rational(0));
    for (std::size_t n = 0; n < len; ++n)
      for (std::size_t j = 0; j <= n; ++j)
        out[n] += Rational(binomial((unsigned)n, (unsigned)j)) * a.moments[j] * b.moments[n - j];
    return measure_from_moments(std::move(out));
  }
  if (a.rep == SpectralMeasure::Rep::Discrete && b.rep == SpectralMeasure::Rep::Discrete) {
    std::vector<std::pair<double, double>> atoms;
    atoms.reserve(a.nodes.size() * b.nodes.size());
    for (std::size_t i = 0; i < a.nodes.size(); ++i)
      for (std::size_t j = 0; j < b.nodes.size(); ++j)
        atoms.emplace_back(a.nodes[i] + b.nodes[j], a.weights[i] * b.weights[j]);
    std::sort(atoms.begin(), atoms.end());
    std::vector<double> nodes, weights;
    for (auto [x, w] : atoms) {
      if (!nodes.empty() && nodes.back() == x)
        weights.back() += w;
      else {
        nodes.push_back(x);
        weights.push_back(w);
      }
    }
    return measure_from_discrete(std::move(nodes), std::move(weights));
  }
  if (grid_convertible(a) && grid_convertible(b)) {
    double step = cfg.grid_step;
    if (a.rep == SpectralMeasure::Rep::Grid) step = a.step;
    if (b.rep == SpectralMeasure::Rep::Grid) step = b.step;
    return convolve_grids(to_grid(a, step), to_grid(b, step));
  }
  throw RepresentationMismatch("convolution needs matching representations");
}

namespace {

// Integrates x^k against a grid via its cumulative mass function:
//   mu_k = hi^k F(hi) - k * integral of x^(k-1) F(x) dx,
// with the integral done by composite Simpson on the grid nodes.  The node
// values of F are exact sums of cell masses, so sqrt-type edge singularities
// in the density cost nothing in accuracy.
std::vector<double> grid_moments(const SpectralMeasure& g, int up_to) {
  const std::size_t n = g.values.size();
  std::vector<double> cumulative(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    cumulative[i + 1] = cumulative[i] + g.values[i] * g.step;
  const double hi = g.lo + g.step * (double)n;
  std::vector<double> out((std::size_t)up_to + 1, 0.0);
  out[0] = cumulative[n];
  std::vector<double> integrand(n + 1);
  for (int k = 1; k <= up_to; ++k) {
    for (std::size_t i = 0; i <= n; ++i) {
      double x = g.lo + g.step * (double)i;
      integrand[i] = std::pow(x, k - 1) * cumulative[i];
    }
    out[(std::size_t)k] = std::pow(hi, k) * cumulative[n] - k * simpson(integrand, g.step);
  }
  return out;
}

}  // namespace

std::vector<double> moments_of(const SpectralMeasure& m, int up_to, const RunConfig& cfg) {
  require(up_to >= 0, "moment order must be >= 0");
  switch (m.rep) {
    case SpectralMeasure::Rep::Moments: {
      if ((std::size_t)up_to >= m.moments.size())
        throw InvalidParameter("moment list is shorter than the requested order");
      std::vector<double> out((std::size_t)up_to + 1);
      for (int k = 0; k <= up_to; ++k) out[(std::size_t)k] = to_double(m.moments[(std::size_t)k]);
      return out;
    }
    case SpectralMeasure::Rep::Discrete: {
      std::vector<double> out((std::size_t)up_to + 1, 0.0);
      for (std::size_t i = 0; i < m.nodes.size(); ++i) {
        double p = m.weights[i];
        for (int k = 0; k <= up_to; ++k) {
          out[(std::size_t)k] += p;
          p *= m.nodes[i];
        }
      }
      return out;
    }
    case SpectralMeasure::Rep::Density:
      return grid_moments(to_grid(m, cfg.grid_step), up_to);
    case SpectralMeasure::Rep::Grid:
      return grid_moments(m, up_to);
  }
  throw InvalidParameter("unknown representation");
}

std::vector<Rational> moments_exact(const SpectralMeasure& m, int up_to) {
  if (m.rep != SpectralMeasure::Rep::Moments)
    throw RepresentationMismatch("exact moments need the Moments representation");
  if ((std::size_t)up_to >= m.moments.size())
    throw InvalidParameter("moment list is shorter than the requested order");
  return std::vector<Rational>(m.moments.begin(), m.moments.begin() + up_to + 1);
}

Positivity positivity_on_interior(const SpectralMeasure& m, int samples) {
  require(samples >= 2, "positivity needs at least two samples");
  if (m.rep == SpectralMeasure::Rep::Discrete) {
    for (std::size_t i = 0; i < m.weights.size(); ++i)
      if (!(m.weights[i] > 0)) return {false, m.nodes[i]};
    return {true, 0.0};
  }
  if (m.rep == SpectralMeasure::Rep::Moments)
    throw RepresentationMismatch("positivity needs a density, grid or discrete measure");
  auto [a, b] = support(m);
  const double margin = 0.01 * (b - a) / 2.0;  // 1% of the half-width per side
  const double lo = a + margin, hi = b - margin;
  for (int i = 0; i < samples; ++i) {
    double x = lo + (hi - lo) * (double)i / (double)(samples - 1);
    if (!(density_at(m, x) > 0)) return {false, x};
  }
  return {true, 0.0};
}

void export_measure_csv(const SpectralMeasure& m, std::ostream& out, double grid_step) {
  switch (m.rep) {
    case SpectralMeasure::Rep::Moments:
      out << "order,numerator,denominator\n";
      for (std::size_t k = 0; k < m.moments.size(); ++k)
        out << k << "," << to_string(boost::multiprecision::numerator(m.moments[k])) << ","
            << to_string(boost::multiprecision::denominator(m.moments[k])) << "\n";
      return;
    case SpectralMeasure::Rep::Discrete:
      out << "x,value\n";
      for (std::size_t i = 0; i < m.nodes.size(); ++i)
        out << format_double(m.nodes[i]) << "," << format_double(m.weights[i]) << "\n";
      return;
    case SpectralMeasure::Rep::Density:
    case SpectralMeasure::Rep::Grid: {
      SpectralMeasure g = (m.rep == SpectralMeasure::Rep::Grid) ? m : to_grid(m, grid_step);
      out << "x,value\n";
      for (std::size_t i = 0; i < g.values.size(); ++i) {
        double x = g.lo + g.step * ((double)i + 0.5);
        out << format_double(x) << "," << format_double(g.values[i]) << "\n";
      }
      return;
    }
  }
}

}  // namespace cospectra
