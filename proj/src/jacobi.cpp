#include "cospectra/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "cospectra/format.hpp"

namespace cospectra {

namespace {

void check_positive(const std::vector<Rational>& entries, const char* what) {
  for (const Rational& r : entries)
    if (r <= 0) throw InvalidParameter(std::string(what) + " entries must be positive");
}

// Canonical eventually-periodic form: primitive period, shortest prefix.
void canonicalize(std::vector<Rational>& prefix, std::vector<Rational>& period) {
  std::size_t p = period.size();
  for (std::size_t q = 1; q <= p; ++q) {
    if (p % q != 0) continue;
    bool tiles = true;
    for (std::size_t i = q; i < p && tiles; ++i) tiles = period[i] == period[i - q];
    if (tiles) {
      period.resize(q);
      break;
    }
  }
  while (!prefix.empty() && prefix.back() == period.back()) {
    prefix.pop_back();
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
  }
}

}  // namespace

JacobiSpec::JacobiSpec() : sq_period{Rational(1)} {}

JacobiSpec::JacobiSpec(std::vector<Rational> prefix, std::vector<Rational> period,
                       Rational scale_)
    : sq_prefix(std::move(prefix)), sq_period(std::move(period)), scale(std::move(scale_)) {
  if (sq_period.empty()) throw InvalidParameter("jacobi period must be non-empty");
  check_positive(sq_prefix, "jacobi prefix");
  check_positive(sq_period, "jacobi period");
  if (scale <= 0) throw InvalidParameter("jacobi scale must be positive");
}

const Rational& JacobiSpec::sq_at(long long i) const {
  if (i < 0) throw InvalidParameter("jacobi entry index must be >= 0");
  if (i < (long long)sq_prefix.size()) return sq_prefix[(std::size_t)i];
  return sq_period[(std::size_t)((i - (long long)sq_prefix.size()) % (long long)sq_period.size())];
}

double JacobiSpec::entry(long long i) const {
  return to_double(scale) * std::sqrt(to_double(sq_at(i)));
}

JacobiSpec JacobiSpec::tail(long long n) const {
  if (n < 0) throw InvalidParameter("tail index must be >= 0");
  JacobiSpec out;
  out.scale = scale;
  if (n <= (long long)sq_prefix.size()) {
    out.sq_prefix.assign(sq_prefix.begin() + (std::ptrdiff_t)n, sq_prefix.end());
    out.sq_period = sq_period;
    return out;
  }
  long long shift = (n - (long long)sq_prefix.size()) % (long long)sq_period.size();
  out.sq_prefix.clear();
  out.sq_period.assign(sq_period.begin() + (std::ptrdiff_t)shift, sq_period.end());
  out.sq_period.insert(out.sq_period.end(), sq_period.begin(),
                       sq_period.begin() + (std::ptrdiff_t)shift);
  return out;
}

bool JacobiSpec::same_operator(const JacobiSpec& other) const {
  auto folded = [](const JacobiSpec& j) {
    Rational s2 = j.scale * j.scale;
    std::vector<Rational> prefix = j.sq_prefix, period = j.sq_period;
    for (Rational& r : prefix) r *= s2;
    for (Rational& r : period) r *= s2;
    canonicalize(prefix, period);
    return std::make_pair(prefix, period);
  };
  return folded(*this) == folded(other);
}

JacobiSpec free_jacobi() { return JacobiSpec({}, {Rational(1)}); }

JacobiSpec jacobi_a(const Rational& a_squared) {
  if (a_squared <= 0) throw InvalidParameter("jacobi_a needs a positive squared entry");
  return JacobiSpec({a_squared}, {Rational(1)});
}

JacobiSpec jacobi_from_branching(const BranchingSeq& b, long long offset) {
  BranchingSeq t = b.tail(offset);
  std::vector<Rational> prefix, period;
  prefix.reserve(t.prefix.size());
  for (int d : t.prefix) prefix.emplace_back(d);
  for (int d : t.period) period.emplace_back(d);
  return JacobiSpec(std::move(prefix), std::move(period));
}

JacobiSpec scaled(JacobiSpec j, const Rational& k) {
  if (k <= 0) throw InvalidParameter("jacobi scale must be positive");
  j.scale *= k;
  return j;
}

Tridiagonal truncate(const JacobiSpec& j, int n) {
  if (n < 1) throw InvalidParameter("truncation size must be >= 1");
  Tridiagonal t;
  t.off.resize((std::size_t)n - 1);
  for (int i = 0; i + 1 < n; ++i) t.off[(std::size_t)i] = j.entry(i);
  return t;
}

namespace {

constexpr double kPivotFloor = 1e-280;

// Number of eigenvalues of the tridiagonal strictly below x (Sturm count via
// the LDL^T pivot recurrence; zero diagonal).
int sturm_count(const std::vector<double>& off, double x) {
  int count = 0;
  double q = -x;
  if (q > -kPivotFloor && q < kPivotFloor) q = -kPivotFloor;
  if (q < 0) ++count;
  for (double b : off) {
    q = -x - b * b / q;
    if (q > -kPivotFloor && q < kPivotFloor) q = -kPivotFloor;
    if (q < 0) ++count;
  }
  return count;
}

double gershgorin_radius(const std::vector<double>& off) {
  double r = 0.0;
  for (std::size_t i = 0; i + 1 <= off.size(); ++i) {
    double row = off[i] + (i > 0 ? off[i - 1] : 0.0);
    r = std::max(r, row);
  }
  if (!off.empty()) r = std::max(r, off.back());
  return r;
}

// k-th smallest eigenvalue (0-indexed) by bisection.
double bisect_kth(const std::vector<double>& off, int k, double lo, double hi, double tol) {
  while (hi - lo > tol) {
    double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) break;  // hit floating-point resolution
    if (sturm_count(off, mid) >= k + 1)
      hi = mid;
    else
      lo = mid;
  }
  return lo + (hi - lo) / 2.0;
}

}  // namespace

std::vector<double> tridiagonal_eigenvalues(const Tridiagonal& t, double tol) {
  if (tol <= 0) throw InvalidParameter("eigenvalue tolerance must be positive");
  const int n = t.size();
  const double r = gershgorin_radius(t.off) + 1.0;
  std::vector<double> out((std::size_t)n);
  for (int k = 0; k < n; ++k) out[(std::size_t)k] = bisect_kth(t.off, k, -r, r, tol);
  return out;
}

double tridiagonal_top(const Tridiagonal& t, double tol) {
  const double r = gershgorin_radius(t.off) + 1.0;
  return bisect_kth(t.off, t.size() - 1, -r, r, tol);
}

double tridiagonal_bottom(const Tridiagonal& t, double tol) {
  const double r = gershgorin_radius(t.off) + 1.0;
  return bisect_kth(t.off, 0, -r, r, tol);
}

EigenSystem eigen(const Tridiagonal& t, double tol) {
  EigenSystem es;
  es.eigenvalues = tridiagonal_eigenvalues(t, tol);
  es.first_components.resize(es.eigenvalues.size());
  const std::vector<double>& b = t.off;
  for (std::size_t k = 0; k < es.eigenvalues.size(); ++k) {
    // Orthonormal-polynomial recurrence: the eigenvector at lambda is
    // proportional to (p_0(lambda), ..., p_{n-1}(lambda)) with p_0 = 1.
    const double lambda = es.eigenvalues[k];
    double sum = 1.0, prev = 0.0, cur = 1.0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      double next = (lambda * cur - (j > 0 ? b[j - 1] : 0.0) * prev) / b[j];
      prev = cur;
      cur = next;
      sum += cur * cur;
    }
    es.first_components[k] = 1.0 / sum;
  }
  return es;
}

SpectralMeasure quadrature_measure(const JacobiSpec& j, int n, double tol) {
  EigenSystem es = eigen(truncate(j, n), tol);
  return measure_from_discrete(std::move(es.eigenvalues), std::move(es.first_components));
}

std::vector<Rational> jacobi_moments(const JacobiSpec& j, int up_to) {
  if (up_to < 0) throw InvalidParameter("moment order must be >= 0");
  // c_k[i] = <J^k e0, e_i> / (a_0 ... a_{i-1}); then c_{k+1}[i] =
  // c_k[i-1] + sq(i) c_k[i+1] and moment k = scale^k c_k[0].
  std::vector<Rational> cur((std::size_t)up_to + 2, Rational(0)), nxt(cur);
  cur[0] = 1;
  std::vector<Rational> out((std::size_t)up_to + 1, Rational(0));
  out[0] = 1;
  Rational scale_pow = 1;
  for (int k = 1; k <= up_to; ++k) {
    scale_pow *= j.scale;
    for (int i = 0; i <= k && i <= up_to; ++i)
      nxt[(std::size_t)i] = (i > 0 ? cur[(std::size_t)i - 1] : Rational(0)) +
                            j.sq_at(i) * cur[(std::size_t)i + 1];
    std::swap(cur, nxt);
    out[(std::size_t)k] = scale_pow * cur[0];
  }
  return out;
}

std::vector<double> point_spectrum_ja(double a) {
  if (!(a > 0)) throw InvalidParameter("point_spectrum_ja needs a > 0");
  if (a <= std::sqrt(2.0)) return {};
  const double lambda = a * a / std::sqrt(a * a - 1.0);
  return {-lambda, lambda};
}

void export_eigensystem_csv(const EigenSystem& es, std::ostream& out) {
  out << "index,eigenvalue,weight\n";
  for (std::size_t k = 0; k < es.eigenvalues.size(); ++k)
    out << k << "," << format_double(es.eigenvalues[k]) << ","
        << format_double(es.first_components[k]) << "\n";
}

JacobiSpec parse_jacobi(const std::string& text) {
  std::string body = text;
  Rational scale_factor = 1;
  if (std::size_t star = text.find('*'); star != std::string::npos) {
    scale_factor = parse_rational(text.substr(0, star));
    if (scale_factor <= 0) throw ParseError("jacobi scale must be positive: " + text);
    body = text.substr(star + 1);
  }
  JacobiSpec spec;
  if (body == "free") {
    spec = free_jacobi();
  } else if (body.rfind("a2:", 0) == 0) {
    spec = jacobi_a(parse_rational(body.substr(3)));
  } else if (body.rfind("branching:", 0) == 0) {
    std::string args = body.substr(10);
    long long offset = 0;
    if (std::size_t at = args.find('@'); at != std::string::npos) {
      try {
        offset = std::stoll(args.substr(at + 1));
      } catch (const std::logic_error&) {
        throw ParseError("bad branching offset in: " + text);
      }
      args = args.substr(0, at);
    }
    GraphFamily f = parse_family("ssrt:" + args);
    spec = jacobi_from_branching(f.branching, offset);
  } else {
    throw ParseError("unknown jacobi spec: " + text +
                     " (expected free, a2:R, branching:B[@n], optionally K*...)");
  }
  return scale_factor == 1 ? spec : scaled(std::move(spec), scale_factor);
}

}  // namespace cospectra
