#include "wmnorm/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace wmnorm {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double matrix_scale(const TridiagonalSym& t) {
  double d = 0.0;
  double e = 0.0;
  for (double v : t.diag()) d = std::max(d, std::abs(v));
  for (double v : t.offdiag()) e = std::max(e, std::abs(v));
  return d + 2.0 * e;
}

double norm2(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

void require_tol(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
}

}  // namespace

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::sturm_bisection: return "sturm_bisection";
    case Method::power_iteration: return "power_iteration";
    case Method::dense_charpoly: return "dense_charpoly";
  }
  return "unknown";
}

Interval gershgorin(const TridiagonalSym& t) {
  const auto& d = t.diag();
  const auto& e = t.offdiag();
  Interval g{std::numeric_limits<double>::infinity(),
             -std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < t.size(); ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(e[i - 1]);
    if (i + 1 < t.size()) radius += std::abs(e[i]);
    g.lo = std::min(g.lo, d[i] - radius);
    g.hi = std::max(g.hi, d[i] + radius);
  }
  return g;
}

std::size_t sturm_count(const TridiagonalSym& t, double x) {
  const auto& d = t.diag();
  const auto& e = t.offdiag();
  const double floor = kEps * matrix_scale(t);
  const double pivmin = floor > 0.0 ? floor : std::numeric_limits<double>::min();
  std::size_t count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    q = d[i] - x - (i > 0 ? e[i - 1] * e[i - 1] / q : 0.0);
    // A vanishing pivot keeps its sign; exact zero counts as nonnegative so
    // that an eigenvalue equal to x is not "strictly less".
    if (std::abs(q) < pivmin) q = std::signbit(q) && q != 0.0 ? -pivmin : pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

SpectralResult eigenvalue_at(const TridiagonalSym& t, std::size_t index,
                             double tol) {
  require_tol(tol);
  const std::size_t n = t.size();
  if (index >= n) throw std::out_of_range("eigenvalue index out of range");
  if (n == 1) return SpectralResult{t.diag()[0], Method::sturm_bisection, 0, 0.0};

  const Interval g = gershgorin(t);
  const double pad = 4.0 * kEps * std::max(matrix_scale(t), 1.0);
  // count(lo) <= index < count(hi)
  double lo = g.lo - pad;
  double hi = g.hi + pad;
  std::size_t iterations = 0;
  while (hi - lo >= tol) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    ++iterations;
    if (sturm_count(t, mid) > index) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const double value = lo + 0.5 * (hi - lo);
  const double half = std::nextafter(std::max(value - lo, hi - value),
                                     std::numeric_limits<double>::infinity());
  return SpectralResult{value, Method::sturm_bisection, iterations, half,
                        hi - lo < tol};
}

SpectralResult eigen_extreme(const TridiagonalSym& t, Extreme which,
                             double tol) {
  return eigenvalue_at(t, which == Extreme::min ? 0 : t.size() - 1, tol);
}

SpectralResult charpoly_extreme(const TridiagonalSym& t, Extreme which,
                                double tol, std::size_t max_iter) {
  require_tol(tol);
  const auto& d = t.diag();
  const auto& e = t.offdiag();
  const std::size_t n = t.size();
  const Interval g = gershgorin(t);
  const double scale = std::max(matrix_scale(t), 1.0);
  double x = which == Extreme::min ? g.lo - 1e-3 * scale : g.hi + 1e-3 * scale;

  // p_k = (d_k - x) p_{k-1} - e_{k-1}^2 p_{k-2}, differentiated alongside.
  auto newton_step = [&](double at) {
    double p_prev = 1.0, p = d[0] - at;
    double dp_prev = 0.0, dp = -1.0;
    for (std::size_t k = 1; k < n; ++k) {
      const double e2 = e[k - 1] * e[k - 1];
      const double p_next = (d[k] - at) * p - e2 * p_prev;
      const double dp_next = -p + (d[k] - at) * dp - e2 * dp_prev;
      p_prev = p;
      p = p_next;
      dp_prev = dp;
      dp = dp_next;
      const double mag = std::max(std::abs(p), std::abs(dp));
      if (mag > 1e100) {
        p *= 1e-100; p_prev *= 1e-100; dp *= 1e-100; dp_prev *= 1e-100;
      } else if (mag < 1e-100 && mag > 0.0) {
        p *= 1e100; p_prev *= 1e100; dp *= 1e100; dp_prev *= 1e100;
      }
    }
    return dp == 0.0 ? 0.0 : p / dp;
  };

  SpectralResult r{x, Method::dense_charpoly, 0, 0.0, false};
  for (std::size_t it = 0; it < max_iter; ++it) {
    const double step = newton_step(x);
    x -= step;
    r.iterations = it + 1;
    r.uncertainty = std::abs(step);
    if (std::abs(step) <= tol * std::max(std::abs(x), 1.0)) {
      r.converged = true;
      break;
    }
  }
  r.value = x;
  return r;
}

SpectralResult power_norm(const LowerTriangularMean& m, double tol,
                          std::size_t max_iter) {
  const std::vector<double> ones(m.size(), 1.0);
  return power_norm(m, ones, tol, max_iter);
}

SpectralResult power_norm(const LowerTriangularMean& m,
                          std::span<const double> start, double tol,
                          std::size_t max_iter) {
  require_tol(tol);
  if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  if (start.size() != m.size()) {
    throw std::invalid_argument("start vector has wrong dimension");
  }
  const double n0 = norm2(start);
  if (!(n0 > 0.0)) throw std::invalid_argument("start vector is zero");

  std::vector<double> x(start.begin(), start.end());
  for (double& v : x) v /= n0;

  SpectralResult r{0.0, Method::power_iteration, 0, 0.0, false};
  double rayleigh = 0.0;
  for (std::size_t it = 0; it < max_iter; ++it) {
    const std::vector<double> y = m.apply_transpose(m.apply(x));
    const double next = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
    r.iterations = it + 1;
    r.uncertainty = std::abs(next - rayleigh);
    const bool done = it > 0 && r.uncertainty < tol * std::abs(next);
    rayleigh = next;
    if (done) {
      r.converged = true;
      break;
    }
    const double ny = norm2(y);
    if (!(ny > 0.0)) break;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = y[i] / ny;
  }
  r.value = std::sqrt(rayleigh);
  return r;
}

}  // namespace wmnorm
