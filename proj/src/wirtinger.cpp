#include "wmnorm/wirtinger.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace wmnorm {
namespace {

void require_positive(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("a and b must be positive and finite");
  }
}

void require_dimension(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
}

double angle(std::size_t n) {
  return std::numbers::pi / static_cast<double>(n + 1);
}

}  // namespace

FttMatrix make_ftt_matrix(double a, double b, std::size_t n) {
  require_positive(a, b);
  require_dimension(n);
  return FttMatrix{a, b,
                   TridiagonalSym(std::vector<double>(n, a * a + b * b),
                                  std::vector<double>(n - 1, -a * b))};
}

std::vector<double> ftt_eigenvalues_closed_form(double a, double b,
                                                std::size_t n) {
  require_positive(a, b);
  require_dimension(n);
  const double t = angle(n);
  std::vector<double> out(n);
  for (std::size_t k = 1; k <= n; ++k) {
    out[k - 1] =
        a * a + b * b + 2.0 * a * b * std::cos(static_cast<double>(k) * t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double ftt_form(double a, double b, std::span<const double> x) {
  if (x.empty()) return 0.0;
  const std::size_t n = x.size();
  double s = b * b * x[0] * x[0] + a * a * x[n - 1] * x[n - 1];
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double d = a * x[i] - b * x[i + 1];
    s += d * d;
  }
  return s;
}

FttConstants ftt_constants(double a, double b, std::size_t n) {
  require_positive(a, b);
  require_dimension(n);
  const double t = angle(n);
  const double cross = 2.0 * a * b * std::cos(t);
  return FttConstants{t, a * a + b * b - cross, a * a + b * b + cross};
}

namespace {

struct Evaluated {
  double lower, middle, upper;
  bool ok;
};

Evaluated evaluate(double a, double b, const FttConstants& k,
                   std::span<const double> x) {
  double sq = 0.0;
  for (double v : x) sq += v * v;
  const double middle = ftt_form(a, b, x);
  const double lower = k.lower * sq;
  const double upper = k.upper * sq;
  const double tol = 1e-10 * std::max({upper, middle, 1e-300});
  return {lower, middle, upper,
          lower <= middle + tol && middle <= upper + tol};
}

}  // namespace

bool ftt_bounds_hold(double a, double b, std::span<const double> x) {
  if (x.empty()) return true;
  return evaluate(a, b, ftt_constants(a, b, x.size()), x).ok;
}

FttReport verify_ftt_inequalities(std::size_t n, double a, double b,
                                  std::size_t trials, std::uint64_t seed) {
  FttReport rep;
  rep.n = n;
  rep.a = a;
  rep.b = b;
  rep.trials = trials;
  rep.constants = ftt_constants(a, b, n);
  rep.min_ratio = std::numeric_limits<double>::infinity();
  rep.max_ratio = -std::numeric_limits<double>::infinity();

  std::vector<double> x(n);
  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(seed + t);
    std::normal_distribution<double> normal(0.0, 1.0);
    double sq = 0.0;
    for (double& v : x) {
      v = normal(rng);
      sq += v * v;
    }
    const Evaluated e = evaluate(a, b, rep.constants, x);
    rep.min_ratio = std::min(rep.min_ratio, e.middle / sq);
    rep.max_ratio = std::max(rep.max_ratio, e.middle / sq);
    if (!e.ok) rep.violations.push_back({x, e.lower, e.middle, e.upper});
  }
  return rep;
}

SineCertificate build_sine_certificate(double a, double b, std::size_t n,
                                       SineSign sign) {
  require_positive(a, b);
  if (n < 2) throw std::invalid_argument("sine certificate needs n >= 2");
  SineCertificate cert;
  cert.t = angle(n);
  cert.sign = sign;
  cert.mu.resize(n);
  const double s = sign == SineSign::plus ? 1.0 : -1.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double ratio = std::sin(static_cast<double>(i + 1) * cert.t) /
                         std::sin(static_cast<double>(i) * cert.t);
    cert.mu[i - 1] = a * a + s * a * b * ratio;
  }
  return cert;
}

SineCheckReport sine_certificate_check(double a, double b, std::size_t n,
                                       SineSign sign) {
  SineCheckReport rep;
  rep.certificate = build_sine_certificate(a, b, n, sign);
  const auto& mu = rep.certificate.mu;
  const double a2 = a * a;
  const double b2 = b * b;
  const double cross = 2.0 * a * b * std::cos(rep.certificate.t);
  rep.target = sign == SineSign::plus ? a2 + b2 + cross : a2 + b2 - cross;

  // carry[i] = b^2 mu_i / (mu_i - a^2): the completed square at step i
  // bounds (a x_i - b x_{i+1})^2 - mu_i x_i^2 by carry[i] x_{i+1}^2.
  std::vector<double> carry(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double gap = mu[i] - a2;
    const bool right_way = sign == SineSign::plus ? gap > 0.0 : gap < 0.0;
    if (!right_way) rep.directions_ok = false;
    if (gap == 0.0 || !std::isfinite(gap)) {
      throw std::runtime_error("sine certificate degenerate at index " +
                               std::to_string(i));
    }
    carry[i] = b2 * mu[i] / gap;
  }

  rep.coefficients.resize(n);
  rep.coefficients[0] = b2 + mu[0];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    rep.coefficients[i] = mu[i] + carry[i - 1];
  }
  rep.coefficients[n - 1] = a2 + carry[n - 2];

  const double mag = (a + b) * (a + b);
  for (double coef : rep.coefficients) {
    rep.max_deviation =
        std::max(rep.max_deviation, std::abs(coef - rep.target) / mag);
  }
  return rep;
}

}  // namespace wmnorm
