#include "wmnorm/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "wmnorm/error.hpp"
#include "wmnorm/matrices.hpp"

namespace wmnorm {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_cartlidge(double l) {
  if (!(l < 2.0)) {
    throw ConditionViolated("Cartlidge condition violated at p=2 (l = " +
                            std::to_string(l) + " >= 2)");
  }
  if (!(l > 0.0)) {
    throw ConditionViolated("l must be positive (got " + std::to_string(l) +
                            ")");
  }
}

void require_covers_data(const WeightSequence& w, double l) {
  if (w.size() < 2) return;
  const double lt = ratio_profile(w).l_trunc;
  if (l < lt) {
    throw ConditionViolated("L too small for truncated data (l = " +
                            std::to_string(l) + " < l_trunc = " +
                            std::to_string(lt) + ")");
  }
}

}  // namespace

double Certificate::scale() const {
  double m = 0.0;
  for (double v : mu) m = std::max(m, v);
  return k + m;
}

double carry_term(const WeightSequence& w, std::size_t n, double mu_n) {
  const double alpha = w.ratio(n);
  const double beta = w.cumsum(n) / w.lambda(n + 1);
  return beta * beta * mu_n / (alpha * alpha - mu_n);
}

Certificate build_certificate(const WeightSequence& w, double l) {
  require_cartlidge(l);
  require_covers_data(w, l);
  const std::size_t n = w.size();

  Certificate cert;
  cert.l = l;
  cert.k = (2.0 - l) * (2.0 - l) / 4.0;
  cert.c = l * (2.0 - l) / 4.0;
  const double kc = cert.k + cert.c;

  cert.mu.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = w.ratio(i);
    // k + (k+c)(r - 1) == (k+c) r - c, exact at r = 1.
    const double mu = cert.k + kc * (r - 1.0);
    if (!(mu > 0.0) || !(mu < r * r)) {
      throw std::logic_error("certificate multiplier out of (0, r^2) at index " +
                             std::to_string(i));
    }
    cert.mu[i] = mu;
  }

  cert.slack34.resize(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    cert.slack34[i] = cert.mu[i + 1] - carry_term(w, i, cert.mu[i]) - cert.k;
  }
  const double r_last = w.ratio(n - 1);
  const double carry_last = n >= 2 ? carry_term(w, n - 2, cert.mu[n - 2]) : 0.0;
  cert.tail_slack = r_last * r_last - carry_last - cert.k;
  return cert;
}

Certificate build_certificate(const WeightSequence& w) {
  if (w.size() < 2) {
    throw std::invalid_argument(
        "N = 1 has no ratio differences; pass l explicitly");
  }
  return build_certificate(w, ratio_profile(w).l_trunc);
}

VertexDirection VertexLemmaCase::direction() const {
  const double a2 = alpha * alpha;
  if (mu == a2) {
    throw std::invalid_argument("vertex lemma is singular at mu == alpha^2");
  }
  return mu > a2 ? VertexDirection::upper : VertexDirection::lower;
}

double vertex_function(const VertexLemmaCase& c, double a_n) {
  const double d = c.alpha * a_n - c.beta * c.a_next;
  return d * d - c.mu * a_n * a_n;
}

double vertex_value(const VertexLemmaCase& c) {
  c.direction();
  return c.beta * c.beta * c.mu * c.a_next * c.a_next /
         (c.mu - c.alpha * c.alpha);
}

double vertex_point(const VertexLemmaCase& c) {
  c.direction();
  return c.alpha * c.beta * c.a_next / (c.alpha * c.alpha - c.mu);
}

bool check_vertex_lemma(const VertexLemmaCase& c, std::size_t samples,
                        std::uint64_t seed) {
  const VertexDirection dir = c.direction();
  const double vertex = vertex_value(c);
  const double center = vertex_point(c);
  const double spread = 1.0 + std::abs(center);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (std::size_t s = 0; s < samples; ++s) {
    const double a = s == 0 ? center : center + spread * normal(rng);
    const double f = vertex_function(c, a);
    const double mag = c.alpha * c.alpha * a * a +
                       c.beta * c.beta * c.a_next * c.a_next +
                       std::abs(c.mu) * a * a + std::abs(vertex);
    const double tol = 1e-12 * mag;
    const bool ok = dir == VertexDirection::upper ? f <= vertex + tol
                                                  : f >= vertex - tol;
    if (!ok) return false;
  }
  return true;
}

double lhs_36(double k, double c, double x, double y) {
  const double kc = k + c;
  const double m = kc * x - c;
  return kc * x * x + kc * x - m * y - kc * m - c;
}

double lhs_25(double k, double c, double l, double x) {
  const double kc = k + c;
  return (k + 2.0 * c - l * kc - kc * kc) * x + c * l + c * kc - c;
}

double reduction_coefficient(double l) {
  const double k = (2.0 - l) * (2.0 - l) / 4.0;
  const double c = l * (2.0 - l) / 4.0;
  const double kc = k + c;
  return k + 2.0 * c - l * kc - kc * kc;
}

double reduction_constant(double l) {
  const double k = (2.0 - l) * (2.0 - l) / 4.0;
  const double c = l * (2.0 - l) / 4.0;
  return c * l + c * (k + c) - c;
}

bool ChainReport::ok() const {
  return violations.empty() && mu_in_range && mu1_equals_k &&
         max_recompute_error <= 1e-12 && max_equivalence_error <= 1e-12 &&
         max_y_coefficient <= 0.0 && min_lhs36 >= -tolerance &&
         min_lhs25 >= -tolerance && std::abs(coefficient) <= 1e-14 &&
         std::abs(constant - constant_expected) <= 1e-14;
}

ChainReport verify_34_chain(const Certificate& cert, const WeightSequence& w) {
  const std::size_t n = w.size();
  if (cert.mu.size() != n || cert.slack34.size() + 1 != n) {
    throw std::invalid_argument("certificate does not match the weights");
  }
  const double k = cert.k;
  const double c = cert.c;
  const double l = cert.l;

  ChainReport rep;
  rep.tolerance = cert.tolerance();
  rep.coefficient = reduction_coefficient(l);
  rep.constant = reduction_constant(l);
  rep.constant_expected = c * l / 2.0;
  rep.mu1_equals_k = cert.mu[0] == k;
  rep.max_y_coefficient = -kInf;
  rep.min_lhs36 = kInf;
  rep.min_lhs25 = kInf;
  rep.min_slack34 = kInf;

  const double scale = cert.scale();
  // mu from the raw prefix sums in the (k+c) Lambda/lambda - c order.
  auto mu_raw = [&](std::size_t i) {
    return (k + c) * (w.cumsum(i) / w.lambda(i)) - c;
  };

  for (std::size_t i = 0; i < n; ++i) {
    const double r = w.ratio(i);
    if (!(cert.mu[i] > 0.0 && cert.mu[i] < r * r)) rep.mu_in_range = false;
    rep.max_y_coefficient =
        std::max(rep.max_y_coefficient, -((k + c) * r - c));
    rep.min_lhs25 = std::min(rep.min_lhs25, lhs_25(k, c, l, r));
  }

  rep.slack34.resize(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double a = w.cumsum(i) / w.lambda(i);
    const double b = w.cumsum(i) / w.lambda(i + 1);
    const double mu_i = mu_raw(i);
    const double s = mu_raw(i + 1) - b * b / (a * a / mu_i - 1.0) - k;
    rep.slack34[i] = s;
    rep.min_slack34 = std::min(rep.min_slack34, s);
    rep.max_recompute_error = std::max(
        rep.max_recompute_error, std::abs(s - cert.slack34[i]) / scale);
    if (s < -rep.tolerance) rep.violations.push_back({i, s});

    const double x = w.ratio(i);
    const double y = w.ratio(i + 1);
    const double q36 = lhs_36(k, c, x, y);
    rep.min_lhs36 = std::min(rep.min_lhs36, q36);
    const double lhs = cert.slack34[i] * (x * x - cert.mu[i]);
    const double rhs = (y - 1.0) * q36;
    const double mag = y * (x * x + x * y + 1.0);
    rep.max_equivalence_error =
        std::max(rep.max_equivalence_error, std::abs(lhs - rhs) / mag);
  }

  const double a_last = w.cumsum(n - 1) / w.lambda(n - 1);
  double carry = 0.0;
  if (n >= 2) {
    const double a = w.cumsum(n - 2) / w.lambda(n - 2);
    const double b = w.cumsum(n - 2) / w.lambda(n - 1);
    carry = b * b / (a * a / mu_raw(n - 2) - 1.0);
  }
  rep.tail_slack = a_last * a_last - carry - k;
  rep.max_recompute_error =
      std::max(rep.max_recompute_error,
               std::abs(rep.tail_slack - cert.tail_slack) / std::max(scale, a_last * a_last));
  if (rep.tail_slack < -rep.tolerance) {
    rep.violations.push_back({n - 1, rep.tail_slack});
  }
  if (n == 1) rep.min_lhs36 = 0.0;
  return rep;
}

double target_form(const WeightSequence& w, std::span<const double> a) {
  const std::size_t n = w.size();
  if (a.size() != n) throw std::invalid_argument("dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double d =
        w.ratio(i) * a[i] - (w.cumsum(i) / w.lambda(i + 1)) * a[i + 1];
    s += d * d;
  }
  const double last = w.ratio(n - 1) * a[n - 1];
  return s + last * last;
}

QuadraticBoundReport verify_quadratic_bound(const WeightSequence& w, double l,
                                            std::size_t trials,
                                            std::uint64_t seed) {
  require_cartlidge(l);
  require_covers_data(w, l);
  const std::size_t n = w.size();

  QuadraticBoundReport rep;
  rep.l = l;
  rep.k_bound = (2.0 - l) * (2.0 - l) / 4.0;
  rep.norm_bound = 2.0 / (2.0 - l);
  rep.trials = trials;
  rep.min_ratio = kInf;

  std::vector<double> a(n);
  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(seed + t);
    std::normal_distribution<double> normal(0.0, 1.0);
    double sq = 0.0;
    for (double& v : a) {
      v = normal(rng);
      sq += v * v;
    }
    const double lhs = target_form(w, a);
    const double rhs = rep.k_bound * sq;
    rep.min_ratio = std::min(rep.min_ratio, lhs / sq);
    if (lhs < rhs - 1e-9 * std::max(lhs, rhs)) {
      rep.violations.push_back({a, lhs, rhs});
    }
  }

  rep.lambda_min = eigen_extreme(build_gram_inverse(w), Extreme::min);
  rep.sigma_max = power_norm(LowerTriangularMean(w));
  rep.spectral_ok = rep.lambda_min.value >= rep.k_bound - 1e-10;
  rep.norm_ok = rep.sigma_max.value <= rep.norm_bound * (1.0 + 1e-12);
  return rep;
}

}  // namespace wmnorm
