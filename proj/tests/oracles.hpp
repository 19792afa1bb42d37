#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the Sturm, power-iteration or certificate code paths.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

/// Real roots of x^3 + p2 x^2 + p1 x + p0 (three real roots assumed), by the
/// trigonometric form of Cardano's formula, polished with Newton steps.
inline std::array<double, 3> cubic_roots(double p2, double p1, double p0) {
  const double shift = p2 / 3.0;
  const double p = p1 - p2 * p2 / 3.0;
  const double q = 2.0 * p2 * p2 * p2 / 27.0 - p2 * p1 / 3.0 + p0;
  const double m = 2.0 * std::sqrt(-p / 3.0);
  const double theta = std::acos(3.0 * q / (p * m)) / 3.0;
  std::array<double, 3> r{};
  for (int k = 0; k < 3; ++k) {
    double x = m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0) - shift;
    for (int it = 0; it < 4; ++it) {
      const double f = ((x + p2) * x + p1) * x + p0;
      const double df = (3.0 * x + 2.0 * p2) * x + p1;
      if (df != 0.0) x -= f / df;
    }
    r[k] = x;
  }
  std::sort(r.begin(), r.end());
  return r;
}

/// Dense weighted mean matrix straight from b_ij = lambda_j / Lambda_i, with
/// Lambda accumulated in long double.
inline Eigen::MatrixXd mean_matrix(const std::vector<double>& lambdas) {
  const auto n = static_cast<Eigen::Index>(lambdas.size());
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
  long double acc = 0.0L;
  for (Eigen::Index i = 0; i < n; ++i) {
    acc += lambdas[i];
    for (Eigen::Index j = 0; j <= i; ++j) {
      b(i, j) = static_cast<double>(lambdas[j] / acc);
    }
  }
  return b;
}

inline double largest_singular_value(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues()(0);
}

inline Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

inline std::vector<double> gaussian_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = normal(rng);
  return v;
}

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  long double s = 0.0L;
  for (std::size_t i = 0; i < a.size(); ++i) s += (long double)a[i] * b[i];
  return static_cast<double>(s);
}

}  // namespace oracle
