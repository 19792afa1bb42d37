#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wmnorm/tridiagonal.hpp"

namespace wmnorm {

/// Matrix of b^2 x_1^2 + sum (a x_n - b x_{n+1})^2 + a^2 x_N^2: constant
/// diagonal a^2 + b^2 and off-diagonal -ab.
struct FttMatrix {
  double a = 1.0;
  double b = 1.0;
  TridiagonalSym matrix;

  std::size_t size() const noexcept { return matrix.size(); }
};

FttMatrix make_ftt_matrix(double a, double b, std::size_t n);

/// a^2 + b^2 + 2ab cos(k pi/(N+1)), k = 1..N, ascending.
std::vector<double> ftt_eigenvalues_closed_form(double a, double b,
                                                std::size_t n);

/// b^2 x_1^2 + sum_{n<N} (a x_n - b x_{n+1})^2 + a^2 x_N^2.
double ftt_form(double a, double b, std::span<const double> x);

struct FttConstants {
  double t = 0.0;      // pi / (N + 1)
  double lower = 0.0;  // a^2 + b^2 - 2ab cos t
  double upper = 0.0;  // a^2 + b^2 + 2ab cos t
};

FttConstants ftt_constants(double a, double b, std::size_t n);

struct FttViolation {
  std::vector<double> witness;
  double lower = 0.0;
  double middle = 0.0;
  double upper = 0.0;
};

struct FttReport {
  std::size_t n = 0;
  double a = 1.0;
  double b = 1.0;
  std::size_t trials = 0;
  FttConstants constants;
  double min_ratio = 0.0;  // min of middle / |x|^2 over trials
  double max_ratio = 0.0;
  std::vector<FttViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// lower * |x|^2 <= ftt_form(x) <= upper * |x|^2 for one vector, with
/// -1e-10 * scale slack. Zero vectors pass trivially.
bool ftt_bounds_hold(double a, double b, std::span<const double> x);

/// Checks the two-sided bound on `trials` Gaussian vectors; trial t uses
/// seed + t. At a = b = 1 the constants are 2(1 -/+ cos t).
FttReport verify_ftt_inequalities(std::size_t n, double a, double b,
                                  std::size_t trials, std::uint64_t seed);

enum class SineSign { plus, minus };

/// mu_n = a^2 +/- ab sin((n+1)t)/sin(nt), t = pi/(N+1); mu_N = a^2 up to
/// rounding since sin((N+1)t) = 0.
struct SineCertificate {
  double t = 0.0;
  SineSign sign = SineSign::plus;
  std::vector<double> mu;
};

SineCertificate build_sine_certificate(double a, double b, std::size_t n,
                                       SineSign sign);

struct SineCheckReport {
  SineCertificate certificate;
  /// Coefficient of x_n^2 after applying the completed square at every
  /// n < N and summing: b^2 + mu_1, then mu_n + carry_{n-1}, then
  /// a^2 + carry_{N-1}.
  std::vector<double> coefficients;
  double target = 0.0;          // a^2 + b^2 +/- 2ab cos t
  double max_deviation = 0.0;   // max |coef - target| / (a + b)^2
  bool directions_ok = true;    // mu_n > a^2 (plus) / < a^2 (minus), n < N

  bool ok() const { return directions_ok && max_deviation <= 1e-12; }
};

/// Requires n >= 2.
SineCheckReport sine_certificate_check(double a, double b, std::size_t n,
                                       SineSign sign);

}  // namespace wmnorm
