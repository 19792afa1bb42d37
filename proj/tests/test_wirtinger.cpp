#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "wmnorm/matrices.hpp"
#include "wmnorm/spectral.hpp"
#include "wmnorm/wirtinger.hpp"

using namespace wmnorm;
using std::numbers::sqrt2;

TEST_CASE("FTT matrix entries") {
  const auto m = make_ftt_matrix(0.5, 3.0, 4);
  for (double d : m.matrix.diag()) CHECK(d == 9.25);
  for (double e : m.matrix.offdiag()) CHECK(e == -1.5);
  CHECK_THROWS_AS(make_ftt_matrix(0.0, 1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_ftt_matrix(1.0, -1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_ftt_matrix(1.0, 1.0, 0), std::invalid_argument);
}

TEST_CASE("closed-form eigenvalues: examples") {
  const auto e = ftt_eigenvalues_closed_form(1.0, 1.0, 3);
  REQUIRE(e.size() == 3);
  CHECK(std::abs(e[0] - (2.0 - sqrt2)) < 1e-15);
  CHECK(std::abs(e[1] - 2.0) < 1e-15);
  CHECK(std::abs(e[2] - (2.0 + sqrt2)) < 1e-15);

  const auto one = ftt_eigenvalues_closed_form(1.5, 2.0, 1);
  REQUIRE(one.size() == 1);
  CHECK(std::abs(one[0] - 6.25) < 1e-15);

  const auto f = ftt_eigenvalues_closed_form(1.0, 2.0, 5);
  CHECK(std::abs(f.front() - (5.0 - 2.0 * std::sqrt(3.0))) < 1e-14);
  const auto m = make_ftt_matrix(1.0, 2.0, 5);
  CHECK(std::abs(eigen_extreme(m.matrix, Extreme::min).value - f.front()) <
        1e-12);

  CHECK_THROWS_AS(ftt_eigenvalues_closed_form(-1.0, 1.0, 3),
                  std::invalid_argument);
}

TEST_CASE("closed form agrees with dense eigenvalues and is symmetric in a,b") {
  for (auto [a, b] : {std::pair{1.0, 1.0}, {1.0, 2.0}, {0.5, 3.0}}) {
    for (std::size_t n : {1, 2, 7, 30}) {
      const auto closed = ftt_eigenvalues_closed_form(a, b, n);
      const auto ev =
          oracle::symmetric_eigenvalues(dense(make_ftt_matrix(a, b, n).matrix));
      const auto swapped = ftt_eigenvalues_closed_form(b, a, n);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(std::abs(closed[i] - ev(i)) < 1e-12);
        CHECK(closed[i] == swapped[i]);
      }
    }
  }
}

TEST_CASE("middle expression on named vectors") {
  // (1, sqrt2, 1) spans the smallest eigenvalue of tridiag(-1, 2, -1).
  const std::vector<double> v{1.0, sqrt2, 1.0};
  CHECK(std::abs(ftt_form(1.0, 1.0, v) - (2.0 - sqrt2) * 4.0) < 1e-14);
  CHECK(ftt_bounds_hold(1.0, 1.0, v));

  const std::vector<double> ones{1.0, 1.0, 1.0};
  CHECK(ftt_form(1.0, 1.0, ones) == 2.0);
  const auto k = ftt_constants(1.0, 1.0, 3);
  CHECK(std::abs(3.0 * k.lower - 3.0 * (2.0 - sqrt2)) < 1e-14);
  CHECK(3.0 * k.lower <= 2.0);
  CHECK(ftt_bounds_hold(1.0, 1.0, ones));

  const std::vector<double> zero(5, 0.0);
  CHECK(ftt_form(2.0, 3.0, zero) == 0.0);
  CHECK(ftt_bounds_hold(2.0, 3.0, zero));

  // Quadratic form == x^T A x.
  const auto m = make_ftt_matrix(2.0, 3.0, 9);
  const auto x = oracle::gaussian_vector(9, 4);
  CHECK(std::abs(ftt_form(2.0, 3.0, x) - oracle::dot(x, m.matrix.apply(x))) <
        1e-12 * ftt_form(2.0, 3.0, x));
}

TEST_CASE("verify_ftt_inequalities: random vectors, a=b=1 specialises") {
  const auto rep = verify_ftt_inequalities(3, 1.0, 1.0, 2000, 9);
  CHECK(rep.ok());
  const double t = std::numbers::pi / 4.0;
  CHECK(std::abs(rep.constants.lower - 2.0 * (1.0 - std::cos(t))) < 1e-15);
  CHECK(std::abs(rep.constants.upper - 2.0 * (1.0 + std::cos(t))) < 1e-15);
  CHECK(rep.min_ratio >= rep.constants.lower - 1e-12);
  CHECK(rep.max_ratio <= rep.constants.upper + 1e-12);

  for (std::size_t n : {1, 2, 5, 64, 300}) {
    CHECK(verify_ftt_inequalities(n, 2.0, 3.0, 300, n).ok());
  }
}

TEST_CASE("sine eigenvectors attain the extremes for a = b") {
  for (std::size_t n : {2, 5, 40}) {
    const double t = std::numbers::pi / static_cast<double>(n + 1);
    const auto consts = ftt_constants(1.3, 1.3, n);
    for (std::size_t k : {std::size_t{1}, n}) {
      std::vector<double> v(n);
      double sq = 0.0;
      for (std::size_t i = 1; i <= n; ++i) {
        v[i - 1] = std::sin(static_cast<double>(i * k) * t);
        sq += v[i - 1] * v[i - 1];
      }
      const double ratio = ftt_form(1.3, 1.3, v) / sq;
      const double target = k == 1 ? consts.lower : consts.upper;
      CHECK(std::abs(ratio - target) < 1e-12);
    }
    const auto rep = verify_ftt_inequalities(n, 1.3, 1.3, 10000, 3);
    CHECK(rep.ok());
    CHECK(rep.min_ratio >= consts.lower - 1e-12);
    CHECK(rep.max_ratio <= consts.upper + 1e-12);
  }
}

TEST_CASE("sine certificate: a=b=1, N=3") {
  const auto plus = build_sine_certificate(1.0, 1.0, 3, SineSign::plus);
  REQUIRE(plus.mu.size() == 3);
  CHECK(std::abs(plus.mu[0] - (1.0 + sqrt2)) < 1e-15);
  CHECK(std::abs(plus.mu[1] - (1.0 + sqrt2 / 2.0)) < 1e-15);
  CHECK(std::abs(plus.mu[2] - 1.0) < 1e-15);

  const auto minus = build_sine_certificate(1.0, 1.0, 3, SineSign::minus);
  CHECK(std::abs(minus.mu[0] - (1.0 - sqrt2)) < 1e-15);
  CHECK(minus.mu[0] < 0.0);
  CHECK(std::abs(minus.mu[1] - (1.0 - sqrt2 / 2.0)) < 1e-15);
  CHECK(std::abs(minus.mu[2] - 1.0) < 1e-15);

  CHECK(sine_certificate_check(1.0, 1.0, 3, SineSign::plus).ok());
  CHECK(sine_certificate_check(1.0, 1.0, 3, SineSign::minus).ok());
  CHECK_THROWS_AS(build_sine_certificate(1.0, 1.0, 1, SineSign::plus),
                  std::invalid_argument);
}

TEST_CASE("sine certificate: n = 2 by hand") {
  // t = pi/3, cos t = 1/2, mu_1 = a^2 + ab * sin(2t)/sin(t) = a^2 + ab.
  const double a = 2.0, b = 3.0;
  const auto rep = sine_certificate_check(a, b, 2, SineSign::plus);
  REQUIRE(rep.coefficients.size() == 2);
  CHECK(std::abs(rep.certificate.mu[0] - (a * a + a * b)) < 1e-14);
  // b^2 + mu_1 and a^2 + b^2 mu_1 / (mu_1 - a^2) = a^2 + b^2 (a + b) / a.
  CHECK(std::abs(rep.coefficients[0] - (b * b + a * a + a * b)) < 1e-13);
  CHECK(std::abs(rep.coefficients[1] - (a * a + b * (a + b))) < 1e-13);
  CHECK(std::abs(rep.target - (a * a + b * b + a * b)) < 1e-13);
  CHECK(rep.ok());
}

TEST_CASE("sine certificates telescope exactly for many sizes") {
  for (auto [a, b] : {std::pair{1.0, 1.0}, {1.0, 2.0}, {0.5, 3.0}, {2.0, 3.0}}) {
    for (std::size_t n : {2, 3, 4, 10, 64, 500, 2000}) {
      for (auto sign : {SineSign::plus, SineSign::minus}) {
        const auto rep = sine_certificate_check(a, b, n, sign);
        CAPTURE(n);
        CHECK(rep.directions_ok);
        CHECK(rep.max_deviation <= 1e-12);
      }
    }
  }
}

TEST_CASE("bisection matches the closed form up to N = 2000") {
  for (auto [a, b] : {std::pair{1.0, 1.0}, {1.0, 2.0}, {0.5, 3.0}}) {
    for (std::size_t n : {1, 2, 3, 17, 50, 500, 2000}) {
      const auto m = make_ftt_matrix(a, b, n);
      const auto closed = ftt_eigenvalues_closed_form(a, b, n);
      CHECK(std::abs(eigen_extreme(m.matrix, Extreme::min).value -
                     closed.front()) < 1e-10);
      CHECK(std::abs(eigen_extreme(m.matrix, Extreme::max).value -
                     closed.back()) < 1e-10);
    }
  }
}
