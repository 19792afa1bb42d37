#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wmnorm/spectral.hpp"
#include "wmnorm/weights.hpp"

namespace wmnorm {

/// Multipliers mu_n = (k + c) r_n - c with k = (2-l)^2/4, c = l(2-l)/4,
/// and the slack of each step of the telescoped lower bound for
/// x^T A^{-1} x >= k |x|^2.
///
/// slack34[n] (0-based n = 0..N-2) is
///   mu_{n+1} - (Lambda_n/lambda_{n+1})^2 mu_n / (r_n^2 - mu_n) - k
/// and tail_slack is the same expression with r_N^2 in place of mu_{N+1}.
struct Certificate {
  double l = 0.0;
  double k = 0.0;
  double c = 0.0;
  std::vector<double> mu;
  std::vector<double> slack34;
  double tail_slack = 0.0;

  /// k + max mu; slacks below -1e-12 * scale count as violations.
  double scale() const;
  double tolerance() const { return 1e-12 * scale(); }
};

/// Throws ConditionViolated when l is outside (0, 2) or below l_trunc(w).
/// Throws std::logic_error if some mu_n falls outside (0, r_n^2), which the
/// construction rules out.
Certificate build_certificate(const WeightSequence& w, double l);
/// With l = l_trunc(w); for N = 1 there is no pair, and l must be given.
Certificate build_certificate(const WeightSequence& w);

/// The carried term (Lambda_n/lambda_{n+1})^2 mu_n / (r_n^2 - mu_n) that the
/// completed square at index n pushes onto a_{n+1}^2.
double carry_term(const WeightSequence& w, std::size_t n, double mu_n);

// ---------------------------------------------------------------------------
// Completed-square lemma: f(a) = (alpha a - beta a_next)^2 - mu a^2.

enum class VertexDirection { upper, lower };

struct VertexLemmaCase {
  double alpha = 0.0;
  double beta = 0.0;
  double mu = 0.0;
  double a_next = 0.0;

  /// upper when mu > alpha^2 (f is bounded above), lower when mu < alpha^2.
  /// Throws std::invalid_argument when mu == alpha^2.
  VertexDirection direction() const;
};

double vertex_function(const VertexLemmaCase& c, double a_n);
/// beta^2 mu a_next^2 / (mu - alpha^2), the extreme value of f.
double vertex_value(const VertexLemmaCase& c);
/// alpha beta a_next / (alpha^2 - mu), where f attains it.
double vertex_point(const VertexLemmaCase& c);

/// Samples a_n and checks f(a_n) <= vertex (upper) or >= vertex (lower),
/// allowing 1e-12 times the magnitude of the terms involved.
bool check_vertex_lemma(const VertexLemmaCase& c, std::size_t samples,
                        std::uint64_t seed);

// ---------------------------------------------------------------------------
// Reduction chain. With x = r_n, y = r_{n+1}:
//   lhs36 = (k+c)x^2 + (k+c)x - ((k+c)x - c) y - (k+c)((k+c)x - c) - c
// satisfies slack34 * (x^2 - mu_n) = (y - 1) * lhs36. Replacing y by its
// upper bound x + l gives lhs25 = coefficient * x + constant.

double lhs_36(double k, double c, double x, double y);
double lhs_25(double k, double c, double l, double x);
/// k + 2c - l(k+c) - (k+c)^2 at c = l(2-l)/4; zero in exact arithmetic.
double reduction_coefficient(double l);
/// cl + c(k+c) - c at the same c; equals cl/2.
double reduction_constant(double l);

struct SlackViolation {
  std::size_t index = 0;  // 0-based step; N-1 denotes the tail term
  double value = 0.0;
};

struct ChainReport {
  std::vector<double> slack34;  // recomputed
  double tail_slack = 0.0;
  double min_slack34 = 0.0;     // +inf when N == 1
  double tolerance = 0.0;
  std::vector<SlackViolation> violations;

  double max_recompute_error = 0.0;    // recomputed vs stored, relative
  double max_equivalence_error = 0.0;  // slack34 vs lhs36 identity, relative
  double max_y_coefficient = 0.0;      // max of -((k+c)x - c); must be <= 0
  double min_lhs36 = 0.0;
  double min_lhs25 = 0.0;
  double coefficient = 0.0;
  double constant = 0.0;
  double constant_expected = 0.0;     // c l / 2
  bool mu_in_range = true;             // 0 < mu_n < r_n^2 for all n
  bool mu1_equals_k = true;

  bool ok() const;
};

/// Recomputes every slack from the raw weights and checks each link of the
/// reduction chain separately.
ChainReport verify_34_chain(const Certificate& cert, const WeightSequence& w);

/// sum_{n<N} (r_n a_n - (Lambda_n/lambda_{n+1}) a_{n+1})^2 + r_N^2 a_N^2,
/// i.e. a^T A^{-1} a.
double target_form(const WeightSequence& w, std::span<const double> a);

struct BoundViolation {
  std::vector<double> witness;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct QuadraticBoundReport {
  double l = 0.0;
  double k_bound = 0.0;     // (2 - l)^2 / 4
  double norm_bound = 0.0;  // 2 / (2 - l)
  std::size_t trials = 0;
  double min_ratio = 0.0;   // min over trials of lhs / |a|^2
  std::vector<BoundViolation> violations;
  SpectralResult lambda_min;  // of A^{-1}, Sturm bisection
  SpectralResult sigma_max;   // of B, power iteration
  bool spectral_ok = false;   // lambda_min >= k_bound - 1e-10
  bool norm_ok = false;       // sigma_max <= norm_bound (1 + 1e-12)

  bool ok() const { return violations.empty() && spectral_ok && norm_ok; }
};

/// Random-vector check of a^T A^{-1} a >= k |a|^2 (trial t is seeded with
/// seed + t), plus the spectral and operator-norm forms of the same claim.
QuadraticBoundReport verify_quadratic_bound(const WeightSequence& w, double l,
                                            std::size_t trials,
                                            std::uint64_t seed);

}  // namespace wmnorm
