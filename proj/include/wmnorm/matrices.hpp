#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "wmnorm/tridiagonal.hpp"
#include "wmnorm/weights.hpp"

namespace wmnorm {

/// Largest N for which dense O(N^2) matrices are built by default.
inline constexpr std::size_t kDefaultDenseCap = 2000;

/// Truncated weighted mean matrix B_N with b_{i,j} = lambda_j / Lambda_i for
/// j <= i. Never stored densely; products are O(N).
class LowerTriangularMean {
 public:
  explicit LowerTriangularMean(WeightSequence weights)
      : weights_(std::move(weights)) {}

  std::size_t size() const noexcept { return weights_.size(); }
  const WeightSequence& weights() const noexcept { return weights_; }

  /// (Bx)_i = (1/Lambda_i) sum_{j<=i} lambda_j x_j.
  std::vector<double> apply(std::span<const double> x) const;
  /// (B^T x)_j = lambda_j sum_{i>=j} x_i / Lambda_i.
  std::vector<double> apply_transpose(std::span<const double> x) const;

 private:
  WeightSequence weights_;
};

/// B^{-1}: lower bidiagonal with diag_i = Lambda_i/lambda_i and
/// subdiag_i = -Lambda_i/lambda_{i+1} at position (i+1, i).
struct BidiagonalInverse {
  std::vector<double> diag;
  std::vector<double> subdiag;
};

/// Dense alpha_{i,j} = lambda_i lambda_j sum_{k >= max(i,j)}^{N} 1/Lambda_k^2,
/// the matrix of sum_n (Bx)_n^2 as a quadratic form in x. Equals B^T B.
struct QuadraticFormMatrix {
  Eigen::MatrixXd alpha;
};

BidiagonalInverse build_inverse_bidiagonal(const WeightSequence& w);

/// A^{-1} = B^{-1} (B^{-1})^T. Entries:
///   diag_1 = 1, diag_i = (Lambda_i/lambda_i)^2 + (Lambda_{i-1}/lambda_i)^2,
///   offdiag_i = -Lambda_i^2 / (lambda_i lambda_{i+1}).
TridiagonalSym build_gram_inverse(const WeightSequence& w);

QuadraticFormMatrix build_quadratic_form(const WeightSequence& w,
                                         std::size_t cap = kDefaultDenseCap);

// Dense forms for small N, mostly for checking the structured paths.
Eigen::MatrixXd dense_mean(const WeightSequence& w,
                           std::size_t cap = kDefaultDenseCap);
Eigen::MatrixXd dense(const BidiagonalInverse& binv,
                      std::size_t cap = kDefaultDenseCap);
Eigen::MatrixXd dense(const TridiagonalSym& t,
                      std::size_t cap = kDefaultDenseCap);

/// Row-per-line CSV, 17 significant digits.
void write_csv(std::ostream& os, const Eigen::MatrixXd& m);

}  // namespace wmnorm
