#include "wmnorm/matrices.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

#include "wmnorm/error.hpp"

namespace wmnorm {
namespace {

void require_dense(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw DenseSizeExceeded("dense matrix of order " + std::to_string(n) +
                            " exceeds cap " + std::to_string(cap) +
                            "; use the matrix-free or tridiagonal path");
  }
}

void require_size(std::size_t got, std::size_t want) {
  if (got != want) {
    throw std::invalid_argument("dimension mismatch: vector has " +
                                std::to_string(got) + " entries, operator " +
                                std::to_string(want));
  }
}

}  // namespace

std::vector<double> LowerTriangularMean::apply(std::span<const double> x) const {
  const std::size_t n = size();
  require_size(x.size(), n);
  std::vector<double> y(n);
  double running = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    running += weights_.lambda(i) * x[i];
    y[i] = running / weights_.cumsum(i);
  }
  return y;
}

std::vector<double> LowerTriangularMean::apply_transpose(
    std::span<const double> x) const {
  const std::size_t n = size();
  require_size(x.size(), n);
  std::vector<double> y(n);
  double suffix = 0.0;
  for (std::size_t j = n; j-- > 0;) {
    suffix += x[j] / weights_.cumsum(j);
    y[j] = weights_.lambda(j) * suffix;
  }
  return y;
}

BidiagonalInverse build_inverse_bidiagonal(const WeightSequence& w) {
  const std::size_t n = w.size();
  BidiagonalInverse out;
  out.diag.resize(n);
  out.subdiag.resize(n - 1);
  for (std::size_t i = 0; i < n; ++i) out.diag[i] = w.ratio(i);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    out.subdiag[i] = -w.cumsum(i) / w.lambda(i + 1);
  }
  return out;
}

TridiagonalSym build_gram_inverse(const WeightSequence& w) {
  const std::size_t n = w.size();
  std::vector<double> diag(n);
  std::vector<double> off(n - 1);
  diag[0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double r = w.ratio(i);
    const double prev = w.cumsum(i - 1) / w.lambda(i);
    diag[i] = r * r + prev * prev;
  }
  // Written as r_i * (Lambda_i / lambda_{i+1}) so Lambda_i^2 never forms.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    off[i] = -w.ratio(i) * (w.cumsum(i) / w.lambda(i + 1));
  }
  return TridiagonalSym(std::move(diag), std::move(off));
}

QuadraticFormMatrix build_quadratic_form(const WeightSequence& w,
                                         std::size_t cap) {
  const std::size_t n = w.size();
  require_dense(n, cap);
  // tail[m] = sum_{k >= m} 1/Lambda_k^2, accumulated from the small end.
  std::vector<double> tail(n);
  double acc = 0.0;
  for (std::size_t k = n; k-- > 0;) {
    const double inv = 1.0 / w.cumsum(k);
    acc += inv * inv;
    tail[k] = acc;
  }
  QuadraticFormMatrix q{Eigen::MatrixXd(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double v = w.lambda(i) * w.lambda(j) * tail[j];
      q.alpha(i, j) = v;
      q.alpha(j, i) = v;
    }
  }
  return q;
}

Eigen::MatrixXd dense_mean(const WeightSequence& w, std::size_t cap) {
  const std::size_t n = w.size();
  require_dense(n, cap);
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) b(i, j) = w.lambda(j) / w.cumsum(i);
  }
  return b;
}

Eigen::MatrixXd dense(const BidiagonalInverse& binv, std::size_t cap) {
  const std::size_t n = binv.diag.size();
  require_dense(n, cap);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = binv.diag[i];
  for (std::size_t i = 0; i < binv.subdiag.size(); ++i) {
    m(i + 1, i) = binv.subdiag[i];
  }
  return m;
}

Eigen::MatrixXd dense(const TridiagonalSym& t, std::size_t cap) {
  const std::size_t n = t.size();
  require_dense(n, cap);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = t.diag()[i];
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m(i, i + 1) = t.offdiag()[i];
    m(i + 1, i) = t.offdiag()[i];
  }
  return m;
}

void write_csv(std::ostream& os, const Eigen::MatrixXd& m) {
  char buf[64];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
      if (j > 0) os << ',';
      os << buf;
    }
    os << '\n';
  }
}

}  // namespace wmnorm
