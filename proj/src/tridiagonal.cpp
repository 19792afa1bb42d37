#include "wmnorm/tridiagonal.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace wmnorm {

TridiagonalSym::TridiagonalSym(std::vector<double> diag,
                               std::vector<double> offdiag)
    : diag_(std::move(diag)), offdiag_(std::move(offdiag)) {
  if (diag_.empty()) {
    throw std::invalid_argument("tridiagonal matrix must be at least 1x1");
  }
  if (offdiag_.size() + 1 != diag_.size()) {
    throw std::invalid_argument("offdiag must have exactly size()-1 entries");
  }
}

std::vector<double> TridiagonalSym::apply(const std::vector<double>& x) const {
  const std::size_t n = size();
  if (x.size() != n) throw std::invalid_argument("dimension mismatch");
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = diag_[i] * x[i];
    if (i > 0) s += offdiag_[i - 1] * x[i - 1];
    if (i + 1 < n) s += offdiag_[i] * x[i + 1];
    y[i] = s;
  }
  return y;
}

TridiagonalSym TridiagonalSym::shifted(double shift) const {
  std::vector<double> d(diag_);
  for (double& v : d) v -= shift;
  return TridiagonalSym(std::move(d), offdiag_);
}

void write_csv(std::ostream& os, const TridiagonalSym& t) {
  char buf[64];
  os << "diag,offdiag\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", t.diag()[i]);
    os << buf << ',';
    if (i + 1 < t.size()) {
      std::snprintf(buf, sizeof buf, "%.17g", t.offdiag()[i]);
      os << buf;
    }
    os << '\n';
  }
}

}  // namespace wmnorm
