#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace wmnorm {

/// Symmetric tridiagonal matrix. Only the superdiagonal is stored; it is
/// also the subdiagonal.
class TridiagonalSym {
 public:
  TridiagonalSym() = default;
  /// Requires offdiag.size() + 1 == diag.size() and a nonempty diagonal.
  TridiagonalSym(std::vector<double> diag, std::vector<double> offdiag);

  std::size_t size() const noexcept { return diag_.size(); }
  const std::vector<double>& diag() const noexcept { return diag_; }
  const std::vector<double>& offdiag() const noexcept { return offdiag_; }

  /// y = T x.
  std::vector<double> apply(const std::vector<double>& x) const;

  /// Copy with `shift` subtracted from every diagonal entry.
  TridiagonalSym shifted(double shift) const;

 private:
  std::vector<double> diag_;
  std::vector<double> offdiag_;
};

/// Two columns "diag,offdiag"; the final row leaves offdiag empty.
void write_csv(std::ostream& os, const TridiagonalSym& t);

}  // namespace wmnorm
