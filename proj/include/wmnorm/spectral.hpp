#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "wmnorm/matrices.hpp"
#include "wmnorm/tridiagonal.hpp"

namespace wmnorm {

enum class Method { sturm_bisection, power_iteration, dense_charpoly };

std::string_view to_string(Method m) noexcept;

/// An eigenvalue or singular value estimate.
///
/// `uncertainty` is the bisection half-width for sturm_bisection (the true
/// value lies in value +/- uncertainty), the last Rayleigh-quotient change
/// for power_iteration, and the last Newton step for dense_charpoly.
struct SpectralResult {
  double value = 0.0;
  Method method = Method::sturm_bisection;
  std::size_t iterations = 0;
  double uncertainty = 0.0;
  bool converged = true;
};

enum class Extreme { min, max };

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Gershgorin disc union [min(d_i - R_i), max(d_i + R_i)].
Interval gershgorin(const TridiagonalSym& t);

/// Number of eigenvalues strictly less than x, from the signs of the LDL^T
/// pivots of T - xI.
std::size_t sturm_count(const TridiagonalSym& t, double x);

/// The eigenvalue of rank `index` (0 = smallest) by bisection on
/// sturm_count, run until the bracket is narrower than tol.
SpectralResult eigenvalue_at(const TridiagonalSym& t, std::size_t index,
                             double tol = 1e-12);

SpectralResult eigen_extreme(const TridiagonalSym& t, Extreme which,
                             double tol = 1e-12);

/// Extreme root of det(T - xI) by Newton's method on the three-term
/// characteristic recurrence, started outside the Gershgorin interval.
/// Every root is real, so the iterates move monotonically to the
/// smallest/largest root. Meant for small N as a second route.
SpectralResult charpoly_extreme(const TridiagonalSym& t, Extreme which,
                                double tol = 1e-14,
                                std::size_t max_iter = 10000);

/// sigma_max(B) by power iteration on x <- B^T B x from the normalized
/// all-ones vector. Stops when the relative Rayleigh change drops below tol;
/// `converged` is false if max_iter ran out first.
SpectralResult power_norm(const LowerTriangularMean& m, double tol = 1e-10,
                          std::size_t max_iter = 100000);

/// Same, from a caller-supplied start vector (must be nonzero).
SpectralResult power_norm(const LowerTriangularMean& m,
                          std::span<const double> start, double tol,
                          std::size_t max_iter);

}  // namespace wmnorm
