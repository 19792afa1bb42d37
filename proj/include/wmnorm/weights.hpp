#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wmnorm {

enum class FamilyKind { cesaro, power, geometric, custom };

/// Describes how a weight sequence is generated.
///
///   cesaro            lambda_k = 1
///   power(alpha)      lambda_k = k^alpha, alpha > -1
///   geometric(rho)    lambda_k = rho^k,   rho > 0
///   custom(values)    lambda_k = values[k-1]
struct Family {
  FamilyKind kind = FamilyKind::cesaro;
  double parameter = 0.0;
  std::vector<double> values;

  static Family cesaro();
  static Family power(double alpha);
  static Family geometric(double rho);
  static Family custom(std::vector<double> values);

  /// Spec-string form, e.g. "power:alpha=1". Custom families print as
  /// "custom[<count>]".
  std::string describe() const;

  /// Whether weights can be produced for any length (false for custom).
  bool unbounded() const noexcept { return kind != FamilyKind::custom; }
};

/// Parses "cesaro", "power:alpha=<float>", "geometric:rho=<float>" or
/// "file:<path>". File families are read eagerly and become custom.
Family parse_family(std::string_view spec);

/// One positive decimal per line. Blank lines and `#` comments are skipped.
std::vector<double> parse_weight_text(std::istream& in);
std::vector<double> read_weight_file(const std::filesystem::path& path);

/// Positive weights lambda_1..lambda_N together with their prefix sums.
/// Indices in this API are 0-based: position i holds lambda_{i+1}.
class WeightSequence {
 public:
  /// Throws InvalidWeight for an empty sequence or a weight that is not a
  /// finite positive number.
  WeightSequence(std::vector<double> lambdas, Family family);

  std::size_t size() const noexcept { return lambdas_.size(); }
  const Family& family() const noexcept { return family_; }

  std::span<const double> lambdas() const noexcept { return lambdas_; }
  std::span<const double> cumsums() const noexcept { return cumsums_; }

  double lambda(std::size_t i) const { return lambdas_[i]; }
  double cumsum(std::size_t i) const { return cumsums_[i]; }

  /// r_i = Lambda_i / lambda_i. ratio(0) is exactly 1.
  double ratio(std::size_t i) const { return cumsums_[i] / lambdas_[i]; }
  std::vector<double> ratios() const;

  /// Same family tag, every weight multiplied by `factor` (> 0).
  WeightSequence scaled(double factor) const;

 private:
  std::vector<double> lambdas_;
  std::vector<double> cumsums_;
  Family family_;
};

WeightSequence make_weights(const Family& family, std::size_t n);

/// Ratios r_n, successive differences d_n = r_{n+1} - r_n, and their
/// maximum `l_trunc`. l_trunc only sees n < N, so it is a lower estimate of
/// the supremum over the infinite sequence.
struct RatioProfile {
  std::vector<double> ratios;
  std::vector<double> diffs;
  double l_trunc = 0.0;
};

/// Throws std::invalid_argument when N < 2 (no consecutive pair).
RatioProfile ratio_profile(const WeightSequence& w);

}  // namespace wmnorm
