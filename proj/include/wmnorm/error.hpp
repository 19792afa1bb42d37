#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wmnorm {

/// A weight that is zero, negative, non-finite or otherwise unusable.
/// `index()` is the 0-based position in the sequence.
class InvalidWeight : public std::invalid_argument {
 public:
  InvalidWeight(std::size_t index, const std::string& what)
      : std::invalid_argument(what), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// The Cartlidge quantity does not admit a bound at p = 2 for the requested
/// parameters (l >= 2, or l below what the data requires).
class ConditionViolated : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised where a dense O(N^2) path is requested above the configured cap.
class DenseSizeExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace wmnorm
