#pragma once

#include <compare>
#include <string>

#include "sheafdist/interval.hpp"

namespace sheafdist {

/// A nonnegative real or +infinity.
class ExtendedCost {
 public:
  constexpr ExtendedCost() noexcept = default;
  /// Throws Error(invalid_argument) for negative or NaN values.
  explicit ExtendedCost(double value);

  static constexpr ExtendedCost infinity() noexcept { return ExtendedCost(kInfinity, Unchecked{}); }

  bool is_finite() const noexcept { return value_ != kInfinity; }
  double value() const noexcept { return value_; }

  friend bool operator==(ExtendedCost, ExtendedCost) = default;
  friend std::partial_ordering operator<=>(ExtendedCost a, ExtendedCost b) noexcept {
    return a.value_ <=> b.value_;
  }

 private:
  struct Unchecked {};
  constexpr ExtendedCost(double value, Unchecked) noexcept : value_(value) {}

  double value_ = 0.0;
};

inline ExtendedCost max(ExtendedCost a, ExtendedCost b) noexcept { return a < b ? b : a; }

/// `inf` or the shortest decimal.
std::string to_string(ExtendedCost cost);

/// Least eps such that the two atoms are eps-interleaved, +inf if none.
ExtendedCost pair_cost(const GradedInterval& a, const GradedInterval& b);

/// Least eps such that the atom is eps-interleaved with zero.
ExtendedCost deletion_cost(const GradedInterval& a);

}  // namespace sheafdist
