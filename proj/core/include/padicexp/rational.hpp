#pragma once

#include "padicexp/integers.hpp"

#include <string>

namespace padicexp {

/// Signed exact rational in lowest terms.
///
/// Invariants: denominator >= 1, gcd(|numerator|, denominator) = 1, and zero
/// is always represented as 0/1. The sign lives on the numerator.
class ReducedRational {
 public:
  ReducedRational() = default;

  /// Reduces num/den to lowest terms; throws std::invalid_argument when the
  /// denominator is zero.
  ReducedRational(Int numerator, Int denominator);

  explicit ReducedRational(Int integer_value) : num_(std::move(integer_value)) {}

  const Int& numerator() const { return num_; }
  const Int& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  bool operator==(const ReducedRational&) const = default;

  /// "213/7", "-1/2"; integers render without the "/1".
  std::string str() const;

 private:
  Int num_ = 0;
  Int den_ = 1;
};

/// Lowest-terms constructor as a free function.
ReducedRational reduce(const Int& numerator, const Int& denominator);

}  // namespace padicexp
