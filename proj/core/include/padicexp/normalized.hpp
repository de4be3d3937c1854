#pragma once

#include "padicexp/rational.hpp"

namespace padicexp {

/// A rational split as (unit_num / unit_den) * prime^valuation with both unit
/// parts coprime to the prime. This is the working form of every algorithm
/// here: the digit recurrence only ever sees the unit part, and the valuation
/// shifts the exponent at which its digit stream starts.
///
/// Zero is kept as valuation 0, unit 0/1.
class NormalizedOperand {
 public:
  /// Validates every invariant: prime is prime, unit_den >= 1, unit parts
  /// coprime to the prime and to each other. Throws std::invalid_argument.
  static NormalizedOperand create(Int prime, int valuation, Int unit_num, Int unit_den);

  const Int& prime() const { return prime_; }
  int valuation() const { return valuation_; }
  const Int& unit_num() const { return unit_num_; }
  const Int& unit_den() const { return unit_den_; }

  bool is_zero() const { return unit_num_ == 0; }

  /// The exact rational this operand represents: (unit_num/unit_den) * p^v.
  ReducedRational value() const;

  bool operator==(const NormalizedOperand&) const = default;

 private:
  NormalizedOperand() = default;

  Int prime_ = 2;
  int valuation_ = 0;
  Int unit_num_ = 0;
  Int unit_den_ = 1;
};

/// Splits x into unit part and prime power: v = v_p(num) - v_p(den), with the
/// remaining unit fraction coprime to p. Powers of p are stripped from the
/// numerator as well as the denominator, so the digit stream always starts at
/// exponent v with a nonzero leading structure instead of stored zero digits.
/// Zero maps to the zero operand.
NormalizedOperand normalize(const ReducedRational& x, const Int& prime);

}  // namespace padicexp
