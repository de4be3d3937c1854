#pragma once

#include "padicexp/expansion.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace padicexp {

/// Canonical eventually-periodic digit representation.
///
/// The digit at stream position n (n >= 0, relative to exponent `valuation`)
/// is preperiod[n] for n < |preperiod|, else period[(n - |preperiod|) mod
/// |period|]. Canonical means: the period is minimal (no proper divisor of
/// its length generates the same stream) and the preperiod is minimal (when
/// nonempty, its last digit differs from the period's last digit, so the
/// boundary cannot shift left). Terminating expansions carry period [0],
/// never an empty period.
struct PAdicExpansion {
  Int prime = 2;
  int valuation = 0;
  std::vector<Int> preperiod;
  std::vector<Int> period;

  /// Digit at stream position n (relative to exponent `valuation`).
  const Int& digit_at(std::size_t n) const;

  /// The first `count` stream digits.
  std::vector<Int> first_digits(std::size_t count) const;

  bool operator==(const PAdicExpansion&) const = default;
};

/// Reduces a (preperiod, period) split to canonical form without changing any
/// digit of the infinite stream: first the smallest period length dividing
/// |period| that generates the same stream, then repeated boundary shifts
/// left while the last preperiod digit equals the last period digit
/// (rotating the period right by one each time).
/// Requires a nonempty period.
std::pair<std::vector<Int>, std::vector<Int>> canonicalize(std::vector<Int> preperiod,
                                                           std::vector<Int> period);

struct DetectionResult {
  PAdicExpansion expansion;
  BetaTrace trace;
};

/// Runs the digit recurrence until some beta value recurs, splits the digits
/// at the first occurrence of the recurring value, and canonicalizes.
///
/// Terminates unconditionally: |beta| strictly decreases while |beta| >
/// unit_den and the interval [-unit_den, unit_den] is invariant once entered,
/// so a repeat arrives within |unit_num| + 2*unit_den + 2 steps. The returned
/// trace covers exactly preperiod + period steps, with beta_end equal to the
/// recurring beta value.
DetectionResult detect_period(const NormalizedOperand& operand);

/// The exact rational whose expansion is `e`:
///   p^v * (A + p^L * B / (1 - p^l))
/// with A, B the preperiod/period digit polynomials evaluated at p, L = |pre|
/// and l = |period|. Works for any valid split, canonical or not; the result
/// is fully reduced.
ReducedRational reconstruct_rational(const PAdicExpansion& e);

}  // namespace padicexp
