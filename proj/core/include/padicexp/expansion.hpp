#pragma once

#include "padicexp/normalized.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace padicexp {

/// One step of the digit recurrence: the emitted digit alpha_i and the
/// remainder beta_i it was computed from.
struct BetaStep {
  std::size_t index = 0;
  Int alpha;  // in [0, p)
  Int beta;   // satisfies beta_{i+1} * p = beta_i - alpha_i * den exactly
};

/// Finite prefix of the paired (alpha_i, beta_i) sequences for one operand.
/// steps[i] holds (alpha_i, beta_i); beta_end is beta at index steps.size(),
/// so every stored step can be checked against its successor.
struct BetaTrace {
  NormalizedOperand operand;
  std::vector<BetaStep> steps;
  Int beta_end;

  /// Number of beta values available: steps.size() + 1.
  std::size_t beta_count() const { return steps.size() + 1; }

  /// beta_i for 0 <= i <= steps.size(); throws std::out_of_range beyond.
  const Int& beta_at(std::size_t i) const;

  /// The digit sequence alpha_0 .. alpha_{steps.size()-1}.
  std::vector<Int> digits() const;
};

/// One application of the recurrence:
///   alpha     = beta * den^{-1} mod p, least nonnegative residue,
///   beta_next = (beta - alpha * den) / p.
/// The division is exact by construction; a nonzero remainder means a logic
/// error upstream and throws std::logic_error rather than truncating.
/// Requires gcd(den, p) = 1.
std::pair<Int, Int> expand_step(const Int& beta, const Int& den, const Int& prime);

/// Step budget that provably exceeds the first repetition of the beta state:
/// 4 * (|unit_num| + unit_den) + 16, saturated to size_t.
std::size_t default_max_steps(const NormalizedOperand& operand);

/// Runs the recurrence from beta_0 = unit_num for exactly max_steps steps.
/// Deterministic; requires max_steps >= 1.
BetaTrace run_expansion(const NormalizedOperand& operand, std::size_t max_steps);

inline BetaTrace run_expansion(const NormalizedOperand& operand) {
  return run_expansion(operand, default_max_steps(operand));
}

/// Exact check of the step invariant at index i (1 <= i <= steps.size()):
///   unit_num == unit_den * sum_{n<i} alpha_n p^n + beta_i * p^i.
/// Throws std::out_of_range for i outside [1, steps.size()].
bool verify_identity(const BetaTrace& trace, std::size_t i);

/// First index in [1, steps.size()] where the identity fails, or 0 when it
/// holds everywhere (single incremental pass).
std::size_t first_identity_failure(const BetaTrace& trace);

}  // namespace padicexp
