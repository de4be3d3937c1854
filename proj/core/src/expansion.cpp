#include "padicexp/expansion.hpp"

#include <limits>
#include <stdexcept>

namespace padicexp {

namespace {

// Shared step kernel with the denominator inverse hoisted out of the loop.
std::pair<Int, Int> step_with_inverse(const Int& beta, const Int& den, const Int& prime,
                                      const Int& den_inv) {
  Int alpha = floor_mod(beta, prime) * den_inv % prime;
  Int rem = beta - alpha * den;
  if (rem % prime != 0)
    throw std::logic_error("expand_step: beta - alpha*d is not divisible by p");
  return {std::move(alpha), rem / prime};
}

}  // namespace

const Int& BetaTrace::beta_at(std::size_t i) const {
  if (i < steps.size()) return steps[i].beta;
  if (i == steps.size()) return beta_end;
  throw std::out_of_range("BetaTrace: beta index beyond trace");
}

std::vector<Int> BetaTrace::digits() const {
  std::vector<Int> out;
  out.reserve(steps.size());
  for (const BetaStep& s : steps) out.push_back(s.alpha);
  return out;
}

std::pair<Int, Int> expand_step(const Int& beta, const Int& den, const Int& prime) {
  return step_with_inverse(beta, den, prime, mod_inverse(den, prime));
}

std::size_t default_max_steps(const NormalizedOperand& operand) {
  Int budget = 4 * (abs(operand.unit_num()) + operand.unit_den()) + 16;
  if (budget > std::numeric_limits<std::size_t>::max())
    return std::numeric_limits<std::size_t>::max();
  return budget.convert_to<std::size_t>();
}

BetaTrace run_expansion(const NormalizedOperand& operand, std::size_t max_steps) {
  if (max_steps < 1) throw std::invalid_argument("run_expansion: max_steps must be >= 1");
  const Int den_inv = mod_inverse(operand.unit_den(), operand.prime());
  BetaTrace trace{operand, {}, operand.unit_num()};
  trace.steps.reserve(max_steps);
  Int beta = operand.unit_num();
  for (std::size_t i = 0; i < max_steps; ++i) {
    auto [alpha, next] = step_with_inverse(beta, operand.unit_den(), operand.prime(), den_inv);
    trace.steps.push_back(BetaStep{i, std::move(alpha), std::move(beta)});
    beta = std::move(next);
  }
  trace.beta_end = std::move(beta);
  return trace;
}

bool verify_identity(const BetaTrace& trace, std::size_t i) {
  if (i < 1 || i > trace.steps.size())
    throw std::out_of_range("verify_identity: index outside [1, steps]");
  const Int& p = trace.operand.prime();
  Int sum = 0;
  Int pk = 1;
  for (std::size_t n = 0; n < i; ++n) {
    sum += trace.steps[n].alpha * pk;
    pk *= p;
  }
  return trace.operand.unit_num() == trace.operand.unit_den() * sum + trace.beta_at(i) * pk;
}

std::size_t first_identity_failure(const BetaTrace& trace) {
  const Int& p = trace.operand.prime();
  const Int& c = trace.operand.unit_num();
  const Int& d = trace.operand.unit_den();
  Int sum = 0;
  Int pk = 1;
  for (std::size_t i = 1; i <= trace.steps.size(); ++i) {
    sum += trace.steps[i - 1].alpha * pk;
    pk *= p;
    if (c != d * sum + trace.beta_at(i) * pk) return i;
  }
  return 0;
}

}  // namespace padicexp
