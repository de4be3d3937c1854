#include "padicexp/period.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace padicexp {

const Int& PAdicExpansion::digit_at(std::size_t n) const {
  if (n < preperiod.size()) return preperiod[n];
  return period[(n - preperiod.size()) % period.size()];
}

std::vector<Int> PAdicExpansion::first_digits(std::size_t count) const {
  std::vector<Int> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) out.push_back(digit_at(n));
  return out;
}

std::pair<std::vector<Int>, std::vector<Int>> canonicalize(std::vector<Int> preperiod,
                                                           std::vector<Int> period) {
  if (period.empty()) throw std::invalid_argument("canonicalize: period must be nonempty");

  // Smallest length dividing |period| that generates the same stream.
  for (std::size_t len = 1; len < period.size(); ++len) {
    if (period.size() % len != 0) continue;
    bool repeats = true;
    for (std::size_t k = len; k < period.size() && repeats; ++k)
      repeats = period[k] == period[k - len];
    if (repeats) {
      period.resize(len);
      break;
    }
  }

  // Shift the boundary left while it sits inside the periodic zone.
  while (!preperiod.empty() && preperiod.back() == period.back()) {
    preperiod.pop_back();
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
  }
  return {std::move(preperiod), std::move(period)};
}

DetectionResult detect_period(const NormalizedOperand& operand) {
  const Int& p = operand.prime();
  const Int& d = operand.unit_den();
  const Int den_inv = mod_inverse(d, p);

  BetaTrace trace{operand, {}, operand.unit_num()};
  std::map<Int, std::size_t> first_seen;
  Int beta = operand.unit_num();
  std::size_t repeat_of = 0;
  while (true) {
    auto [it, inserted] = first_seen.emplace(beta, trace.steps.size());
    if (!inserted) {
      repeat_of = it->second;
      trace.beta_end = std::move(beta);
      break;
    }
    Int alpha = floor_mod(beta, p) * den_inv % p;
    Int rem = beta - alpha * d;
    if (rem % p != 0) throw std::logic_error("detect_period: step not divisible by p");
    trace.steps.push_back(BetaStep{trace.steps.size(), std::move(alpha), std::move(beta)});
    beta = rem / p;
  }

  std::vector<Int> digits = trace.digits();
  std::vector<Int> pre(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(repeat_of));
  std::vector<Int> per(digits.begin() + static_cast<std::ptrdiff_t>(repeat_of), digits.end());
  auto [cpre, cper] = canonicalize(std::move(pre), std::move(per));

  PAdicExpansion expansion{p, operand.valuation(), std::move(cpre), std::move(cper)};
  return {std::move(expansion), std::move(trace)};
}

ReducedRational reconstruct_rational(const PAdicExpansion& e) {
  if (e.period.empty()) throw std::invalid_argument("reconstruct: period must be nonempty");
  if (!is_prime(e.prime)) throw std::invalid_argument("reconstruct: base must be a prime number");
  for (const auto* block : {&e.preperiod, &e.period}) {
    for (const Int& digit : *block) {
      if (digit < 0 || digit >= e.prime)
        throw std::invalid_argument("reconstruct: digit outside [0, p)");
    }
  }

  Int pre_value = 0;   // A = sum preperiod[i] p^i
  Int per_value = 0;   // B = sum period[i] p^i
  Int pk = 1;
  for (const Int& digit : e.preperiod) {
    pre_value += digit * pk;
    pk *= e.prime;
  }
  const Int pre_power = pk;  // p^|preperiod|
  pk = 1;
  for (const Int& digit : e.period) {
    per_value += digit * pk;
    pk *= e.prime;
  }
  const Int geometric_den = 1 - pk;  // 1 - p^|period|

  // A + p^L * B / (1 - p^l), then the valuation shift.
  Int num = pre_value * geometric_den + pre_power * per_value;
  Int den = geometric_den;
  if (e.valuation >= 0) {
    num *= pow(e.prime, static_cast<unsigned>(e.valuation));
  } else {
    den *= pow(e.prime, static_cast<unsigned>(-e.valuation));
  }
  return ReducedRational(num, den);
}

}  // namespace padicexp
