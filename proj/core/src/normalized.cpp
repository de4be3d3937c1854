#include "padicexp/normalized.hpp"

#include <stdexcept>
#include <utility>

namespace padicexp {

NormalizedOperand NormalizedOperand::create(Int prime, int valuation, Int unit_num,
                                            Int unit_den) {
  if (!is_prime(prime)) throw std::invalid_argument("operand: base must be a prime number");
  if (unit_den < 1) throw std::invalid_argument("operand: unit denominator must be positive");
  if (unit_num == 0) {
    if (unit_den != 1 || valuation != 0)
      throw std::invalid_argument("operand: zero must be valuation 0 with unit 0/1");
  } else {
    if (gcd(abs(unit_num), prime) != 1)
      throw std::invalid_argument("operand: gcd(c, p) != 1");
    if (gcd(unit_den, prime) != 1) throw std::invalid_argument("operand: gcd(d, p) != 1");
    if (gcd(abs(unit_num), unit_den) != 1)
      throw std::invalid_argument("operand: gcd(c, d) != 1");
  }
  NormalizedOperand op;
  op.prime_ = std::move(prime);
  op.valuation_ = valuation;
  op.unit_num_ = std::move(unit_num);
  op.unit_den_ = std::move(unit_den);
  return op;
}

ReducedRational NormalizedOperand::value() const {
  Int num = unit_num_;
  Int den = unit_den_;
  if (valuation_ >= 0) {
    num *= pow(prime_, static_cast<unsigned>(valuation_));
  } else {
    den *= pow(prime_, static_cast<unsigned>(-valuation_));
  }
  return ReducedRational(num, den);
}

NormalizedOperand normalize(const ReducedRational& x, const Int& prime) {
  if (x.is_zero()) return NormalizedOperand::create(prime, 0, 0, 1);
  if (!is_prime(prime)) throw std::invalid_argument("normalize: base must be a prime number");

  Int num = x.numerator();
  Int den = x.denominator();
  int v = 0;
  while (num % prime == 0) {
    num /= prime;
    ++v;
  }
  while (den % prime == 0) {
    den /= prime;
    --v;
  }
  return NormalizedOperand::create(prime, v, std::move(num), std::move(den));
}

}  // namespace padicexp
