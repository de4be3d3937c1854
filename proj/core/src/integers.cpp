#include "padicexp/integers.hpp"

#include <stdexcept>
#include <utility>

namespace padicexp {

Int floor_mod(const Int& a, const Int& m) {
  Int r = a % m;  // truncated toward zero, so negative a can leave r < 0
  if (r < 0) r += m;
  return r;
}

int padic_valuation(Int n, const Int& p) {
  if (n == 0) throw std::invalid_argument("padic_valuation: zero has no finite valuation");
  if (p < 2) throw std::invalid_argument("padic_valuation: p must be at least 2");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

Int mod_inverse(const Int& a, const Int& m) {
  if (m < 2) throw std::invalid_argument("mod_inverse: modulus must be at least 2");
  Int r0 = m;
  Int r1 = floor_mod(a, m);
  if (r1 == 0) throw std::domain_error("mod_inverse: argument is divisible by the modulus");
  Int t0 = 0;
  Int t1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (r0 != 1) throw std::domain_error("mod_inverse: argument and modulus share a factor");
  return floor_mod(t0, m);
}

std::size_t multiplicative_order(const Int& base, const Int& modulus) {
  if (modulus < 2) throw std::invalid_argument("multiplicative_order: modulus must be at least 2");
  Int x = floor_mod(base, modulus);
  if (gcd(x, modulus) != 1)
    throw std::domain_error("multiplicative_order: base and modulus share a factor");
  std::size_t k = 1;
  Int acc = x;
  while (acc != 1) {
    acc = acc * x % modulus;
    ++k;
  }
  return k;
}

}  // namespace padicexp
