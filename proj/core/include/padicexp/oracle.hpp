#pragma once

#include "padicexp/integers.hpp"

#include <cstddef>
#include <vector>

namespace padicexp {

/// Inverse of d modulo prime^n, by Newton lifting of the mod-prime inverse
/// (seeded with Fermat's d^{p-2} mod p, precision doubling each round). This
/// deliberately shares no code with mod_inverse or the digit recurrence.
/// Throws std::domain_error when prime divides d.
Int inverse_mod_prime_power(const Int& d, const Int& prime, std::size_t n);

/// First n expansion digits of c/d computed at a single modulus: the base-p
/// digits of c * d^{-1} mod p^n, least significant first. Negative c is
/// reduced into [0, p^n) first. Requires gcd(d, prime) = 1 and n >= 1.
std::vector<Int> oracle_digits(const Int& c, const Int& d, const Int& prime, std::size_t n);

}  // namespace padicexp
