#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>

namespace padicexp {

/// Exact signed integer of arbitrary size; everything in this library is
/// computed over these, never over floating point.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::pow;

/// Least nonnegative residue of `a` modulo `m` (m > 0), also for negative `a`.
Int floor_mod(const Int& a, const Int& m);

/// Exponent of the highest power of `p` dividing `n`; requires n != 0, p >= 2.
int padic_valuation(Int n, const Int& p);

/// Deterministic trial division up to sqrt(n). Meant for desk-scale inputs;
/// fails fast on composite "primes" instead of producing garbage inverses.
bool is_prime(const Int& n);

/// Inverse of `a` modulo `m` as the unique representative in [1, m),
/// computed by the extended Euclidean algorithm.
/// Throws std::domain_error when gcd(a, m) != 1 (in particular a ≡ 0 mod m).
Int mod_inverse(const Int& a, const Int& m);

/// Least k >= 1 with base^k ≡ 1 (mod modulus), by brute-force iteration.
/// Requires modulus >= 2 and gcd(base, modulus) = 1.
std::size_t multiplicative_order(const Int& base, const Int& modulus);

}  // namespace padicexp
