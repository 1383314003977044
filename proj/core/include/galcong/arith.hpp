#pragma once

// Integer helpers shared by every module.

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

namespace galcong {

using Integer = mpz_class;

bool is_prime(const Integer& n);
Integer next_prime(const Integer& n);  // smallest prime > n
std::vector<unsigned long> primes_up_to(unsigned long n);

/// Prime factorization of |n| (n != 0) as ascending (prime, exponent) pairs.
std::vector<std::pair<Integer, unsigned long>> factor_integer(const Integer& n);

Integer binomial(unsigned long n, unsigned long k);
Integer ipow(const Integer& base, unsigned long exp);

/// e with base^e == value, if value is an exact power of base (base >= 2, value >= 1).
std::optional<unsigned long> exact_log(const Integer& value, const Integer& base);

/// (p, r) with q == p^r for a prime p, if q is a prime power.
std::optional<std::pair<Integer, unsigned long>> prime_power(const Integer& q);

/// Euler phi of n >= 1.
Integer euler_phi(const Integer& n);

/// Canonical residue of a modulo m in [0, m).
Integer mod(const Integer& a, const Integer& m);

}  // namespace galcong
