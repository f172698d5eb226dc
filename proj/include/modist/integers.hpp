#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace modist {

/// Arbitrary-precision integer. All integer arithmetic in the library goes
/// through this alias.
using Int = mpz_class;

/// Primality test. Exact for the desk-scale inputs this library handles.
bool is_prime(const Int& n);

/// Prime factorization of |n| by trial division, n != 0.
/// Returns (prime, exponent) pairs with primes ascending.
std::vector<std::pair<Int, int>> factor(const Int& n);

/// Decomposes n >= 1 as n = q^2 * r with r squarefree. Returns (q, r).
std::pair<Int, Int> squarefree_part(const Int& n);

/// Largest k with p^k | n, for n != 0 and p >= 2.
long valuation(const Int& n, const Int& p);

/// Binomial coefficient C(n, k).
Int binomial(unsigned long n, unsigned long k);

/// All primes <= n, ascending.
std::vector<long> primes_up_to(long n);

}  // namespace modist
