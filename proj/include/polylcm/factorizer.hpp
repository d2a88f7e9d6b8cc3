#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "polylcm/common.hpp"

namespace polylcm {

// Deterministic Miller-Rabin over the 7-witness set valid for all n < 2^64.
bool is_prime_u64(u64 n);

// Strong-probable-prime test with the first 13 prime witnesses, which is a
// deterministic certificate for n < 3.317e24. Above that bound the same
// witnesses run as a probable-prime test and *probabilistic is set.
bool is_prime(const mpz_class& n, bool* probabilistic = nullptr);

// Complete factorization of n >= 1, ascending primes with exponents.
// Pollard-Brent with fixed start and cycle constants c = 1, 2, 3, ... so the
// result (and its cost) is reproducible run to run.
void factor_u64(u64 n, std::vector<std::pair<u64, unsigned>>& out);

struct Factorization {
  std::vector<std::pair<mpz_class, unsigned>> factors;  // ascending
  bool probabilistic = false;
};

// As factor_u64 for arbitrary-precision n >= 1. Throws factorization_error
// if the rho budget is exhausted before the split completes; a partial
// factorization is never returned.
Factorization factor(const mpz_class& n);

}  // namespace polylcm
