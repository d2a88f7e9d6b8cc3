#pragma once

#include <vector>

#include "polylcm/common.hpp"
#include "polylcm/polynomial.hpp"

namespace polylcm {

// The complete set of residues r mod `modulus` with f(r) == 0, sorted
// ascending in [0, modulus).
struct ResidueClassSet {
  u64 modulus = 1;
  std::vector<u64> residues;

  unsigned count() const { return static_cast<unsigned>(residues.size()); }
};

// Hensel lifting applies when p divides neither disc f nor the leading
// coefficient; every root mod p is then simple and lifts uniquely.
bool hensel_applicable(const Polynomial& f, u64 p);

// Roots of f mod p. Exhaustive scan below 2^14; above that, the root-bearing
// part is extracted as gcd(f, x^p - x) mod p and split into linears with
// deterministic trial elements a = 1, 2, 3, ...
ResidueClassSet roots_mod_prime(const Polynomial& f, u64 p);

// Unique lifts of the simple roots mod p up to modulus p^k (Newton step per
// level). Throws std::invalid_argument for ramified p, directing the caller
// to roots_mod_prime_power_bruteforce.
ResidueClassSet hensel_lift(const Polynomial& f, u64 p, unsigned k);

// Complete root set mod p^k by level-by-level scan of each fiber. Intended
// for ramified primes; p^k above `ceiling` raises resource_limit_error.
ResidueClassSet roots_mod_prime_power_bruteforce(const Polynomial& f, u64 p,
                                                 unsigned k,
                                                 u64 ceiling = 10'000'000);

// varrho(m): roots of f mod an arbitrary m >= 1, CRT-combined from the
// prime-power root sets. rho(m) is multiplicative: count() is the product of
// the prime-power counts.
ResidueClassSet varrho(const Polynomial& f, u64 m,
                       u64 bruteforce_ceiling = 10'000'000);

// rho(p) without materializing the residues: degree of gcd(f, x^p - x).
// Much cheaper than roots_mod_prime for bulk sums over primes.
u64 root_count_mod_prime(const Polynomial& f, u64 p);

}  // namespace polylcm
