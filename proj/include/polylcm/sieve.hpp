#pragma once

#include <vector>

#include "polylcm/common.hpp"
#include "polylcm/polynomial.hpp"

namespace polylcm {

// Primality bitset over [0, x), built by a segmented sieve of Eratosthenes.
// Immutable once built; shareable across threads.
class PrimeRange {
 public:
  // x < 2 yields an empty range (no primes below 2). The memory budget guards
  // the bitset allocation; exceeding it raises resource_limit_error.
  static PrimeRange up_to(u64 x, u64 segment_size = u64(1) << 20,
                          u64 max_bytes = u64(2) << 30);

  u64 limit() const { return limit_; }
  u64 count() const { return count_; }  // pi(x)

  bool is_prime(u64 n) const {
    return n < limit_ && (bits_[n >> 6] >> (n & 63) & 1);
  }

  // Exact count of primes p < limit with p == a (mod m). No coprimality
  // filter: residues with gcd(a, m) > 1 are counted as-is.
  u64 count_in_ap(u64 m, u64 a) const;

  template <typename F>
  void for_each_prime(F&& fn) const {
    for (u64 w = 0; w < bits_.size(); ++w) {
      u64 word = bits_[w];
      while (word) {
        const u64 bit = word & (~word + 1);
        fn((w << 6) + static_cast<u64>(__builtin_ctzll(word)));
        word ^= bit;
      }
    }
  }

 private:
  u64 limit_ = 0;
  u64 count_ = 0;
  std::vector<u64> bits_;
};

// varsigma(m): number of primes p < x with m | f(p), computed exactly as the
// sum of count_in_ap over the residue classes in varrho(m).
u64 varsigma(const Polynomial& f, const PrimeRange& range, u64 m);

u64 totient(u64 m);

// log p if m = p^k, else 0
double von_mangoldt(u64 m);

}  // namespace polylcm
