#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polylcm/common.hpp"
#include "polylcm/polynomial.hpp"
#include "polylcm/sieve.hpp"

namespace polylcm {

// One argument q with the complete prime factorization of |f(q)|.
// Records exist exactly for the arguments with |f(q)| not in {0, 1}.
struct FactorRecord {
  u64 q = 0;
  mpz_class value;                                   // |f(q)| >= 2
  std::vector<std::pair<mpz_class, u32>> factors;    // ascending primes
};

struct LedgerEntry {
  u64 alpha = 0;   // sum of valuations over all arguments: exponent in Q(x)
  u32 lambda = 0;  // max valuation over all arguments: exponent in L(x)
};

// prime -> (alpha, lambda). Merging sums alpha and maxes lambda, which is
// associative and commutative, so any block partition yields the same ledger.
class ExponentLedger {
 public:
  void add(u64 prime, u32 exponent) {
    auto& e = small_[prime];
    e.alpha += exponent;
    e.lambda = std::max(e.lambda, exponent);
  }

  void add(const mpz_class& prime, u32 exponent) {
    if (prime.fits_ulong_p()) {
      add(static_cast<u64>(prime.get_ui()), exponent);
      return;
    }
    auto& e = large_[prime];
    e.alpha += exponent;
    e.lambda = std::max(e.lambda, exponent);
  }

  void merge(const ExponentLedger& other);

  u64 alpha(const mpz_class& prime) const;
  u32 lambda(const mpz_class& prime) const;
  size_t distinct_primes() const { return small_.size() + large_.size(); }

  // keys below 2^64 and above it; together, ascending
  const std::map<u64, LedgerEntry>& small() const { return small_; }
  const std::map<mpz_class, LedgerEntry>& large() const { return large_; }

  // fn(log_prime, prime_as_mpz, entry), primes ascending
  template <typename F>
  void for_each(F&& fn) const {
    mpz_class key;
    for (const auto& [p, e] : small_) {
      key = static_cast<unsigned long>(p);
      fn(std::log(static_cast<double>(p)), key, e);
    }
    for (const auto& [p, e] : large_) fn(log_of(p), p, e);
  }

  static double log_of(const mpz_class& v);

 private:
  std::map<u64, LedgerEntry> small_;
  std::map<mpz_class, LedgerEntry> large_;
};

enum class ArgumentMode { primes, integers };

// max(10^4, ceil(sqrt(x))) capped at 10^6
u64 default_small_prime_bound(u64 x);

struct BuildOptions {
  u64 small_prime_bound = 0;  // 0: max(10^4, ceil(sqrt(x))) capped at 10^6
  ArgumentMode mode = ArgumentMode::primes;
  unsigned threads = 1;
  u64 block_size = u64(1) << 20;
  u64 bruteforce_ceiling = 10'000'000;
  u64 max_bytes = u64(6) << 30;
};

// Complete factorizations of |f(q)| for every prime q < x (or every integer
// argument in integers mode), plus the merged exponent ledger. Built by
// marking root progressions of small primes and splitting the remaining
// cofactors; exact by construction, never approximate.
class FactorizationTable {
 public:
  static FactorizationTable build(const Polynomial& f, u64 x,
                                  const BuildOptions& opts = {});

  // Rebuild from per-record factorizations (the on-disk factor log). Values
  // and the ledger are recomputed; the records must be sorted by q.
  static FactorizationTable from_records(const Polynomial& f, u64 x,
                                         std::vector<FactorRecord> records,
                                         u64 small_prime_bound,
                                         ArgumentMode mode, bool probabilistic);

  const Polynomial& poly() const { return poly_; }
  u64 x() const { return x_; }
  const std::vector<FactorRecord>& records() const { return records_; }
  const ExponentLedger& ledger() const { return ledger_; }
  u64 candidate_count() const { return candidate_count_; }  // pi(x) or x
  bool probabilistic() const { return probabilistic_; }
  const std::string& value_mode() const { return value_mode_; }
  u64 small_prime_bound() const { return small_prime_bound_; }
  ArgumentMode mode() const { return mode_; }

 private:
  FactorizationTable(Polynomial f, u64 x) : poly_(std::move(f)), x_(x) {}

  Polynomial poly_;
  u64 x_ = 0;
  std::vector<FactorRecord> records_;
  ExponentLedger ledger_;
  u64 candidate_count_ = 0;
  bool probabilistic_ = false;
  std::string value_mode_ = "uint128";
  u64 small_prime_bound_ = 0;
  ArgumentMode mode_ = ArgumentMode::primes;
};

// exponent of `prime` in Q(x); 0 when absent
u64 alpha(const FactorizationTable& table, const mpz_class& prime);

double log_Q(const FactorizationTable& table);      // sum alpha * log l
double log_L(const FactorizationTable& table);      // sum lambda * log l
double log_rad_L(const FactorizationTable& table);  // sum log l

struct Decomposition {
  double log_q_small = 0;       // l in [2, x_b)
  double log_q_medium = 0;      // l in [x_b, sqrt(x)]
  double log_q_large = 0;       // l in (sqrt(x), x^delta)
  double log_q_very_large = 0;  // l >= x^delta
  double x_b = 0;
  double x_delta = 0;
  double total() const {
    return log_q_small + log_q_medium + log_q_large + log_q_very_large;
  }
};

// Splits log Q by the prime-size regimes; the four parts partition the
// ledger exactly. Boundaries: small is open above, medium closed on both
// ends, large open on both ends, very-large closed below.
Decomposition decompose(const FactorizationTable& table, double B,
                        double delta);

enum class GpdBase { argument, global };  // threshold q^e versus x^e

struct GpdStats {
  u64 satisfied = 0;  // arguments whose largest prime factor beats the bound
  double fraction = 0.0;
  std::vector<std::uint8_t> flags;  // aligned with records()
};

GpdStats greatest_prime_divisor_stats(const FactorizationTable& table,
                                      double exponent,
                                      GpdBase base = GpdBase::argument);

}  // namespace polylcm
