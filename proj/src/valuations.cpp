#include "polylcm/valuations.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

#include "polylcm/congruence.hpp"
#include "polylcm/factorizer.hpp"

namespace polylcm {

namespace {

constexpr u32 kNoRecord = 0xFFFFFFFFu;

u128 to_u128(const mpz_class& v) {
  mpz_class hi = v >> 64;
  mpz_class lo = v - (hi << 64);
  return (static_cast<u128>(hi.get_ui()) << 64) | lo.get_ui();
}

mpz_class from_u128(u128 v) {
  mpz_class hi(static_cast<unsigned long>(v >> 64));
  return (hi << 64) + static_cast<unsigned long>(v);
}

struct BlockResult {
  ExponentLedger ledger;
  bool probabilistic = false;
};

}  // namespace

u64 default_small_prime_bound(u64 x) {
  u64 root = isqrt_u64(x);
  if (root * root < x) ++root;
  return std::min<u64>(std::max<u64>(10'000, root), 1'000'000);
}

double ExponentLedger::log_of(const mpz_class& v) {
  signed long int exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * M_LN2;
}

void ExponentLedger::merge(const ExponentLedger& other) {
  for (const auto& [p, e] : other.small_) {
    auto& mine = small_[p];
    mine.alpha += e.alpha;
    mine.lambda = std::max(mine.lambda, e.lambda);
  }
  for (const auto& [p, e] : other.large_) {
    auto& mine = large_[p];
    mine.alpha += e.alpha;
    mine.lambda = std::max(mine.lambda, e.lambda);
  }
}

u64 ExponentLedger::alpha(const mpz_class& prime) const {
  if (prime.fits_ulong_p()) {
    auto it = small_.find(prime.get_ui());
    return it == small_.end() ? 0 : it->second.alpha;
  }
  auto it = large_.find(prime);
  return it == large_.end() ? 0 : it->second.alpha;
}

u32 ExponentLedger::lambda(const mpz_class& prime) const {
  if (prime.fits_ulong_p()) {
    auto it = small_.find(prime.get_ui());
    return it == small_.end() ? 0 : it->second.lambda;
  }
  auto it = large_.find(prime);
  return it == large_.end() ? 0 : it->second.lambda;
}

FactorizationTable FactorizationTable::build(const Polynomial& f, u64 x,
                                             const BuildOptions& opts) {
  if (x < 2) throw std::invalid_argument("factor table: x must be >= 2");
  if (x > (u64(1) << 32))
    throw resource_limit_error("factor table: x beyond supported range");

  FactorizationTable table(f, x);
  table.mode_ = opts.mode;

  PrimeRange primes = PrimeRange::up_to(x);
  const bool prime_args = opts.mode == ArgumentMode::primes;
  table.candidate_count_ = prime_args ? primes.count() : x;

  // rough memory estimate before committing: rank array + record overhead
  {
    const u64 est_records = prime_args ? primes.count() : x;
    const u64 est = 4 * x + est_records * 250;
    if (est > opts.max_bytes)
      throw resource_limit_error("factor table exceeds memory budget");
  }

  const u64 L0 = opts.small_prime_bound ? opts.small_prime_bound
                                        : default_small_prime_bound(x);
  table.small_prime_bound_ = L0;

  // value-size regime: fixed-width 128-bit staging when the worst case fits
  const unsigned d = f.degree();
  mpz_class worst = 0;
  for (size_t i = f.coeffs().size(); i-- > 0;)
    worst = worst * static_cast<unsigned long>(x) + abs(f.coeffs()[i]);
  const bool use128 =
      (static_cast<double>(d + 1) * std::log2(static_cast<double>(x)) <=
       120.0) &&
      mpz_sizeinbase(worst.get_mpz_t(), 2) <= 126;
  table.value_mode_ = use128 ? "uint128" : "mpz";

  // records + dense rank
  std::vector<u32> rank(x, kNoRecord);
  auto consider = [&](u64 n) {
    mpz_class value = abs(f.eval(mpz_class(static_cast<unsigned long>(n))));
    if (value <= 1) return;
    rank[n] = static_cast<u32>(table.records_.size());
    FactorRecord rec;
    rec.q = n;
    rec.value = std::move(value);
    table.records_.push_back(std::move(rec));
  };
  if (prime_args)
    primes.for_each_prime(consider);
  else
    for (u64 n = 0; n < x; ++n) consider(n);

  // root progressions for the small primes
  PrimeRange small_primes = PrimeRange::up_to(L0 + 1);
  std::vector<std::pair<u64, std::vector<u64>>> progressions;
  small_primes.for_each_prime([&](u64 l) {
    auto roots = roots_mod_prime(f, l).residues;
    if (!roots.empty()) progressions.emplace_back(l, std::move(roots));
  });

  const u64 block = std::max<u64>(opts.block_size, 1u << 12);
  const size_t nblocks = static_cast<size_t>((x + block - 1) / block);
  std::vector<BlockResult> results(nblocks);

  std::atomic<size_t> next{0};
  std::mutex fail_mutex;
  std::exception_ptr failure;

  auto process_block = [&](size_t b) {
    const u64 lo = b * block;
    const u64 hi = std::min(x, lo + block);
    BlockResult& out = results[b];

    // records in [lo, hi)
    auto first = std::lower_bound(
        table.records_.begin(), table.records_.end(), lo,
        [](const FactorRecord& r, u64 v) { return r.q < v; });
    auto last = std::lower_bound(
        table.records_.begin(), table.records_.end(), hi,
        [](const FactorRecord& r, u64 v) { return r.q < v; });
    const size_t span_begin = static_cast<size_t>(first - table.records_.begin());
    const size_t span_count = static_cast<size_t>(last - first);
    if (span_count == 0) return;

    std::vector<u128> cof128;
    std::vector<mpz_class> cofmpz;
    if (use128) {
      cof128.resize(span_count);
      for (size_t i = 0; i < span_count; ++i)
        cof128[i] = to_u128(table.records_[span_begin + i].value);
    } else {
      cofmpz.resize(span_count);
      for (size_t i = 0; i < span_count; ++i)
        cofmpz[i] = table.records_[span_begin + i].value;
    }

    const u64 floor_arg = std::max<u64>(lo, prime_args ? 2 : 0);
    for (const auto& [l, roots] : progressions) {
      const mpz_class l_mpz(static_cast<unsigned long>(l));
      for (u64 r : roots) {
        u64 n = r;
        if (n < floor_arg) n += l * ((floor_arg - n + l - 1) / l);
        for (; n < hi; n += l) {
          const u32 idx = rank[n];
          if (idx == kNoRecord) continue;
          const size_t local = idx - span_begin;
          u32 e = 0;
          if (use128) {
            u128& c = cof128[local];
            while (c % l == 0) {
              c /= l;
              ++e;
            }
          } else {
            mpz_class& c = cofmpz[local];
            while (mpz_divisible_ui_p(c.get_mpz_t(), l)) {
              mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), l);
              ++e;
            }
          }
          if (e == 0)
            throw std::logic_error("progression hit without divisibility");
          table.records_[idx].factors.emplace_back(l_mpz, e);
          out.ledger.add(l, e);
        }
      }
    }

    // split what survives the small-prime pass
    std::vector<std::pair<u64, unsigned>> fac64;
    for (size_t i = 0; i < span_count; ++i) {
      FactorRecord& rec = table.records_[span_begin + i];
      if (use128) {
        const u128 c = cof128[i];
        if (c == 1) continue;
        if (c <= std::numeric_limits<u64>::max()) {
          factor_u64(static_cast<u64>(c), fac64);
          for (const auto& [p, e] : fac64) {
            rec.factors.emplace_back(mpz_class(static_cast<unsigned long>(p)),
                                     e);
            out.ledger.add(p, static_cast<u32>(e));
          }
        } else {
          Factorization fz = factor(from_u128(c));
          out.probabilistic = out.probabilistic || fz.probabilistic;
          for (const auto& [p, e] : fz.factors) {
            rec.factors.emplace_back(p, e);
            out.ledger.add(p, static_cast<u32>(e));
          }
        }
      } else {
        const mpz_class& c = cofmpz[i];
        if (c == 1) continue;
        Factorization fz = factor(c);
        out.probabilistic = out.probabilistic || fz.probabilistic;
        for (const auto& [p, e] : fz.factors) {
          rec.factors.emplace_back(p, e);
          out.ledger.add(p, static_cast<u32>(e));
        }
      }
    }
  };

  auto worker = [&] {
    for (;;) {
      const size_t b = next.fetch_add(1);
      if (b >= nblocks) return;
      try {
        process_block(b);
      } catch (...) {
        std::lock_guard<std::mutex> lock(fail_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  const unsigned nthreads = std::max(1u, opts.threads);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (const BlockResult& res : results) {
    table.ledger_.merge(res.ledger);
    table.probabilistic_ = table.probabilistic_ || res.probabilistic;
  }
  return table;
}

FactorizationTable FactorizationTable::from_records(
    const Polynomial& f, u64 x, std::vector<FactorRecord> records,
    u64 small_prime_bound, ArgumentMode mode, bool probabilistic) {
  FactorizationTable table(f, x);
  table.mode_ = mode;
  table.small_prime_bound_ = small_prime_bound;
  table.probabilistic_ = probabilistic;
  table.records_ = std::move(records);

  mpz_class pk;
  for (auto& rec : table.records_) {
    rec.value = 1;
    for (const auto& [p, e] : rec.factors) {
      mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e);
      rec.value *= pk;
      table.ledger_.add(p, e);
    }
  }

  const unsigned d = f.degree();
  const bool use128 =
      static_cast<double>(d + 1) * std::log2(static_cast<double>(x)) <= 120.0;
  table.value_mode_ = use128 ? "uint128" : "mpz";
  table.candidate_count_ =
      mode == ArgumentMode::primes ? PrimeRange::up_to(x).count() : x;
  return table;
}

u64 alpha(const FactorizationTable& table, const mpz_class& prime) {
  return table.ledger().alpha(prime);
}

double log_Q(const FactorizationTable& table) {
  CompensatedSum sum;
  table.ledger().for_each([&](double logp, const mpz_class&,
                              const LedgerEntry& e) {
    sum.add(static_cast<double>(e.alpha) * logp);
  });
  return sum.value();
}

double log_L(const FactorizationTable& table) {
  CompensatedSum sum;
  table.ledger().for_each([&](double logp, const mpz_class&,
                              const LedgerEntry& e) {
    sum.add(static_cast<double>(e.lambda) * logp);
  });
  return sum.value();
}

double log_rad_L(const FactorizationTable& table) {
  CompensatedSum sum;
  table.ledger().for_each(
      [&](double logp, const mpz_class&, const LedgerEntry&) {
        sum.add(logp);
      });
  return sum.value();
}

Decomposition decompose(const FactorizationTable& table, double B,
                        double delta) {
  if (!(B >= 0.0) || !std::isfinite(B))
    throw std::invalid_argument("decompose: B must be >= 0");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("decompose: delta must be in (0, 1)");

  const long double x = static_cast<long double>(table.x());
  const long double x_b = sqrtl(x) * powl(logl(x), -static_cast<long double>(B));
  const u64 sqrt_floor = isqrt_u64(table.x());
  const long double x_delta = powl(x, static_cast<long double>(delta));

  Decomposition dec;
  dec.x_b = static_cast<double>(x_b);
  dec.x_delta = static_cast<double>(x_delta);

  CompensatedSum s, m, l, vl;
  table.ledger().for_each([&](double logp, const mpz_class& prime,
                              const LedgerEntry& e) {
    const double contribution = static_cast<double>(e.alpha) * logp;
    long double p;
    if (prime.fits_ulong_p())
      p = static_cast<long double>(prime.get_ui());
    else
      p = static_cast<long double>(mpz_get_d(prime.get_mpz_t()));
    if (p < x_b)
      s.add(contribution);
    else if (prime.fits_ulong_p() && prime.get_ui() <= sqrt_floor)
      m.add(contribution);
    else if (p < x_delta)
      l.add(contribution);
    else
      vl.add(contribution);
  });
  dec.log_q_small = s.value();
  dec.log_q_medium = m.value();
  dec.log_q_large = l.value();
  dec.log_q_very_large = vl.value();
  return dec;
}

GpdStats greatest_prime_divisor_stats(const FactorizationTable& table,
                                      double exponent, GpdBase base) {
  const double dmax = static_cast<double>(table.poly().degree() + 1);
  if (!(exponent > 0.0 && exponent < dmax))
    throw std::invalid_argument("density exponent out of range (0, d+1)");

  GpdStats stats;
  stats.flags.resize(table.records().size(), 0);
  const long double x = static_cast<long double>(table.x());
  const long double global_threshold = powl(x, static_cast<long double>(exponent));

  for (size_t i = 0; i < table.records().size(); ++i) {
    const FactorRecord& rec = table.records()[i];
    const long double threshold =
        base == GpdBase::argument
            ? powl(static_cast<long double>(rec.q),
                   static_cast<long double>(exponent))
            : global_threshold;
    const mpz_class& top = rec.factors.back().first;
    if (mpz_cmp_d(top.get_mpz_t(), static_cast<double>(threshold)) > 0) {
      stats.flags[i] = 1;
      ++stats.satisfied;
    }
  }
  stats.fraction = table.candidate_count() == 0
                       ? 0.0
                       : static_cast<double>(stats.satisfied) /
                             static_cast<double>(table.candidate_count());
  return stats;
}

}  // namespace polylcm
