#include "polylcm/mertens.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "polylcm/analytic.hpp"
#include "polylcm/congruence.hpp"

namespace polylcm {

namespace {

constexpr u64 kChunk = u64(1) << 20;

struct ChunkTotals {
  CompensatedSum mertens;
  u64 rho_total = 0;
};

// Per-chunk partial sums over a fixed grid, merged in chunk order, so totals
// are bit-identical for any thread count.
std::vector<ChunkTotals> chunk_totals(const Polynomial& f,
                                      const PrimeRange& primes,
                                      unsigned threads) {
  const u64 x = primes.limit();
  const size_t nchunks = x < 2 ? 0 : static_cast<size_t>((x + kChunk - 1) / kChunk);
  std::vector<ChunkTotals> totals(nchunks);

  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const size_t c = next.fetch_add(1);
      if (c >= nchunks) return;
      const u64 lo = c * kChunk;
      const u64 hi = std::min(x, lo + kChunk);
      ChunkTotals& out = totals[c];
      for (u64 n = lo; n < hi; ++n) {
        if (!primes.is_prime(n)) continue;
        const u64 rho = root_count_mod_prime(f, n);
        if (rho == 0) continue;
        out.rho_total += rho;
        out.mertens.add(static_cast<double>(rho) *
                        std::log(static_cast<double>(n)) /
                        static_cast<double>(n - 1));
      }
    }
  };

  const unsigned nthreads = std::max(1u, threads);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
  }
  return totals;
}

}  // namespace

std::vector<DriftPoint> drift_series(const Polynomial& f,
                                     const std::vector<u64>& xs,
                                     unsigned threads) {
  if (xs.empty()) return {};
  for (size_t i = 0; i + 1 < xs.size(); ++i)
    if (xs[i] >= xs[i + 1])
      throw std::invalid_argument("drift_series: checkpoints must ascend");
  if (xs.front() < 2)
    throw std::invalid_argument("drift_series: checkpoints must be >= 2");

  const u64 max_x = xs.back();
  PrimeRange primes = PrimeRange::up_to(max_x);
  const auto totals = chunk_totals(f, primes, threads);

  // prefix over whole chunks, then a serial tail scan inside the chunk that
  // contains each checkpoint
  std::vector<DriftPoint> out;
  out.reserve(xs.size());
  CompensatedSum prefix;
  size_t chunk = 0;
  for (u64 cp : xs) {
    const size_t full = static_cast<size_t>(cp / kChunk);
    for (; chunk < full; ++chunk) prefix.add(totals[chunk].mertens);
    CompensatedSum at_cp = prefix;
    for (u64 n = full * kChunk; n < cp; ++n) {
      if (!primes.is_prime(n)) continue;
      const u64 rho = root_count_mod_prime(f, n);
      if (rho == 0) continue;
      at_cp.add(static_cast<double>(rho) * std::log(static_cast<double>(n)) /
                static_cast<double>(n - 1));
    }
    DriftPoint point;
    point.x = cp;
    point.sum = at_cp.value();
    point.drift = point.sum - std::log(static_cast<double>(cp));
    out.push_back(point);
  }
  return out;
}

double mertens_sum(const Polynomial& f, u64 x, unsigned threads) {
  if (x < 2) throw std::invalid_argument("mertens_sum: x must be >= 2");
  return drift_series(f, {x}, threads).front().sum;
}

LiComparison root_count_vs_li(const Polynomial& f, u64 x, unsigned threads) {
  if (x < 3) throw std::invalid_argument("root_count_vs_li: x must be >= 3");
  PrimeRange primes = PrimeRange::up_to(x);
  const auto totals = chunk_totals(f, primes, threads);
  LiComparison cmp;
  for (const auto& t : totals) cmp.sum_rho += t.rho_total;
  cmp.li = log_integral(static_cast<double>(x));
  cmp.ratio = static_cast<double>(cmp.sum_rho) / cmp.li;
  return cmp;
}

double lambda_weighted_varsigma_sum(const Polynomial& f,
                                    const PrimeRange& range, u64 bound) {
  if (bound > range.limit())
    throw std::invalid_argument(
        "lambda_weighted_varsigma_sum: bound exceeds sieved range");
  CompensatedSum sum;
  for (u64 p = 2; p < bound; ++p) {
    if (!range.is_prime(p)) continue;
    const double logp = std::log(static_cast<double>(p));
    for (u64 m = p; m < bound; ) {
      const u64 count = varsigma(f, range, m);
      if (count) sum.add(static_cast<double>(count) * logp);
      if (m > (bound - 1) / p) break;  // next power would overflow/exceed
      m *= p;
    }
  }
  return sum.value();
}

}  // namespace polylcm
