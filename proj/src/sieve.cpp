#include "polylcm/sieve.hpp"

#include <algorithm>
#include <cmath>

#include "polylcm/congruence.hpp"
#include "polylcm/factorizer.hpp"

namespace polylcm {

PrimeRange PrimeRange::up_to(u64 x, u64 segment_size, u64 max_bytes) {
  PrimeRange range;
  range.limit_ = x;
  if (x < 2) return range;
  if (x / 8 + 64 > max_bytes)
    throw resource_limit_error("prime range exceeds memory budget");
  range.bits_.assign((x + 63) / 64, 0);

  // small primes up to sqrt(x) by a plain sieve
  const u64 root = isqrt_u64(x - 1);
  std::vector<char> small(root + 1, 1);
  std::vector<u64> base;
  for (u64 i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(i);
    for (u64 j = i * i; j <= root; j += i) small[j] = 0;
  }

  std::vector<char> segment(segment_size);
  for (u64 low = 2; low < x; low += segment_size) {
    const u64 high = std::min(x, low + segment_size);
    std::fill(segment.begin(), segment.begin() + (high - low), 1);
    for (u64 p : base) {
      if (p * p >= high) break;
      u64 start = std::max(p * p, (low + p - 1) / p * p);
      for (u64 j = start; j < high; j += p) segment[j - low] = 0;
    }
    for (u64 n = low; n < high; ++n)
      if (segment[n - low]) {
        range.bits_[n >> 6] |= u64(1) << (n & 63);
        ++range.count_;
      }
  }
  return range;
}

u64 PrimeRange::count_in_ap(u64 m, u64 a) const {
  if (m == 0 || a >= m)
    throw std::invalid_argument("count_in_ap: need 0 <= a < m");
  if (m == 1) return count_;
  u64 n = a;
  if (n < 2) n += m * ((2 - n + m - 1) / m);
  u64 c = 0;
  for (; n < limit_; n += m) c += is_prime(n);
  return c;
}

u64 varsigma(const Polynomial& f, const PrimeRange& range, u64 m) {
  const ResidueClassSet roots = varrho(f, m);
  u64 total = 0;
  for (u64 r : roots.residues) total += range.count_in_ap(m, r);
  return total;
}

u64 totient(u64 m) {
  if (m == 0) throw std::invalid_argument("totient: m must be >= 1");
  std::vector<std::pair<u64, unsigned>> fac;
  factor_u64(m, fac);
  u64 phi = m;
  for (const auto& [p, e] : fac) phi -= phi / p;
  return phi;
}

double von_mangoldt(u64 m) {
  if (m == 0) throw std::invalid_argument("von_mangoldt: m must be >= 1");
  if (m == 1) return 0.0;
  std::vector<std::pair<u64, unsigned>> fac;
  factor_u64(m, fac);
  if (fac.size() != 1) return 0.0;
  return std::log(static_cast<double>(fac[0].first));
}

}  // namespace polylcm
