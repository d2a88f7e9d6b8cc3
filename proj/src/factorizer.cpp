#include "polylcm/factorizer.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "zp_poly.hpp"

namespace polylcm {

namespace {

constexpr u64 kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
                                97};

// Jim Sinclair's witness set, deterministic for all n < 2^64.
constexpr u64 kWitnesses64[] = {2, 325, 9375, 28178, 450775, 9780504,
                                1795265022};

// First 13 primes: deterministic certificate for n < 3.317e24.
constexpr u64 kWitnessesBig[] = {2,  3,  5,  7,  11, 13, 17,
                                 19, 23, 29, 31, 37, 41};

bool strong_probable_prime_u64(u64 n, u64 a) {
  a %= n;
  if (a == 0) return true;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = zp::powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = zp::mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

u64 step_u64(u64 y, u64 c, u64 n) {
  u64 t = zp::mulmod(y, y, n) + c;
  if (t >= n || t < c) t -= n;
  return t;
}

// Brent's cycle variant of Pollard rho; n odd composite, no factor <= 97.
// Fixed start y = 2 and cycle constants c = 1, 2, 3, ... on retry keep every
// run bit-reproducible.
u64 brent_u64(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
    const u64 batch = 128;
    while (g == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step_u64(y, c, n);
      for (u64 k = 0; k < r && g == 1; k += batch) {
        ys = y;
        const u64 lim = std::min(batch, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = step_u64(y, c, n);
          q = zp::mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = step_u64(ys, c, n);
        if (ys == x) {
          g = n;  // whole cycle collapsed, retry with next c
          break;
        }
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (g != n) return g;
  }
}

void factor_u64_rec(u64 n, std::map<u64, unsigned>& acc) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    acc[n] += 1;
    return;
  }
  u64 d = brent_u64(n);
  factor_u64_rec(d, acc);
  factor_u64_rec(n / d, acc);
}

// Same shape as brent_u64 over mpz, with an iteration budget: exhausting it
// raises factorization_error rather than returning a partial split.
mpz_class brent_mpz(const mpz_class& n) {
  const u64 budget_per_c = u64(1) << 26;
  for (u64 c = 1; c <= 24; ++c) {
    mpz_class y = 2, x, ys, q = 1, g = 1, diff;
    u64 r = 1, spent = 0;
    const u64 batch = 128;
    while (g == 1 && spent < budget_per_c) {
      x = y;
      for (u64 i = 0; i < r; ++i) {
        y = (y * y + c) % n;
      }
      spent += r;
      for (u64 k = 0; k < r && g == 1; k += batch) {
        ys = y;
        const u64 lim = std::min(batch, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          diff = x - y;
          if (diff < 0) diff = -diff;
          q = q * diff % n;
        }
        spent += lim;
        g = gcd(q, n);
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        if (ys == x) {
          g = n;
          break;
        }
        diff = x - ys;
        if (diff < 0) diff = -diff;
        g = gcd(diff, n);
      }
    }
    if (g != n && g != 1) return g;
  }
  throw factorization_error("pollard-brent budget exhausted for n = " +
                            n.get_str());
}

void factor_mpz_rec(const mpz_class& n, std::map<mpz_class, unsigned>& acc,
                    bool& probabilistic) {
  if (n == 1) return;
  if (n.fits_ulong_p()) {
    std::vector<std::pair<u64, unsigned>> small;
    factor_u64(n.get_ui(), small);
    for (auto& [p, e] : small) acc[mpz_class(static_cast<unsigned long>(p))] += e;
    return;
  }
  bool prob = false;
  if (is_prime(n, &prob)) {
    probabilistic = probabilistic || prob;
    acc[n] += 1;
    return;
  }
  mpz_class d = brent_mpz(n);
  factor_mpz_rec(d, acc, probabilistic);
  factor_mpz_rec(n / d, acc, probabilistic);
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : kSmallPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 101 * 101) return true;
  for (u64 a : kWitnesses64)
    if (!strong_probable_prime_u64(n, a)) return false;
  return true;
}

bool is_prime(const mpz_class& n, bool* probabilistic) {
  if (probabilistic) *probabilistic = false;
  if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());

  for (u64 p : kSmallPrimes)
    if (mpz_fdiv_ui(n.get_mpz_t(), p) == 0) return false;

  static const mpz_class deterministic_bound("3317044064679887385961981");
  if (probabilistic && n >= deterministic_bound) *probabilistic = true;

  const mpz_class n1 = n - 1;
  mpz_class d = n1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;
  mpz_class x;
  for (u64 a : kWitnessesBig) {
    const mpz_class base(static_cast<unsigned long>(a));
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n1) continue;
    bool witness = true;
    for (unsigned long i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

void factor_u64(u64 n, std::vector<std::pair<u64, unsigned>>& out) {
  out.clear();
  if (n == 0) throw std::invalid_argument("factor_u64: n must be >= 1");
  for (u64 p : kSmallPrimes) {
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) {
    std::map<u64, unsigned> acc;
    factor_u64_rec(n, acc);
    for (auto& [p, e] : acc) out.emplace_back(p, e);
  }
  std::sort(out.begin(), out.end());
}

Factorization factor(const mpz_class& n) {
  if (n < 1) throw std::invalid_argument("factor: n must be >= 1");
  Factorization result;
  if (n.fits_ulong_p()) {
    std::vector<std::pair<u64, unsigned>> small;
    factor_u64(n.get_ui(), small);
    for (auto& [p, e] : small)
      result.factors.emplace_back(mpz_class(static_cast<unsigned long>(p)), e);
    return result;
  }
  mpz_class rest = n;
  std::map<mpz_class, unsigned> acc;
  for (u64 p : kSmallPrimes) {
    if (mpz_fdiv_ui(rest.get_mpz_t(), p) == 0) {
      unsigned e = 0;
      while (mpz_fdiv_ui(rest.get_mpz_t(), p) == 0) {
        rest /= static_cast<unsigned long>(p);
        ++e;
      }
      acc[mpz_class(static_cast<unsigned long>(p))] = e;
    }
  }
  factor_mpz_rec(rest, acc, result.probabilistic);
  result.factors.assign(acc.begin(), acc.end());
  return result;
}

}  // namespace polylcm
