#pragma once

// Dense univariate arithmetic over Z/p for prime p < 2^62. Internal to the
// library; the public surface is polynomial.hpp / congruence.hpp.
// Polynomials are ascending coefficient vectors with no leading zeros; the
// empty vector is the zero polynomial.

#include <gmpxx.h>

#include <algorithm>
#include <vector>

#include "polylcm/common.hpp"

namespace polylcm::zp {

using Poly = std::vector<u64>;

inline u64 mulmod(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<u128>(a) * b % p);
}

inline u64 addmod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return (s >= p || s < a) ? s - p : s;
}

inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline u64 invmod(u64 a, u64 p) {
  // extended Euclid; p prime, a not 0 mod p
  long long t = 0, nt = 1;
  long long r = static_cast<long long>(p), nr = static_cast<long long>(a % p);
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<u64>(t);
}

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

inline Poly reduce(const std::vector<mpz_class>& coeffs, u64 p) {
  Poly f(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i)
    f[i] = mpz_fdiv_ui(coeffs[i].get_mpz_t(), p);
  trim(f);
  return f;
}

inline u64 eval(const Poly& f, u64 x, u64 p) {
  u64 acc = 0;
  for (size_t i = f.size(); i-- > 0;) acc = addmod(mulmod(acc, x, p), f[i], p);
  return acc;
}

inline Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = addmod(c[i + j], mulmod(a[i], b[j], p), p);
  }
  trim(c);
  return c;
}

inline Poly make_monic(Poly f, u64 p) {
  trim(f);
  if (f.empty()) return f;
  u64 inv = invmod(f.back(), p);
  if (inv != 1)
    for (auto& c : f) c = mulmod(c, inv, p);
  return f;
}

// remainder of a modulo monic b
inline Poly rem(Poly a, const Poly& b, u64 p) {
  trim(a);
  int db = deg(b);
  while (deg(a) >= db) {
    u64 lead = a.back();
    int shift = deg(a) - db;
    if (lead != 0) {
      for (int i = 0; i <= db; ++i) {
        a[static_cast<size_t>(i + shift)] =
            submod(a[static_cast<size_t>(i + shift)],
                   mulmod(lead, b[static_cast<size_t>(i)], p), p);
      }
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

// quotient of a by monic b (exact or with remainder discarded)
inline Poly quot(Poly a, const Poly& b, u64 p) {
  trim(a);
  int db = deg(b);
  if (deg(a) < db) return {};
  Poly q(static_cast<size_t>(deg(a) - db + 1), 0);
  while (deg(a) >= db) {
    u64 lead = a.back();
    int shift = deg(a) - db;
    q[static_cast<size_t>(shift)] = lead;
    if (lead != 0) {
      for (int i = 0; i <= db; ++i) {
        a[static_cast<size_t>(i + shift)] =
            submod(a[static_cast<size_t>(i + shift)],
                   mulmod(lead, b[static_cast<size_t>(i)], p), p);
      }
    }
    a.pop_back();
    trim(a);
  }
  return q;
}

inline Poly gcd(Poly a, Poly b, u64 p) {
  a = make_monic(std::move(a), p);
  b = make_monic(std::move(b), p);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = make_monic(std::move(r), p);
  }
  return a;
}

// base^e mod (modulus, p); modulus monic of degree >= 1
inline Poly pow_mod_poly(Poly base, u64 e, const Poly& modulus, u64 p) {
  Poly result{1 % p};
  trim(result);
  base = rem(std::move(base), modulus, p);
  while (e) {
    if (e & 1) result = rem(mul(result, base, p), modulus, p);
    base = rem(mul(base, base, p), modulus, p);
    e >>= 1;
  }
  return result;
}

}  // namespace polylcm::zp
