#include "polylcm/congruence.hpp"

#include <algorithm>

#include "polylcm/factorizer.hpp"
#include "zp_poly.hpp"

namespace polylcm {

namespace {

constexpr u64 kScanThreshold = u64(1) << 14;

u64 checked_pow(u64 p, unsigned k) {
  u128 m = 1;
  for (unsigned i = 0; i < k; ++i) {
    m *= p;
    if (m > (u128(1) << 62))
      throw resource_limit_error("prime power exceeds supported modulus");
  }
  return static_cast<u64>(m);
}

std::vector<u64> scan_roots(const Polynomial& f, u64 m) {
  // reduce coefficients once, then Horner per residue
  zp::Poly fp(f.coeffs().size());
  for (size_t i = 0; i < fp.size(); ++i)
    fp[i] = mpz_fdiv_ui(f.coeffs()[i].get_mpz_t(), m);
  std::vector<u64> roots;
  for (u64 r = 0; r < m; ++r)
    if (zp::eval(fp, r, m) == 0) roots.push_back(r);
  return roots;
}

void split_linear_product(const zp::Poly& h, u64 p, std::vector<u64>& out) {
  if (zp::deg(h) <= 0) return;
  if (zp::deg(h) == 1) {
    // monic x + c0 -> root -c0
    out.push_back(h[0] == 0 ? 0 : p - h[0]);
    return;
  }
  zp::Poly g = h;
  if (g[0] == 0) {
    out.push_back(0);
    g.erase(g.begin());
    split_linear_product(g, p, out);
    return;
  }
  for (u64 a = 1;; ++a) {
    zp::Poly t = zp::pow_mod_poly(zp::Poly{a % p, 1}, (p - 1) / 2, g, p);
    if (t.empty()) t.push_back(0);
    t[0] = zp::submod(t[0], 1, p);
    zp::trim(t);
    zp::Poly u = zp::gcd(g, t, p);
    if (zp::deg(u) > 0 && zp::deg(u) < zp::deg(g)) {
      split_linear_product(u, p, out);
      split_linear_product(zp::quot(g, u, p), p, out);
      return;
    }
  }
}

zp::Poly linear_part_mod_p(const Polynomial& f, u64 p) {
  // gcd(f, x^p - x): the product of the distinct linear factors of f mod p
  zp::Poly fp = zp::make_monic(zp::reduce(f.coeffs(), p), p);
  if (zp::deg(fp) < 1) return fp;
  zp::Poly xp = zp::pow_mod_poly(zp::Poly{0, 1}, p, fp, p);
  if (xp.size() < 2) xp.resize(2, 0);
  xp[1] = zp::submod(xp[1], 1, p);
  zp::trim(xp);
  return zp::gcd(fp, xp, p);
}

}  // namespace

bool hensel_applicable(const Polynomial& f, u64 p) {
  return mpz_fdiv_ui(f.discriminant().get_mpz_t(), p) != 0 &&
         mpz_fdiv_ui(f.leading().get_mpz_t(), p) != 0;
}

ResidueClassSet roots_mod_prime(const Polynomial& f, u64 p) {
  if (!is_prime_u64(p))
    throw std::invalid_argument("roots_mod_prime: modulus is not prime");

  ResidueClassSet out;
  out.modulus = p;
  if (p < kScanThreshold) {
    out.residues = scan_roots(f, p);
    return out;
  }

  zp::Poly fp = zp::reduce(f.coeffs(), p);
  if (fp.empty()) {
    // p divides every coefficient; every residue is a root
    if (p > (u64(1) << 24))
      throw resource_limit_error("full residue set too large to materialize");
    out.residues.resize(p);
    for (u64 r = 0; r < p; ++r) out.residues[r] = r;
    return out;
  }
  zp::Poly g = linear_part_mod_p(f, p);
  split_linear_product(g, p, out.residues);
  std::sort(out.residues.begin(), out.residues.end());
  return out;
}

u64 root_count_mod_prime(const Polynomial& f, u64 p) {
  if (p < kScanThreshold) return scan_roots(f, p).size();
  zp::Poly fp = zp::reduce(f.coeffs(), p);
  if (fp.empty()) return p;
  return static_cast<u64>(zp::deg(linear_part_mod_p(f, p)));
}

ResidueClassSet hensel_lift(const Polynomial& f, u64 p, unsigned k) {
  if (k == 0) throw std::invalid_argument("hensel_lift: k must be >= 1");
  if (!hensel_applicable(f, p))
    throw std::invalid_argument(
        "hensel_lift: ramified prime; use roots_mod_prime_power_bruteforce");
  ResidueClassSet base = roots_mod_prime(f, p);
  if (k == 1) return base;

  const u64 pk = checked_pow(p, k);
  const auto deriv = f.derivative();

  ResidueClassSet out;
  out.modulus = pk;
  out.residues.reserve(base.residues.size());
  for (u64 r0 : base.residues) {
    // f'(r0) stays invertible mod p along the lift
    u64 dr = 0;
    {
      u64 acc = 0;
      for (size_t i = deriv.size(); i-- > 0;) {
        acc = zp::mulmod(acc, r0 % p, p);
        acc = zp::addmod(acc, mpz_fdiv_ui(deriv[i].get_mpz_t(), p), p);
      }
      dr = acc;
    }
    if (dr == 0)
      throw std::invalid_argument(
          "hensel_lift: repeated root mod p; use bruteforce");
    const u64 inv = zp::invmod(dr, p);

    u64 r = r0;
    u64 mod = p;
    for (unsigned level = 1; level < k; ++level) {
      const u64 next = mod * p;
      const u64 fr = f.eval_mod(r, next);
      // fr is divisible by p^level; Newton correction t = -(fr/p^level)/f'(r)
      const u64 s = (fr / mod) % p;
      const u64 t = zp::mulmod(s == 0 ? 0 : p - s, inv, p);
      r += t % p * mod;
      mod = next;
    }
    out.residues.push_back(r);
  }
  std::sort(out.residues.begin(), out.residues.end());
  return out;
}

ResidueClassSet roots_mod_prime_power_bruteforce(const Polynomial& f, u64 p,
                                                 unsigned k, u64 ceiling) {
  if (!is_prime_u64(p))
    throw std::invalid_argument("bruteforce: modulus base is not prime");
  if (k == 0) throw std::invalid_argument("bruteforce: k must be >= 1");
  u64 pk = checked_pow(p, k);
  if (pk > ceiling)
    throw resource_limit_error("prime power exceeds brute-force ceiling");

  std::vector<u64> roots = scan_roots(f, p);
  u64 mod = p;
  for (unsigned level = 1; level < k; ++level) {
    const u64 next = mod * p;
    std::vector<u64> lifted;
    for (u64 r : roots)
      for (u64 t = 0; t < p; ++t) {
        const u64 cand = r + t * mod;
        if (f.eval_mod(cand, next) == 0) lifted.push_back(cand);
      }
    roots = std::move(lifted);
    mod = next;
  }
  std::sort(roots.begin(), roots.end());
  return ResidueClassSet{pk, std::move(roots)};
}

ResidueClassSet varrho(const Polynomial& f, u64 m, u64 bruteforce_ceiling) {
  if (m == 0) throw std::invalid_argument("varrho: modulus must be >= 1");
  if (m == 1) return ResidueClassSet{1, {0}};

  std::vector<std::pair<u64, unsigned>> fac;
  factor_u64(m, fac);

  ResidueClassSet acc{1, {0}};
  for (const auto& [p, e] : fac) {
    ResidueClassSet part;
    if (e == 1)
      part = roots_mod_prime(f, p);
    else if (hensel_applicable(f, p))
      part = hensel_lift(f, p, e);
    else
      part = roots_mod_prime_power_bruteforce(f, p, e, bruteforce_ceiling);
    if (part.residues.empty()) return ResidueClassSet{m, {}};

    ResidueClassSet merged;
    merged.modulus = acc.modulus * part.modulus;
    merged.residues.reserve(acc.residues.size() * part.residues.size());
    // CRT: r == a mod M, r == b mod q^e
    const u64 M = acc.modulus, Q = part.modulus;
    const u64 Minv = zp::invmod(M % Q, Q);
    for (u64 a : acc.residues)
      for (u64 b : part.residues) {
        const u64 t = zp::mulmod(zp::submod(b % Q, a % Q, Q), Minv, Q);
        merged.residues.push_back(a + t * M);
      }
    acc = std::move(merged);
  }
  std::sort(acc.residues.begin(), acc.residues.end());
  if (acc.modulus != m) throw std::logic_error("varrho: modulus mismatch");
  return acc;
}

}  // namespace polylcm
