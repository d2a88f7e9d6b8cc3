#include "polylcm/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "polylcm/factorizer.hpp"
#include "zp_poly.hpp"

namespace polylcm {

namespace {

mpz_class discriminant_of(const std::vector<mpz_class>& coeffs) {
  const size_t d = coeffs.size() - 1;
  std::vector<mpz_class> deriv(d);
  for (size_t i = 1; i <= d; ++i)
    deriv[i - 1] = coeffs[i] * static_cast<unsigned long>(i);
  mpz_class res = resultant(coeffs, deriv);
  mpz_class disc;
  mpz_divexact(disc.get_mpz_t(), res.get_mpz_t(), coeffs.back().get_mpz_t());
  if ((d * (d - 1) / 2) % 2 == 1) disc = -disc;
  return disc;
}

}  // namespace

Polynomial::Polynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.size() < 2)
    throw std::invalid_argument("polynomial must have degree >= 1");
  disc_ = discriminant_of(coeffs_);
  content_ = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(content_.get_mpz_t(), content_.get_mpz_t(), c.get_mpz_t());
    if (content_ == 1) break;
  }
}

mpz_class Polynomial::eval(const mpz_class& n) const {
  mpz_class acc = coeffs_.back();
  for (size_t i = coeffs_.size() - 1; i-- > 0;) {
    acc *= n;
    acc += coeffs_[i];
  }
  return acc;
}

u64 Polynomial::eval_mod(u64 n, u64 m) const {
  if (m == 0) throw std::invalid_argument("eval_mod: zero modulus");
  if (m == 1) return 0;
  n %= m;
  u64 acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc = zp::mulmod(acc, n, m);
    acc = zp::addmod(acc, mpz_fdiv_ui(coeffs_[i].get_mpz_t(), m), m);
  }
  return acc;
}

std::vector<mpz_class> Polynomial::derivative() const {
  std::vector<mpz_class> deriv(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i)
    deriv[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return deriv;
}

std::string Polynomial::canonical_text() const {
  std::ostringstream os;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ',';
    os << coeffs_[i].get_str();
  }
  return os.str();
}

mpz_class resultant(const std::vector<mpz_class>& a,
                    const std::vector<mpz_class>& b) {
  std::vector<mpz_class> f = a, g = b;
  while (!f.empty() && f.back() == 0) f.pop_back();
  while (!g.empty() && g.back() == 0) g.pop_back();
  if (f.empty() || g.empty()) return 0;
  const size_t m = f.size() - 1, n = g.size() - 1;
  if (m == 0 && n == 0) return 1;

  // Sylvester matrix, determinant by Bareiss fraction-free elimination.
  const size_t N = m + n;
  std::vector<std::vector<mpz_class>> mat(N, std::vector<mpz_class>(N, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j <= m; ++j) mat[i][i + j] = f[m - j];
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j <= n; ++j) mat[n + i][i + j] = g[n - j];

  mpz_class prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < N; ++k) {
    if (mat[k][k] == 0) {
      size_t pivot = k + 1;
      while (pivot < N && mat[pivot][k] == 0) ++pivot;
      if (pivot == N) return 0;
      std::swap(mat[k], mat[pivot]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < N; ++i) {
      for (size_t j = k + 1; j < N; ++j) {
        mpz_class t = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j];
        mpz_divexact(mat[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      mat[i][k] = 0;
    }
    prev = mat[k][k];
  }
  return sign > 0 ? mat[N - 1][N - 1] : mpz_class(-mat[N - 1][N - 1]);
}

namespace {

// Degrees (with multiplicity, though f mod p is squarefree for the primes we
// use) of the irreducible factors of f mod p, by distinct-degree splitting.
std::vector<unsigned> factor_degrees_mod_p(const Polynomial& f, u64 p) {
  zp::Poly fp = zp::make_monic(zp::reduce(f.coeffs(), p), p);
  std::vector<unsigned> degrees;
  zp::Poly w{0, 1};  // x
  unsigned k = 1;
  while (zp::deg(fp) >= static_cast<int>(2 * k)) {
    w = zp::pow_mod_poly(std::move(w), p, fp, p);  // now x^(p^k) mod fp
    zp::Poly wx = w;
    if (wx.size() < 2) wx.resize(2, 0);
    wx[1] = zp::submod(wx[1], 1, p);
    zp::trim(wx);
    zp::Poly g = zp::gcd(fp, wx, p);
    if (zp::deg(g) > 0) {
      for (int i = 0; i < zp::deg(g) / static_cast<int>(k); ++i)
        degrees.push_back(k);
      fp = zp::quot(std::move(fp), g, p);
      w = zp::rem(std::move(w), fp, p);
    }
    ++k;
  }
  if (zp::deg(fp) > 0) degrees.push_back(static_cast<unsigned>(zp::deg(fp)));
  return degrees;
}

std::vector<mpz_class> divisors_of(const mpz_class& n, size_t cap) {
  Factorization fz = factor(abs(n));
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : fz.factors) {
    const size_t base = divs.size();
    if (base * (e + 1) > cap) throw resource_limit_error("too many divisors");
    mpz_class pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  return divs;
}

bool has_rational_root(const Polynomial& f) {
  const auto& c = f.coeffs();
  const unsigned d = f.degree();
  std::vector<mpz_class> nums, dens;
  try {
    nums = divisors_of(c[0], 4096);
    dens = divisors_of(c[d], 4096);
  } catch (const std::exception&) {
    return false;  // cannot enumerate candidates; mod-p analysis still runs
  }
  mpz_class g, acc, numpow;
  for (const auto& den : dens) {
    for (const auto& num : nums) {
      mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      if (g != 1) continue;
      for (int sign = 0; sign < 2; ++sign) {
        const mpz_class r = sign ? mpz_class(-num) : num;
        // sum a_i r^i den^(d-i) == 0 iff r/den is a root
        acc = 0;
        numpow = 1;
        mpz_class denpow = 1;
        std::vector<mpz_class> denpows(d + 1);
        for (unsigned i = 0; i <= d; ++i) {
          denpows[d - i] = denpow;
          denpow *= den;
        }
        for (unsigned i = 0; i <= d; ++i) {
          acc += c[i] * numpow * denpows[i];
          numpow *= r;
        }
        if (acc == 0) return true;
      }
    }
  }
  return false;
}

}  // namespace

Irreducibility check_irreducible(const Polynomial& f) {
  const unsigned d = f.degree();
  if (d == 1) return Irreducibility::accepted;
  if (f.discriminant() == 0) return Irreducibility::rejected;
  if (f.coeffs()[0] == 0) return Irreducibility::rejected;
  if (has_rational_root(f)) return Irreducibility::rejected;

  // Degree patterns of f mod p across several good primes. A reduction that
  // stays irreducible is a certificate; so is an empty intersection of the
  // possible proper-factor degrees.
  std::set<unsigned> possible;
  for (unsigned k = 1; k < d; ++k) possible.insert(k);

  unsigned used = 0;
  for (u64 p = 2; used < 25 && p < 5000; ++p) {
    if (!is_prime_u64(p)) continue;
    if (mpz_fdiv_ui(f.leading().get_mpz_t(), p) == 0) continue;
    if (mpz_fdiv_ui(f.discriminant().get_mpz_t(), p) == 0) continue;
    ++used;

    const auto degrees = factor_degrees_mod_p(f, p);
    if (degrees.size() == 1) return Irreducibility::accepted;

    // subset sums of the factor degrees = degrees of factors of f mod p
    std::vector<char> sums(d + 1, 0);
    sums[0] = 1;
    for (unsigned dg : degrees)
      for (unsigned s = d; s >= dg; --s)
        if (sums[s - dg]) sums[s] = 1;

    for (auto it = possible.begin(); it != possible.end();) {
      if (!sums[*it])
        it = possible.erase(it);
      else
        ++it;
    }
    if (possible.empty()) return Irreducibility::accepted;
  }
  return Irreducibility::inconclusive;
}

std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace polylcm
