#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "polylcm/common.hpp"

namespace polylcm {

enum class Irreducibility { accepted, rejected, inconclusive };

// Integer polynomial with coefficients in ascending order: coeffs[i] is the
// coefficient of x^i. Degree is at least 1 and the leading coefficient is
// nonzero; the constructor trims trailing zeros and rejects constants.
// Immutable after construction, safe to share across threads.
class Polynomial {
 public:
  explicit Polynomial(std::vector<mpz_class> coeffs);

  unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  const mpz_class& leading() const { return coeffs_.back(); }
  const mpz_class& discriminant() const { return disc_; }
  const mpz_class& content() const { return content_; }

  mpz_class eval(const mpz_class& n) const;

  // f(n) mod m for 1 <= m < 2^63. Reduces coefficients on the fly; callers
  // scanning many points at a fixed modulus should reduce once themselves.
  u64 eval_mod(u64 n, u64 m) const;

  // Ascending coefficients of f'; size degree() (constant for linear f).
  std::vector<mpz_class> derivative() const;

  // Comma-separated ascending coefficients, e.g. "1,0,1" for 1 + x^2.
  std::string canonical_text() const;

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<mpz_class> coeffs_;
  mpz_class disc_;
  mpz_class content_;
};

// Resultant of two integer polynomials (ascending coefficients), computed
// exactly as the Sylvester determinant by fraction-free elimination.
mpz_class resultant(const std::vector<mpz_class>& a,
                    const std::vector<mpz_class>& b);

// Heuristic irreducibility check over Q: rational-root rejection plus
// factor-degree pattern analysis of f mod p for the first 25 usable primes.
// "accepted" is a proof; "rejected" is a proof; "inconclusive" means no
// certificate either way (x^4+1 defeats every mod-p certificate).
Irreducibility check_irreducible(const Polynomial& f);

}  // namespace polylcm
