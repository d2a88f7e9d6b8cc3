#include <doctest.h>

#include "polylcm/factorizer.hpp"

using namespace polylcm;

TEST_CASE("u64 primality") {
  CHECK(!is_prime_u64(0));
  CHECK(!is_prime_u64(1));
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(!is_prime_u64(9));
  CHECK(is_prime_u64(97));
  CHECK(!is_prime_u64(97 * 89));
  // strong pseudoprime traps
  CHECK(!is_prime_u64(3215031751ull));          // spsp to 2,3,5,7
  CHECK(!is_prime_u64(341550071728321ull));     // spsp to 2..17
  CHECK(is_prime_u64((u64(1) << 61) - 1));      // Mersenne prime
  CHECK(!is_prime_u64((u64(1) << 59) - 1));
  CHECK(is_prime_u64(18446744073709551557ull));  // largest u64 prime
}

TEST_CASE("u64 factorization") {
  std::vector<std::pair<u64, unsigned>> out;
  factor_u64(1, out);
  CHECK(out.empty());
  factor_u64(720, out);
  CHECK(out == std::vector<std::pair<u64, unsigned>>{{2, 4}, {3, 2}, {5, 1}});
  factor_u64((u64(1) << 59) - 1, out);
  CHECK(out == std::vector<std::pair<u64, unsigned>>{{179951, 1},
                                                     {3203431780337ull, 1}});
  // product of two primes straddling 2^31
  factor_u64(2147483647ull * 2147483629ull, out);
  CHECK(out == std::vector<std::pair<u64, unsigned>>{{2147483629ull, 1},
                                                     {2147483647ull, 1}});
  CHECK_THROWS_AS(factor_u64(0, out), std::invalid_argument);
}

TEST_CASE("factorization is deterministic") {
  const mpz_class n("340282366920938463463374607431768211457");  // 2^128 + 1
  const Factorization a = factor(n);
  const Factorization b = factor(n);
  CHECK(a.factors == b.factors);
  mpz_class prod = 1, pk;
  for (const auto& [p, e] : a.factors) {
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e);
    prod *= pk;
    bool dummy = false;
    CHECK(is_prime(p, &dummy));
  }
  CHECK(prod == n);
}

TEST_CASE("certification switches to probabilistic above 3.3e24") {
  bool flag = true;
  CHECK(is_prime(mpz_class("2147483647"), &flag));
  CHECK(!flag);

  // below the deterministic bound
  flag = true;
  CHECK(is_prime(mpz_class("18446744073709551557"), &flag));
  CHECK(!flag);

  // above it: the verdict comes with the probabilistic marker
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 26);
  mpz_nextprime(big.get_mpz_t(), big.get_mpz_t());
  flag = false;
  CHECK(is_prime(big, &flag));
  CHECK(flag);
  flag = false;
  CHECK(!is_prime(big + 1, &flag));  // even
}

TEST_CASE("mpz factorization of wide composites") {
  // (2^61 - 1) * (2^31 - 1): both factors prime
  const mpz_class m1(static_cast<unsigned long>((u64(1) << 61) - 1));
  const mpz_class m2(2147483647);
  const Factorization fz = factor(m1 * m2);
  REQUIRE(fz.factors.size() == 2);
  CHECK(fz.factors[0].first == m2);
  CHECK(fz.factors[1].first == m1);
  CHECK(!fz.probabilistic);
  CHECK(factor(1).factors.empty());
  CHECK_THROWS_AS(factor(0), std::invalid_argument);
}
