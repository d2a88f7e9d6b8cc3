#include <doctest.h>

#include <cmath>
#include <random>

#include "polylcm/sieve.hpp"

using namespace polylcm;

namespace {

Polynomial poly(std::initializer_list<long> coeffs) {
  std::vector<mpz_class> c;
  for (long v : coeffs) c.emplace_back(v);
  return Polynomial(std::move(c));
}

bool trial_is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("prime generation") {
  const PrimeRange r10 = PrimeRange::up_to(10);
  CHECK(r10.count() == 4);
  CHECK(r10.is_prime(2));
  CHECK(r10.is_prime(7));
  CHECK(!r10.is_prime(9));

  CHECK(PrimeRange::up_to(100).count() == 25);
  CHECK(PrimeRange::up_to(2).count() == 0);  // p < x is strict

  // spot-check against trial division across a segment boundary
  const PrimeRange big = PrimeRange::up_to(1 << 21, 1 << 16);
  for (u64 n = (1 << 16) - 50; n < (1 << 16) + 50; ++n)
    CHECK(big.is_prime(n) == trial_is_prime(n));
  u64 count = 0;
  big.for_each_prime([&](u64) { ++count; });
  CHECK(count == big.count());

  CHECK_THROWS_AS(PrimeRange::up_to(u64(1) << 40, 1 << 20, 1 << 20),
                  resource_limit_error);
}

TEST_CASE("counting primes in arithmetic progressions") {
  const PrimeRange r100 = PrimeRange::up_to(100);
  CHECK(r100.count_in_ap(4, 1) == 11);
  CHECK(r100.count_in_ap(4, 3) == 13);
  CHECK(r100.count_in_ap(4, 2) == 1);  // p = 2 itself
  CHECK(PrimeRange::up_to(10).count_in_ap(1, 0) == 4);
  CHECK_THROWS_AS(r100.count_in_ap(4, 4), std::invalid_argument);
}

TEST_CASE("AP counts partition pi(x)") {
  const PrimeRange range = PrimeRange::up_to(100000);
  for (u64 m = 1; m <= 50; ++m) {
    u64 total = 0;
    for (u64 a = 0; a < m; ++a) total += range.count_in_ap(m, a);
    CHECK(total == range.count());
  }
}

TEST_CASE("varsigma counts arguments with m | f(p)") {
  const Polynomial f = poly({1, 0, 1});
  const PrimeRange r20 = PrimeRange::up_to(20);
  CHECK(varsigma(f, r20, 5) == 5);
  CHECK(varsigma(f, r20, 3) == 0);
  CHECK(varsigma(f, PrimeRange::up_to(2), 5) == 0);
  CHECK(varsigma(f, r20, 1) == r20.count());
}

TEST_CASE("varsigma equals the direct scan") {
  const Polynomial f = poly({1, 0, 1});
  const Polynomial g = poly({-2, 0, 0, 1});
  const PrimeRange range = PrimeRange::up_to(100000);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const u64 m = rng() % 9999 + 1;
    for (const Polynomial* h : {&f, &g}) {
      u64 direct = 0;
      range.for_each_prime([&](u64 p) {
        if (h->eval_mod(p, m) == 0) ++direct;
      });
      CHECK(varsigma(*h, range, m) == direct);
    }
  }
}

TEST_CASE("totient") {
  CHECK(totient(1) == 1);
  CHECK(totient(12) == 4);
  CHECK(totient(13) == 12);
  CHECK(totient(2 * 3 * 5 * 7) == 48);
}

TEST_CASE("von mangoldt") {
  CHECK(von_mangoldt(8) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(von_mangoldt(6) == 0.0);
  CHECK(von_mangoldt(13) == doctest::Approx(std::log(13.0)).epsilon(1e-12));
  CHECK(von_mangoldt(1) == 0.0);
}
