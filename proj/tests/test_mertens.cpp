#include <doctest.h>

#include <cmath>
#include <random>

#include "polylcm/congruence.hpp"
#include "polylcm/factorizer.hpp"
#include "polylcm/mertens.hpp"

using namespace polylcm;

namespace {

Polynomial poly(std::initializer_list<long> coeffs) {
  std::vector<mpz_class> c;
  for (long v : coeffs) c.emplace_back(v);
  return Polynomial(std::move(c));
}

const Polynomial kQuad = poly({1, 0, 1});

}  // namespace

TEST_CASE("mertens sum seed values") {
  // p = 2 contributes log 2, p = 5 contributes 2 log 5 / 4
  const double expect10 = std::log(2.0) + std::log(5.0) / 2.0;
  CHECK(mertens_sum(kQuad, 10) == doctest::Approx(expect10).epsilon(1e-12));
  CHECK(mertens_sum(kQuad, 3) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(mertens_sum(kQuad, 2) == 0.0);
}

TEST_CASE("drift series") {
  const auto series = drift_series(kQuad, {2, 10});
  REQUIRE(series.size() == 2);
  CHECK(series[0].drift ==
        doctest::Approx(-std::log(2.0)).epsilon(1e-12));
  CHECK(series[1].drift ==
        doctest::Approx(1.4978661367769954 - std::log(10.0)).epsilon(1e-12));

  // frozen decade values, cross-computed from the character closed form
  const auto decades = drift_series(kQuad, {1000, 10000});
  CHECK(decades[0].drift ==
        doctest::Approx(-1.228368096637027).epsilon(1e-9));
  CHECK(decades[1].drift ==
        doctest::Approx(-1.2537240897803432).epsilon(1e-9));

  CHECK_THROWS_AS(drift_series(kQuad, {10, 10}), std::invalid_argument);
  CHECK_THROWS_AS(drift_series(kQuad, {1, 10}), std::invalid_argument);
}

TEST_CASE("mertens additivity over random splits") {
  std::mt19937_64 rng(5);
  const PrimeRange range = PrimeRange::up_to(20000);
  for (int i = 0; i < 6; ++i) {
    const u64 x1 = rng() % 9000 + 10;
    const u64 x2 = x1 + rng() % 9000 + 10;
    const auto series = drift_series(kQuad, {x1, x2});
    double middle = 0.0;
    for (u64 p = x1; p < x2; ++p) {
      if (!range.is_prime(p)) continue;
      middle += static_cast<double>(root_count_mod_prime(kQuad, p)) *
                std::log(static_cast<double>(p)) / static_cast<double>(p - 1);
    }
    CHECK(series[1].sum - series[0].sum ==
          doctest::Approx(middle).epsilon(1e-9));
  }
}

TEST_CASE("root counts against the logarithmic integral") {
  const auto cmp10 = root_count_vs_li(kQuad, 10);
  CHECK(cmp10.sum_rho == 3);
  CHECK(cmp10.li == doctest::Approx(5.1204357246698052).epsilon(1e-9));
  CHECK(cmp10.ratio == doctest::Approx(3.0 / 5.1204357246698052).epsilon(1e-9));

  // exactness of the count at moderate scale, against a scan
  const u64 x = 10000;
  const PrimeRange range = PrimeRange::up_to(x);
  u64 direct = 0;
  range.for_each_prime([&](u64 p) {
    for (u64 r = 0; r < p; ++r)
      if (kQuad.eval_mod(r, p) == 0) ++direct;
  });
  CHECK(root_count_vs_li(kQuad, x).sum_rho == direct);

  CHECK_THROWS_AS(root_count_vs_li(kQuad, 2), std::invalid_argument);
}

TEST_CASE("lambda-weighted varsigma sum") {
  const PrimeRange r20 = PrimeRange::up_to(20);
  const double expect = 7.0 * std::log(2.0) + 5.0 * std::log(5.0);
  CHECK(lambda_weighted_varsigma_sum(kQuad, r20, 6) ==
        doctest::Approx(expect).epsilon(1e-12));
  CHECK(lambda_weighted_varsigma_sum(kQuad, r20, 2) == 0.0);
  CHECK_THROWS_AS(lambda_weighted_varsigma_sum(kQuad, r20, 21),
                  std::invalid_argument);
}

TEST_CASE("li ratio converges at regression scale") {
  // frozen: sum rho = 78351 and Li(1e6) = 78626.5039956821
  const auto cmp = root_count_vs_li(kQuad, 1'000'000);
  CHECK(cmp.sum_rho == 78351);
  CHECK(cmp.li == doctest::Approx(78626.503995682064).epsilon(1e-9));
  CHECK(cmp.ratio > 0.97);
  CHECK(cmp.ratio < 1.03);
}

TEST_CASE("partitioned evaluation is bit-identical") {
  const auto a = drift_series(kQuad, {30000}, 1);
  const auto b = drift_series(kQuad, {30000}, 3);
  CHECK(a[0].sum == b[0].sum);
  CHECK(a[0].drift == b[0].drift);
}
