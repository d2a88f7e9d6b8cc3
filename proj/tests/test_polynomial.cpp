#include <doctest.h>

#include <random>

#include "polylcm/parse.hpp"
#include "polylcm/polynomial.hpp"

using namespace polylcm;

namespace {

Polynomial poly(std::initializer_list<long> coeffs) {
  std::vector<mpz_class> c;
  for (long v : coeffs) c.emplace_back(v);
  return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("evaluation at integer points") {
  const Polynomial f = poly({1, 0, 1});  // x^2 + 1
  CHECK(f.eval(3) == 10);
  CHECK(f.eval(0) == 1);
  CHECK(f.eval(-3) == 10);

  const Polynomial g = poly({-2, 0, 0, 1});  // x^3 - 2
  CHECK(g.eval(7) == 341);
  CHECK(g.eval(1) == -1);
}

TEST_CASE("evaluation respects reduction mod m") {
  const Polynomial f = poly({7, -3, 0, 2});
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    const u64 m = rng() % 10000 + 1;
    const u64 a = rng() % 100000;
    const mpz_class exact = f.eval(mpz_class(static_cast<unsigned long>(a)));
    const u64 expect = mpz_fdiv_ui(exact.get_mpz_t(), m);
    CHECK(f.eval_mod(a, m) == expect);
    CHECK(f.eval_mod(a % m, m) == expect);
  }
}

TEST_CASE("discriminants") {
  CHECK(poly({1, 0, 1}).discriminant() == -4);        // x^2 + 1
  CHECK(poly({1, 1, 1}).discriminant() == -3);        // x^2 + x + 1
  CHECK(poly({-2, 0, 0, 1}).discriminant() == -108);  // x^3 - 2
  CHECK(poly({3, 1, 4}).discriminant() == -47);       // 4x^2 + x + 3
  CHECK(poly({4, 2}).discriminant() == 1);            // linear convention
  CHECK(poly({-1, -1, 1}).discriminant() == 5);       // x^2 - x - 1
  CHECK(poly({1, 2, 1}).discriminant() == 0);         // (x+1)^2
}

TEST_CASE("resultant basics") {
  const std::vector<mpz_class> f{1, 0, 1};   // x^2 + 1
  const std::vector<mpz_class> g{-1, 0, 1};  // x^2 - 1
  CHECK(resultant(f, f) == 0);
  CHECK(resultant(f, g) == 4);  // f(1) * f(-1)
}

TEST_CASE("content and degree bookkeeping") {
  const Polynomial f = poly({6, 0, 6});
  CHECK(f.degree() == 2);
  CHECK(f.content() == 6);
  CHECK(f.leading() == 6);
  CHECK(poly({1, 2, 3, 0, 0}).degree() == 2);  // trailing zeros trimmed
  CHECK_THROWS_AS(poly({5}), std::invalid_argument);
  CHECK_THROWS_AS(poly({}), std::invalid_argument);
}

TEST_CASE("irreducibility verdicts") {
  CHECK(check_irreducible(poly({1, 0, 1})) == Irreducibility::accepted);
  CHECK(check_irreducible(poly({-1, 0, 1})) == Irreducibility::rejected);
  CHECK(check_irreducible(poly({1, 2, 1})) == Irreducibility::rejected);
  CHECK(check_irreducible(poly({-2, 0, 0, 1})) == Irreducibility::accepted);
  CHECK(check_irreducible(poly({-1, -1, 1})) == Irreducibility::accepted);
  CHECK(check_irreducible(poly({4, 2})) == Irreducibility::accepted);
  CHECK(check_irreducible(poly({6, 0, 6})) == Irreducibility::accepted);
  // rational roots that are not integers
  CHECK(check_irreducible(poly({1, -3, 2})) == Irreducibility::rejected);
  CHECK(check_irreducible(poly({-2, 1, 6})) == Irreducibility::rejected);
  // x^4 + 1 is reducible mod every prime: no certificate either way
  CHECK(check_irreducible(poly({1, 0, 0, 0, 1})) ==
        Irreducibility::inconclusive);
}

TEST_CASE("accepted polynomials have nonzero discriminant") {
  for (auto coeffs : {std::initializer_list<long>{1, 0, 1},
                      {-2, 0, 0, 1},
                      {-1, -1, 1},
                      {5, 1, 0, 2},
                      {3, 1, 4}}) {
    const Polynomial f = poly(coeffs);
    if (check_irreducible(f) == Irreducibility::accepted)
      CHECK(f.discriminant() != 0);
  }
}

TEST_CASE("canonical text round-trips through the parser") {
  for (auto coeffs : {std::initializer_list<long>{1, 0, 1},
                      {-2, 0, 0, 1},
                      {7, -3, 0, 2},
                      {0, 1, 0, 0, 5}}) {
    const Polynomial f = poly(coeffs);
    CHECK(parse_polynomial(f.canonical_text()) == f);
  }
}

TEST_CASE("derivative coefficients") {
  const auto d = poly({1, 2, 3}).derivative();  // 3x^2 + 2x + 1 -> 6x + 2
  REQUIRE(d.size() == 2);
  CHECK(d[0] == 2);
  CHECK(d[1] == 6);
}
