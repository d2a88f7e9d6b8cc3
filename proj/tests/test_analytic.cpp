#include <doctest.h>

#include <cmath>
#include <random>

#include "polylcm/analytic.hpp"

using namespace polylcm;

// oracle values computed independently at 30-digit precision
namespace frozen {
constexpr double kIwaniecHalfToTwoThirds = 0.71840989648271330;  // (8/7)ln(15/8)
constexpr double kVanillaTwoThirdsTo09 = 2.40794560865187199;    // 2 ln(10/3)
constexpr double kConstantA = -1.47881468085350608;  // (8/7)ln(15/8) - 2 ln 3
constexpr double kConstantB = 1.04718940785617722;   // (8/7)ln(5/2)
constexpr double kWuXiAt0847 = 1.498276924327681;
constexpr double kDeltaExact1 = 0.62655409770432427;
constexpr double kDeltaExact2 = 0.84723088731735677;
constexpr double kDeltaExact3 = 0.86322353669040583;
constexpr double kLi10 = 5.1204357246698052;
}  // namespace frozen

TEST_CASE("pointwise bound values") {
  CHECK(c_theta(vanilla_bound(), 0.5) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(c_theta(iwaniec_bound(), 2.0 / 3.0) ==
        doctest::Approx(6.0).epsilon(1e-12));
  CHECK(c_theta(wu_xi_bound(), 32.0 / 41.0) ==
        doctest::Approx(1148.0 / 203.0).epsilon(1e-12));
  CHECK(c_theta(wu_xi_bound(), 0.5) ==
        doctest::Approx(124.0 / 46.5).epsilon(1e-12));
}

TEST_CASE("support boundaries") {
  CHECK_THROWS_AS(c_theta(vanilla_bound(), 1.0), std::domain_error);
  CHECK_THROWS_AS(c_theta(iwaniec_bound(), 0.7), std::domain_error);
  CHECK_THROWS_AS(c_theta(iwaniec_bound(), 0.49), std::domain_error);
  CHECK_THROWS_AS(c_theta(wu_xi_bound(), 16.0 / 17.0), std::domain_error);
  CHECK_NOTHROW(c_theta(iwaniec_bound(), 2.0 / 3.0));  // closed right end
  CHECK_NOTHROW(c_theta(wu_xi_bound(), 0.94));
}

TEST_CASE("closed-form integrals") {
  const Schedule sched = default_schedule(3);
  CHECK(integrate_c(sched, 0.5, 2.0 / 3.0) ==
        doctest::Approx(frozen::kIwaniecHalfToTwoThirds).epsilon(1e-12));
  CHECK(integrate_c(sched, 2.0 / 3.0, 0.9) ==
        doctest::Approx(frozen::kVanillaTwoThirdsTo09).epsilon(1e-12));
  CHECK(integrate_c(sched, 0.7, 0.7) == 0.0);
  CHECK_THROWS_AS(integrate_c(sched, 0.4, 0.8), std::domain_error);
  CHECK_THROWS_AS(integrate_c(sched, 0.8, 0.7), std::domain_error);
}

TEST_CASE("closed form agrees with quadrature on random subintervals") {
  std::mt19937_64 rng(2024);
  for (unsigned degree : {1u, 2u, 5u}) {
    const Schedule sched = default_schedule(degree);
    const double lo = sched.bound.support_lo();
    const double hi = sched.bound.support_hi() - 1e-6;
    std::uniform_real_distribution<double> dist(lo, hi);
    for (int i = 0; i < 350; ++i) {
      double a = dist(rng), b = dist(rng);
      if (a > b) std::swap(a, b);
      const double closed = integrate_c(sched, a, b, IntegrationMethod::closed_form);
      const double quad = integrate_c(sched, a, b, IntegrationMethod::quadrature);
      CHECK(std::abs(closed - quad) <= 1e-9);
    }
  }
}

TEST_CASE("integral is monotone and the integrand positive") {
  const Schedule sched = default_schedule(2);
  double prev = 0.0;
  for (double b = 0.5; b <= 0.94; b += 0.01) {
    CHECK(c_theta(sched.bound, b) > 0.0);
    const double cur = integrate_c(sched, 0.5, b);
    CHECK(cur >= prev);
    prev = cur;
  }
}

TEST_CASE("wu-xi certificate below 3/2 at delta = 0.847") {
  const Schedule sched = default_schedule(2);
  const double closed = integrate_c(sched, 0.5, 0.847);
  CHECK(closed > 1.49);
  CHECK(closed < 1.50);
  CHECK(closed == doctest::Approx(frozen::kWuXiAt0847).epsilon(1e-12));
  const double quad = integrate_c(sched, 0.5, 0.847, IntegrationMethod::quadrature);
  CHECK(std::abs(closed - quad) <= 1e-9);
}

TEST_CASE("named closed-form constants") {
  auto a_exact = integral_bound_constant(3, ConstantMode::exact);
  REQUIRE(a_exact.has_value());
  CHECK(*a_exact == doctest::Approx(frozen::kConstantA).epsilon(1e-14));
  CHECK(std::abs(*a_exact - (-1.4788)) < 5e-5);  // published rounding

  auto b_exact = integral_bound_constant(1, ConstantMode::exact);
  REQUIRE(b_exact.has_value());
  CHECK(*b_exact == doctest::Approx(frozen::kConstantB).epsilon(1e-14));
  CHECK(std::abs(*b_exact - 1.0472) < 5e-5);

  CHECK(*integral_bound_constant(3, ConstantMode::paper) == -1.4788);
  CHECK(*integral_bound_constant(1, ConstantMode::paper) == 1.0472);

  CHECK(!integral_bound_constant(2, ConstantMode::exact).has_value());
  auto d2_fallback = integral_bound_constant(2, ConstantMode::exact, false);
  REQUIRE(d2_fallback.has_value());
  CHECK(*d2_fallback == doctest::Approx(frozen::kConstantA).epsilon(1e-14));
}

TEST_CASE("delta thresholds") {
  CHECK(solve_delta(1, ConstantMode::paper) == 0.62656);
  CHECK(solve_delta(2, ConstantMode::paper) == 0.847);
  CHECK(solve_delta(3, ConstantMode::paper) ==
        doctest::Approx(0.86322253268911047).epsilon(1e-12));

  CHECK(solve_delta(1, ConstantMode::exact) ==
        doctest::Approx(frozen::kDeltaExact1).epsilon(1e-8));
  CHECK(solve_delta(2, ConstantMode::exact) ==
        doctest::Approx(frozen::kDeltaExact2).epsilon(1e-8));
  CHECK(solve_delta(3, ConstantMode::exact) ==
        doctest::Approx(frozen::kDeltaExact3).epsilon(1e-8));

  // solving the constraint leaves the main coefficient at zero
  for (unsigned d : {1u, 2u, 4u}) {
    const double delta = solve_delta(d, ConstantMode::exact);
    CHECK(std::abs(main_bound_coefficient(d, delta)) < 1e-6);
  }
}

TEST_CASE("epsilon of degree and the published table") {
  CHECK(epsilon_of_degree(1) == 0.3735);
  CHECK(epsilon_of_degree(2) == 0.153);
  CHECK(epsilon_of_degree(5) ==
        doctest::Approx(std::exp(-2.9894)).epsilon(1e-12));

  const double expected[] = {0.6265, 0.847,  0.8632, 0.9170,
                             0.9496, 0.9694, 0.9814, 0.9887};
  for (unsigned d = 1; d <= 8; ++d) {
    const double v = 1.0 - epsilon_of_degree(d);
    const double trunc = std::floor(v * 10000.0 + 1e-9) / 10000.0;
    CHECK(trunc == doctest::Approx(expected[d - 1]).epsilon(1e-12));
  }
}

TEST_CASE("main bound coefficient") {
  CHECK(main_bound_coefficient(3, 0.5) == doctest::Approx(2.5).epsilon(1e-12));
  const double d2 = main_bound_coefficient(2, 0.847);
  CHECK(d2 > 0.0);
  CHECK(d2 == doctest::Approx(1.5 - frozen::kWuXiAt0847).epsilon(1e-9));
}

TEST_CASE("quadrature engine") {
  const double cubic =
      integrate_adaptive([](double t) { return t * t * t; }, 0.0, 2.0);
  CHECK(cubic == doctest::Approx(4.0).epsilon(1e-13));
  const double expint =
      integrate_adaptive([](double t) { return std::exp(-t); }, 0.0, 20.0);
  CHECK(expint == doctest::Approx(1.0 - std::exp(-20.0)).epsilon(1e-12));
  CHECK(log_integral(10.0) == doctest::Approx(frozen::kLi10).epsilon(1e-10));
  CHECK(log_integral(2.0) == 0.0);
  CHECK_THROWS_AS(log_integral(1.5), std::domain_error);
}
