#include "polylcm/analytic.hpp"

#include <cmath>

namespace polylcm {

namespace {

constexpr int kGaussOrder = 15;

struct GaussRule {
  double node[kGaussOrder];
  double weight[kGaussOrder];
};

// Nodes and weights computed on first use by Newton iteration on P_15;
// avoids transcribing tabulated constants.
const GaussRule& gl15() {
  static const GaussRule rule = [] {
    GaussRule r;
    const int n = kGaussOrder;
    for (int i = 0; i < n; ++i) {
      double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double p1 = 0.0, p0 = 0.0;
      for (int iter = 0; iter < 200; ++iter) {
        p0 = 1.0;
        p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = pk;
        }
        const double dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      p0 = 1.0;
      p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      const double dp = n * (x * p1 - p0) / (x * x - 1.0);
      r.node[i] = x;
      r.weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
  }();
  return rule;
}

double gl15_integrate(const std::function<double(double)>& fn, double a,
                      double b) {
  const GaussRule& rule = gl15();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < kGaussOrder; ++i)
    acc += rule.weight[i] * fn(mid + half * rule.node[i]);
  return acc * half;
}

double adaptive_rec(const std::function<double(double)>& fn, double a,
                    double b, double whole, double tol, int depth,
                    int max_depth) {
  const double mid = 0.5 * (a + b);
  const double left = gl15_integrate(fn, a, mid);
  const double right = gl15_integrate(fn, mid, b);
  const double both = left + right;
  const double err = std::abs(both - whole);
  if (depth >= max_depth || err <= tol || err <= 5e-15 * std::abs(both))
    return both;
  return adaptive_rec(fn, a, mid, left, 0.5 * tol, depth + 1, max_depth) +
         adaptive_rec(fn, mid, b, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& fn, double a,
                          double b, double abs_tol, int max_depth) {
  if (a == b) return 0.0;
  return adaptive_rec(fn, a, b, gl15_integrate(fn, a, b), abs_tol, 0,
                      max_depth);
}

double log_integral(double x) {
  if (x < 2.0) throw std::domain_error("log_integral: x must be >= 2");
  return integrate_adaptive([](double t) { return 1.0 / std::log(t); }, 2.0,
                            x);
}

const char* family_name(BoundFamily family) {
  switch (family) {
    case BoundFamily::vanilla: return "vanilla";
    case BoundFamily::iwaniec: return "iwaniec";
    case BoundFamily::wu_xi: return "wu-xi";
    case BoundFamily::composite: return "composite";
  }
  return "?";
}

PiecewiseBound vanilla_bound() {
  return PiecewiseBound{BoundFamily::vanilla, {{0.0, 1.0, 2.0, 1.0, 1.0}}, false};
}

PiecewiseBound iwaniec_bound() {
  return PiecewiseBound{
      BoundFamily::iwaniec, {{0.5, 2.0 / 3.0, 8.0, 6.0, 7.0}}, true};
}

PiecewiseBound wu_xi_bound() {
  return PiecewiseBound{BoundFamily::wu_xi,
                        {{0.5, 64.0 / 97.0, 124.0, 91.0, 89.0},
                         {64.0 / 97.0, 32.0 / 41.0, 120.0, 86.0, 83.0},
                         {32.0 / 41.0, 16.0 / 17.0, 28.0, 19.0, 18.0}},
                        false};
}

double c_theta(const PiecewiseBound& family, double theta) {
  if (!family.contains(theta))
    throw std::domain_error("c_theta: theta outside the family's support");
  for (const BoundPiece& piece : family.pieces)
    if (theta < piece.hi) return piece.eval(theta);
  return family.pieces.back().eval(theta);  // closed right end
}

Schedule default_schedule(unsigned degree) {
  if (degree == 0)
    throw std::invalid_argument("schedule: degree must be >= 1");
  if (degree == 2) return Schedule{2, wu_xi_bound()};
  PiecewiseBound combined;
  combined.name = BoundFamily::composite;
  combined.pieces = {{0.5, 2.0 / 3.0, 8.0, 6.0, 7.0},
                     {2.0 / 3.0, 1.0, 2.0, 1.0, 1.0}};
  combined.closed_end = false;
  return Schedule{degree, combined};
}

double integrate_c(const Schedule& schedule, double a, double b,
                   IntegrationMethod method) {
  const PiecewiseBound& bound = schedule.bound;
  if (a > b) throw std::domain_error("integrate_c: need a <= b");
  if (a < bound.support_lo() || b > bound.support_hi() ||
      (b == bound.support_hi() && !bound.closed_end && a < b))
    throw std::domain_error("integrate_c: interval outside schedule support");
  if (a == b) return 0.0;

  double total = 0.0;
  for (const BoundPiece& piece : bound.pieces) {
    const double lo = std::max(a, piece.lo);
    const double hi = std::min(b, piece.hi);
    if (lo >= hi) continue;
    if (method == IntegrationMethod::closed_form) {
      total += piece.integral(lo, hi);
    } else {
      total += integrate_adaptive(
          [&piece](double theta) { return piece.eval(theta); }, lo, hi);
    }
  }
  return total;
}

std::optional<double> integral_bound_constant(unsigned degree,
                                              ConstantMode mode,
                                              bool wu_xi_for_degree2) {
  if (degree == 0)
    throw std::invalid_argument("integral_bound_constant: degree >= 1");
  if (degree == 1)
    return mode == ConstantMode::paper ? 1.0472
                                       : 8.0 / 7.0 * std::log(5.0 / 2.0);
  if (degree == 2 && wu_xi_for_degree2) return std::nullopt;
  return mode == ConstantMode::paper
             ? -1.4788
             : 8.0 / 7.0 * std::log(15.0 / 8.0) - 2.0 * std::log(3.0);
}

double epsilon_of_degree(unsigned degree) {
  if (degree == 0)
    throw std::invalid_argument("epsilon_of_degree: degree >= 1");
  if (degree == 1) return 0.3735;
  if (degree == 2) return 0.153;
  return std::exp((-static_cast<double>(degree) - 0.9788) / 2.0);
}

double solve_delta(unsigned degree, ConstantMode mode) {
  if (degree == 0) throw std::invalid_argument("solve_delta: degree >= 1");
  if (mode == ConstantMode::paper) {
    if (degree == 1) return 0.62656;
    if (degree == 2) return 0.847;
    return 1.0 - std::exp((-static_cast<double>(degree) - 0.9788) / 2.0);
  }

  const Schedule schedule = default_schedule(degree);
  const double target = static_cast<double>(degree) - 0.5;
  double lo = 0.5;
  double hi = schedule.bound.support_hi() - 1e-9;
  if (integrate_c(schedule, 0.5, hi) <= target) return hi;
  for (int iter = 0; iter < 200 && hi - lo > 1e-10; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (integrate_c(schedule, 0.5, mid) <= target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double main_bound_coefficient(unsigned degree, double delta) {
  const Schedule schedule = default_schedule(degree);
  return static_cast<double>(degree) - 0.5 -
         integrate_c(schedule, 0.5, delta);
}

}  // namespace polylcm
