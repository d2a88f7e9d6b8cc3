#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polylcm/common.hpp"

namespace polylcm {

enum class BoundFamily { vanilla, iwaniec, wu_xi, composite };

const char* family_name(BoundFamily family);

// One reciprocal-linear integrand theta -> num / (c0 - c1*theta) active on
// [lo, hi). c0 - c1*theta stays positive on every piece's interval.
struct BoundPiece {
  double lo;
  double hi;
  double num;
  double c0;
  double c1;

  double eval(double theta) const { return num / (c0 - c1 * theta); }

  // exact antiderivative across [a, b] inside the piece
  double integral(double a, double b) const {
    if (c1 == 0.0) return num / c0 * (b - a);
    return num / c1 * std::log((c0 - c1 * a) / (c0 - c1 * b));
  }
};

// A C(theta) family: ascending, contiguous pieces. closed_end marks support
// that includes the right endpoint of the last piece.
struct PiecewiseBound {
  BoundFamily name = BoundFamily::vanilla;
  std::vector<BoundPiece> pieces;
  bool closed_end = false;

  double support_lo() const { return pieces.front().lo; }
  double support_hi() const { return pieces.back().hi; }
  bool contains(double theta) const {
    if (theta < support_lo()) return false;
    if (theta < support_hi()) return true;
    return closed_end && theta == support_hi();
  }
};

PiecewiseBound vanilla_bound();  // 2/(1-theta) on [0, 1)
PiecewiseBound iwaniec_bound();  // 8/(6-7theta) on [1/2, 2/3]
PiecewiseBound wu_xi_bound();    // three pieces on [1/2, 16/17)

// evaluate the active piece; std::domain_error outside the support
double c_theta(const PiecewiseBound& family, double theta);

// Piecewise assignment of bound families used for a given degree: wu-xi for
// d = 2, otherwise iwaniec on [1/2, 2/3] continued by 2/(1-theta).
struct Schedule {
  unsigned degree = 0;
  PiecewiseBound bound;
};

Schedule default_schedule(unsigned degree);

enum class IntegrationMethod { closed_form, quadrature };

// integral of C(theta) over [a, b] under the schedule; closed_form sums the
// exact piece antiderivatives, quadrature bisects adaptively after splitting
// at piece boundaries. The two agree to 1e-9.
double integrate_c(const Schedule& schedule, double a, double b,
                   IntegrationMethod method = IntegrationMethod::closed_form);

// paper: the published rounded constants; exact: recomputed at full precision
enum class ConstantMode { paper, exact };

// delta-independent constant of the closed-form integral bound:
//   d >= 2 (iwaniec+vanilla path): (8/7) ln(15/8) - 2 ln 3
//   d = 1:                         (8/7) ln(5/2)
// nullopt for d = 2 under the wu-xi schedule (no single constant; integrate).
std::optional<double> integral_bound_constant(unsigned degree,
                                              ConstantMode mode,
                                              bool wu_xi_for_degree2 = true);

// Largest delta with d - 1/2 >= integral of C over [1/2, delta] under the
// default schedule. paper mode returns the published thresholds; exact mode
// bisects the full-precision closed form to 1e-8.
double solve_delta(unsigned degree, ConstantMode mode);

double epsilon_of_degree(unsigned degree);

// d - 1/2 - integral; positive iff the linear lower bound survives
double main_bound_coefficient(unsigned degree, double delta);

// adaptive bisection with a 15-point Gauss-Legendre leaf rule
double integrate_adaptive(const std::function<double(double)>& fn, double a,
                          double b, double abs_tol = 1e-12,
                          int max_depth = 60);

// Li(x) = integral of dt/log t over [2, x]
double log_integral(double x);

}  // namespace polylcm
