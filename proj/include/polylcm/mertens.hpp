#pragma once

#include <vector>

#include "polylcm/common.hpp"
#include "polylcm/polynomial.hpp"
#include "polylcm/sieve.hpp"

namespace polylcm {

// S(x) = sum over primes p < x of rho(p) log p / (p - 1), next to log x.
// The drift S(x) - log x stabilizes toward the (unknown) constant of the
// Mertens-type asymptotic; checkpoints are strictly increasing in x.
struct DriftPoint {
  u64 x = 0;
  double sum = 0.0;    // S(x)
  double drift = 0.0;  // S(x) - log x
};

double mertens_sum(const Polynomial& f, u64 x, unsigned threads = 1);

std::vector<DriftPoint> drift_series(const Polynomial& f,
                                     const std::vector<u64>& xs,
                                     unsigned threads = 1);

struct LiComparison {
  u64 sum_rho = 0;
  double li = 0.0;
  double ratio = 0.0;
};

// exact sum of rho(p) over p < x against Li(x) by quadrature
LiComparison root_count_vs_li(const Polynomial& f, u64 x, unsigned threads = 1);

// sum over prime powers m < bound of varsigma(m) * Lambda(m), exact
double lambda_weighted_varsigma_sum(const Polynomial& f,
                                    const PrimeRange& range, u64 bound);

}  // namespace polylcm
