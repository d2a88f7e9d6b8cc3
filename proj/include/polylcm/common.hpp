#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace polylcm {

using u16 = std::uint16_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// A computation would exceed a configured memory or search budget.
struct resource_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The factoring engine exhausted its retry budget without a complete split.
// Callers must treat this as fatal; a partial factorization is never returned.
struct factorization_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Neumaier-compensated accumulator. Merging two accumulators feeds the
// partial sum and its compensation term through add(), so a fixed merge
// order yields bit-identical totals regardless of who computed the parts.
class CompensatedSum {
 public:
  void add(double v) {
    double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }

  void add(const CompensatedSum& other) {
    add(other.sum_);
    add(other.comp_);
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

std::string u128_to_string(u128 v);

inline u64 isqrt_u64(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

}  // namespace polylcm
