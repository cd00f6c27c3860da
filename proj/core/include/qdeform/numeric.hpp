#pragma once

#include <algorithm>
#include <cmath>
#include <span>

namespace qdeform {

/// Neumaier's variant of Kahan compensated summation.
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(double v) noexcept {
    add(v);
    return *this;
  }

  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> values) noexcept {
  CompensatedSum s;
  for (double v : values) s.add(v);
  return s.value();
}

/// |a - b| / |b|, with 0 when both are exactly equal (including 0 == 0).
inline double relative_error(double a, double b) noexcept {
  if (a == b) return 0.0;
  return std::abs(a - b) / std::abs(b);
}

/// |a - b| / max(1, |b|): relative for large magnitudes, absolute near zero.
/// Used for logarithm-like quantities that legitimately pass through zero.
inline double scaled_error(double a, double b) noexcept {
  if (a == b) return 0.0;
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

}  // namespace qdeform
