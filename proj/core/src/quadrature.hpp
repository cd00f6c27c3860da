#pragma once

// Adaptive Gauss-Kronrod (G7/K15) integration with a global error queue.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

namespace qdeform::detail {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t intervals = 0;
};

struct QuadratureOptions {
  double abs_tol = 1e-15;
  double rel_tol = 1e-14;
  std::size_t max_intervals = 4000;
};

namespace gk15 {

// QUADPACK qk15 abscissae and weights; xgk[1], xgk[3], xgk[5], xgk[7] are the
// Gauss-7 nodes.
inline constexpr std::array<double, 8> kNodes{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrod{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGauss{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

}  // namespace gk15

struct Segment {
  double a;
  double b;
  double value;
  double error;

  friend bool operator<(const Segment& l, const Segment& r) { return l.error < r.error; }
};

template <class F>
Segment gk15_segment(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * gk15::kKronrod[7];
  double gauss = fc * gk15::kGauss[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * gk15::kNodes[j];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += gk15::kKronrod[j] * sum;
    if (j % 2 == 1) gauss += gk15::kGauss[j / 2] * sum;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

/// Integrates f over the finite interval [a, b].
template <class F>
QuadratureResult integrate(F&& f, double a, double b, const QuadratureOptions& opts = {}) {
  if (a == b) return {};
  std::priority_queue<Segment> queue;
  Segment whole = gk15_segment(f, a, b);
  double total = whole.value;
  double error = whole.error;
  queue.push(whole);
  std::size_t intervals = 1;
  while (error > std::max(opts.abs_tol, opts.rel_tol * std::abs(total)) &&
         intervals < opts.max_intervals) {
    const Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Cannot split further in double precision.
      queue.push({worst.a, worst.b, worst.value, 0.0});
      break;
    }
    const Segment left = gk15_segment(f, worst.a, mid);
    const Segment right = gk15_segment(f, mid, worst.b);
    queue.push(left);
    queue.push(right);
    ++intervals;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
  }
  // Final sum from the segments themselves; the running total drifts.
  std::vector<double> values;
  values.reserve(queue.size());
  error = 0.0;
  while (!queue.empty()) {
    values.push_back(queue.top().value);
    error += queue.top().error;
    queue.pop();
  }
  std::sort(values.begin(), values.end(),
            [](double l, double r) { return std::abs(l) < std::abs(r); });
  total = 0.0;
  for (double v : values) total += v;
  return {total, error, intervals};
}

}  // namespace qdeform::detail
