#include "qdeform/qalgebra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qdeform/numeric.hpp"
#include "qdeform/table.hpp"

namespace qdeform {
namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0)) throw NonPositiveArgument(std::string(what) + " requires positive arguments", v);
}

// Both brackets are 1 + (1-q)(ln_q x +/- ln_q y); the (1-q) ln_q terms are
// x^(1-q) - 1 computed through expm1.
double combine(EntropicIndex q, double x, double y, double sign, const char* name) {
  const double d = q.deformation();
  const double tx = std::expm1(d * std::log(x));
  const double ty = std::expm1(d * std::log(y));
  const double s = tx + sign * ty;
  const double bracket = 1.0 + s;
  if (!(bracket > 0.0)) {
    throw DomainViolation(std::string(name) + " bracket must be positive, got " + format_real(bracket),
                          bracket);
  }
  return std::exp(std::log1p(s) / d);
}

}  // namespace

double q_product(EntropicIndex q, double x, double y) {
  require_positive(x, "q_product");
  require_positive(y, "q_product");
  if (x == 1.0) return y;
  if (y == 1.0) return x;
  if (q.classical()) return x * y;
  return combine(q, x, y, 1.0, "q_product");
}

double q_ratio(EntropicIndex q, double x, double y) {
  require_positive(x, "q_ratio");
  require_positive(y, "q_ratio");
  if (x == y) return 1.0;
  if (y == 1.0) return x;
  if (q.classical()) return x / y;
  return combine(q, x, y, -1.0, "q_ratio");
}

double q_exp_law_check(EntropicIndex q, double x1, double x2) {
  const double whole = q_exp(q, x1 + x2);
  const double factored = q_product(q, q_exp(q, x1), q_exp(q, x2));
  return relative_error(factored, whole);
}

ObservationSequence scale_drift_expand(EntropicIndex q, std::span<const double> shifts) {
  if (shifts.empty()) throw std::invalid_argument("scale_drift_expand needs at least one shift");
  ObservationSequence seq;
  seq.shifts.assign(shifts.begin(), shifts.end());
  seq.observed.reserve(shifts.size());
  CompensatedSum partial;
  for (std::size_t t = 0; t < shifts.size(); ++t) {
    const double bracket = q_exp_bracket(q, partial.value());
    if (!(bracket > 0.0)) {
      throw DomainViolation("partial sum before step " + std::to_string(t) +
                                " leaves the q-exponential domain",
                            bracket, t);
    }
    seq.observed.push_back(t == 0 ? shifts[0] : shifts[t] / bracket);
    partial.add(shifts[t]);
  }
  return seq;
}

double drifted_product(EntropicIndex q, const ObservationSequence& seq) {
  double product = 1.0;
  for (std::size_t t = 0; t < seq.observed.size(); ++t) {
    try {
      product *= q_exp(q, seq.observed[t]);
    } catch (const DomainViolation& e) {
      throw DomainViolation(e.what(), e.constraint(), t);
    }
  }
  return product;
}

double q_product_fold(EntropicIndex q, std::span<const double> factors) {
  if (factors.empty()) throw std::invalid_argument("q_product_fold needs at least one factor");
  require_positive(factors[0], "q_product_fold");
  double acc = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) {
    try {
      acc = q_product(q, acc, factors[i]);
    } catch (const DomainViolation& e) {
      throw DomainViolation("q_product_fold failed at factor " + std::to_string(i) + ": " + e.what(),
                            e.constraint(), i);
    }
  }
  return acc;
}

}  // namespace qdeform
