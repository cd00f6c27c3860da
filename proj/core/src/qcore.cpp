#include "qdeform/qcore.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qdeform/table.hpp"

namespace qdeform {

EntropicIndex::EntropicIndex(double q) : q_(q) {
  if (!std::isfinite(q)) {
    throw std::invalid_argument("entropic index must be finite");
  }
}

double q_log(EntropicIndex q, double y) {
  if (!(y > 0.0)) {
    throw NonPositiveArgument("q_log requires y > 0, got " + format_real(y), y);
  }
  if (q.classical()) return std::log(y);
  const double d = q.deformation();
  return std::expm1(d * std::log(y)) / d;
}

double q_exp(EntropicIndex q, double x, DomainPolicy policy) {
  if (q.classical()) return std::exp(x);
  const double d = q.deformation();
  const double bracket = 1.0 + d * x;
  if (!(bracket > 0.0)) {
    if (policy == DomainPolicy::cutoff && d > 0.0) return 0.0;
    throw DomainViolation("q_exp requires 1 + (1-q)x > 0, got " + format_real(bracket),
                          bracket);
  }
  // Integer exponents with an exact bracket go through pow, so exp_0.5(6) is exactly 16.
  const double power = 1.0 / d;
  if (power == std::round(power) && power * d == 1.0 && bracket - 1.0 == d * x) {
    return std::pow(bracket, power);
  }
  return std::exp(std::log1p(d * x) / d);
}

double q_log_of_ratio(EntropicIndex q, double y, double x) {
  if (!(x > 0.0)) {
    throw NonPositiveArgument("q_log_of_ratio requires x > 0", x);
  }
  const double ly = q_log(q, y);
  const double lx = q_log(q, x);
  if (q.classical()) return ly - lx;
  return std::pow(x, -q.deformation()) * (ly - lx);
}

QDomainPoint::QDomainPoint(EntropicIndex q, double x) : q_(q), x_(x) {
  if (!in_q_exp_domain(q, x)) {
    throw DomainViolation("point outside the q-exponential domain", q_exp_bracket(q, x));
  }
}

double round_trip_check(const QDomainPoint& point) {
  const double y = q_exp(point.index(), point.x());
  return std::abs(q_log(point.index(), y) - point.x());
}

}  // namespace qdeform
