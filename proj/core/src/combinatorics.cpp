#include "qdeform/combinatorics.hpp"

#include <cmath>
#include <stdexcept>

#include "qdeform/numeric.hpp"

namespace qdeform {

CountVector::CountVector(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) throw std::invalid_argument("count vector must have at least one block");
  for (auto c : counts_) {
    if (c == 0) throw std::invalid_argument("every count must be at least 1");
    total_ += c;
  }
}

ProbabilityVector::ProbabilityVector(std::vector<double> p) : p_(std::move(p)) {
  if (p_.empty()) throw std::invalid_argument("probability vector must be non-empty");
  CompensatedSum sum;
  for (double v : p_) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("probabilities must be finite and non-negative");
    }
    sum.add(v);
  }
  if (std::abs(sum.value() - 1.0) > kSumTolerance) {
    throw std::invalid_argument("probabilities must sum to 1");
  }
}

ProbabilityVector ProbabilityVector::from_counts(const CountVector& counts) {
  std::vector<double> p;
  p.reserve(counts.counts().size());
  const auto n = static_cast<double>(counts.total());
  for (auto c : counts.counts()) p.push_back(static_cast<double>(c) / n);
  return ProbabilityVector(std::move(p));
}

ProbabilityVector ProbabilityVector::uniform(std::size_t k) {
  if (k == 0) throw std::invalid_argument("uniform vector needs k >= 1");
  return ProbabilityVector(std::vector<double>(k, 1.0 / static_cast<double>(k)));
}

double q_log_factorial(EntropicIndex q, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("q_log_factorial requires n >= 1");
  CompensatedSum sum;
  for (std::uint64_t k = 2; k <= n; ++k) sum.add(q_log(q, static_cast<double>(k)));
  return sum.value();
}

double q_stirling(EntropicIndex q, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("q_stirling requires n >= 1");
  const auto nd = static_cast<double>(n);
  if (q.value() == 2.0) return nd - std::log(nd) - 1.0 / (2.0 * nd) - 0.5;
  const double two_minus_q = 2.0 - q.value();
  const double lq = q_log(q, nd);
  return nd / two_minus_q * lq - nd / two_minus_q + 0.5 * lq + 1.0 / two_minus_q;
}

double q_log_multinomial(EntropicIndex q, const CountVector& counts) {
  CompensatedSum sum;
  sum.add(q_log_factorial(q, counts.total()));
  for (auto c : counts.counts()) sum.add(-q_log_factorial(q, c));
  return sum.value();
}

double tsallis_entropy(EntropicIndex q, const ProbabilityVector& p) {
  CompensatedSum sum;
  for (double v : p.values()) {
    if (v > 0.0) sum.add(v * q_log(q, 1.0 / v));
  }
  return sum.value();
}

namespace {

Correspondence make_correspondence(double lhs, double rhs) {
  double rel = 0.0;
  if (lhs != rhs) rel = std::abs(lhs - rhs) / std::abs(lhs);
  return {lhs, rhs, rel};
}

}  // namespace

Correspondence tsallis_correspondence(EntropicIndex q, const CountVector& counts) {
  if (q.value() == 2.0) {
    throw std::invalid_argument("q = 2 has its own branch: tsallis_correspondence_q2");
  }
  const double lhs = q_log_multinomial(q, counts);
  const EntropicIndex dual = q.dual();
  const double two_minus_q = dual.value();
  const auto n = static_cast<double>(counts.total());
  const double rhs = std::pow(n, two_minus_q) / two_minus_q *
                     tsallis_entropy(dual, ProbabilityVector::from_counts(counts));
  return make_correspondence(lhs, rhs);
}

Correspondence tsallis_correspondence_q2(const CountVector& counts) {
  const double lhs = q_log_multinomial(EntropicIndex(2.0), counts);
  CompensatedSum rhs;
  rhs.add(-std::log(static_cast<double>(counts.total())));
  for (auto c : counts.counts()) rhs.add(std::log(static_cast<double>(c)));
  return make_correspondence(lhs, rhs.value());
}

}  // namespace qdeform
