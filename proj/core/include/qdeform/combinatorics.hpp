#pragma once

// q-factorials, q-multinomial coefficients, the q-Stirling formula and Tsallis
// entropy, plus the large-n correspondence between the last two.

#include <cstdint>
#include <vector>

#include "qdeform/qcore.hpp"

namespace qdeform {

/// Positive block sizes n_1..n_k with total n.
class CountVector {
 public:
  /// Throws std::invalid_argument when empty or when any count is zero.
  explicit CountVector(std::vector<std::uint64_t> counts);

  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
  std::uint64_t total() const noexcept { return total_; }

 private:
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

/// Non-negative entries summing to 1 within 1e-12.
class ProbabilityVector {
 public:
  static constexpr double kSumTolerance = 1e-12;

  /// Throws std::invalid_argument on negative/non-finite entries or a bad sum.
  explicit ProbabilityVector(std::vector<double> p);

  /// p_i = n_i / n.
  static ProbabilityVector from_counts(const CountVector& counts);

  /// 1/k repeated k times.
  static ProbabilityVector uniform(std::size_t k);

  const std::vector<double>& values() const noexcept { return p_; }
  std::size_t size() const noexcept { return p_.size(); }

 private:
  std::vector<double> p_;
};

/// ln_q n!_q = sum_{k=1..n} ln_q k, compensated.
double q_log_factorial(EntropicIndex q, std::uint64_t n);

/// Large-n approximation of q_log_factorial:
///   q != 2: n/(2-q) ln_q n - n/(2-q) + (1/2) ln_q n + 1/(2-q)
///   q == 2: n - ln n - 1/(2n) - 1/2
/// The q == 2 branch is taken on exact equality only.
double q_stirling(EntropicIndex q, std::uint64_t n);

/// ln_q n!_q - sum_i ln_q n_i!_q.
double q_log_multinomial(EntropicIndex q, const CountVector& counts);

/// S_q(p) = (1 - sum p_i^q) / (q - 1), Shannon entropy at q = 1. Terms with
/// p_i = 0 are skipped. Evaluated as sum_i p_i ln_q(1/p_i), which is the same
/// quantity for a normalized p and has no cancellation near q = 1.
double tsallis_entropy(EntropicIndex q, const ProbabilityVector& p);

struct Correspondence {
  double lhs;      ///< exact q-log multinomial
  double rhs;      ///< entropy form
  double rel_err;  ///< |lhs - rhs| / |lhs|; 0 when both are exactly equal
};

/// lhs = ln_q [n; n_1..n_k]_q, rhs = n^(2-q)/(2-q) S_{2-q}(n_i/n).
/// Throws std::invalid_argument for q == 2 (use tsallis_correspondence_q2).
Correspondence tsallis_correspondence(EntropicIndex q, const CountVector& counts);

/// q = 2: rhs = -ln n + sum_i ln n_i.
Correspondence tsallis_correspondence_q2(const CountVector& counts);

}  // namespace qdeform
