#pragma once

// Discrete q-exponential distributions n_i = exp_q(-x_i + c), p_i = n_i / n.
//
// For q != 1 a shift split c = c1 + c2 yields infinitely many equivalent
// exp_q representations of the same p, each with a different argument
// rescaling. The q-log form
//
//   ln_q p_i = -n^(q-1) x_i + (n^(q-1) c - ln_{2-q} n)
//
// has a single (slope, intercept) pair for every split.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qdeform/qcore.hpp"

namespace qdeform {

class Rng;

class DiscreteQDistribution {
 public:
  EntropicIndex q() const noexcept { return q_; }
  const std::vector<double>& xs() const noexcept { return xs_; }
  double shift() const noexcept { return c_; }
  const std::vector<double>& frequencies() const noexcept { return frequencies_; }
  double total() const noexcept { return total_; }
  const std::vector<double>& probabilities() const noexcept { return probabilities_; }

 private:
  friend DiscreteQDistribution build_distribution(EntropicIndex, std::span<const double>, double);
  DiscreteQDistribution(EntropicIndex q, double c) : q_(q), c_(c) {}

  EntropicIndex q_;
  double c_;
  std::vector<double> xs_;
  std::vector<double> frequencies_;
  double total_ = 0.0;
  std::vector<double> probabilities_;
};

/// Throws DomainViolation naming the first x_i with -x_i + c outside the
/// q-exponential domain, std::invalid_argument for empty xs.
DiscreteQDistribution build_distribution(EntropicIndex q, std::span<const double> xs, double c);

/// The two exp_q representations of p for c = c1 + c2:
///   first_i  ~ exp_q((-x_i + c2) / exp_q(c1)^(1-q))
///   second_i ~ exp_q((-x_i + c1) / exp_q(c2)^(1-q))
struct SplitProbabilities {
  std::vector<double> first;
  std::vector<double> second;
};

SplitProbabilities split_representation(EntropicIndex q, std::span<const double> xs, double c1,
                                        double c2);

struct CanonicalQLogForm {
  EntropicIndex q{1.0};
  double slope = -1.0;
  double intercept = 0.0;

  /// slope * x + intercept.
  double q_log_probability(double x) const noexcept { return slope * x + intercept; }
  /// exp_q(slope * x + intercept).
  double probability(double x) const { return q_exp(q, q_log_probability(x)); }

  friend bool operator==(const CanonicalQLogForm&, const CanonicalQLogForm&) = default;
};

/// slope = -n^(q-1), intercept = n^(q-1) c - ln_{2-q} n.
CanonicalQLogForm canonical_form(const DiscreteQDistribution& dist);

struct UniquenessReport {
  std::size_t requested = 0;
  std::size_t accepted = 0;
  /// Draws outside the feasible interval or whose c1 + c2 does not round back to c.
  std::size_t rejected = 0;
  /// Splits that raised DomainViolation while evaluating a representation.
  std::size_t domain_failures = 0;
  /// Largest |p_split - p_reference| / p_reference over every split, both forms.
  double max_probability_deviation = 0.0;
  /// Distinct (exp_q(c1)^(1-q), exp_q(c2)^(1-q)) argument rescalings seen.
  std::size_t distinct_parameterizations = 0;
  /// Distinct canonical (slope, intercept) pairs seen; 1 means unique.
  std::size_t distinct_canonical_forms = 0;
  CanonicalQLogForm canonical;
};

/// Open interval of c1 for which both sub-shifts c1 and c - c1 are in the
/// q-exponential domain, shrunk by 1% of its width on each side. Any finite
/// interval centred on c/2 is returned for q = 1.
std::pair<double, double> feasible_split_interval(EntropicIndex q, double c);

/// Draws `n_splits` accepted splits c = c1 + c2 and compares their
/// representations. Splits are drawn sequentially from `rng`.
UniquenessReport verify_uniqueness(EntropicIndex q, std::span<const double> xs, double c,
                                   std::size_t n_splits, Rng& rng);

}  // namespace qdeform
