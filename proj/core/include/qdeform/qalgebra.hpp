#pragma once

#include <span>
#include <vector>

#include "qdeform/qcore.hpp"

namespace qdeform {

/// x (x)_q y = [x^(1-q) + y^(1-q) - 1]^(1/(1-q)); ordinary product at q = 1.
/// 1 is the identity element and is returned exactly.
double q_product(EntropicIndex q, double x, double y);

/// Inverse of q_product: [x^(1-q) - y^(1-q) + 1]^(1/(1-q)).
double q_ratio(EntropicIndex q, double x, double y);

/// Relative residual of exp_q(x1 + x2) = exp_q(x1) (x)_q exp_q(x2).
double q_exp_law_check(EntropicIndex q, double x1, double x2);

/// Equal-scale shifts x_1..x_n and the drifted values they are observed as:
/// x'_t = x_t / (1 + (1-q) * sum_{i<t} x_i).
struct ObservationSequence {
  std::vector<double> shifts;
  std::vector<double> observed;
};

/// Throws DomainViolation (with index t) at the first partial sum outside the
/// domain, and std::invalid_argument for an empty input.
ObservationSequence scale_drift_expand(EntropicIndex q, std::span<const double> shifts);

/// Ordinary product of exp_q over the drifted values; equals exp_q(sum of shifts).
double drifted_product(EntropicIndex q, const ObservationSequence& seq);

/// Left fold of q_product. DomainViolation reports the index of the factor
/// whose fold step failed.
double q_product_fold(EntropicIndex q, std::span<const double> factors);

}  // namespace qdeform
