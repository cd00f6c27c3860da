#pragma once

// q-logarithm, q-exponential and the q-log-of-ratio identity.
//
// Deformed branches are evaluated through expm1/log1p:
//
//   ln_q y  = expm1((1-q) ln y) / (1-q)
//   exp_q x = exp(log1p((1-q) x) / (1-q))
//
// which stay accurate as q approaches 1 (checked down to |1-q| ~ 1e-8), so the
// classical branch is selected only when q == 1 exactly.

#include "qdeform/errors.hpp"

namespace qdeform {

/// The deformation parameter q. Always finite.
class EntropicIndex {
 public:
  /// Throws std::invalid_argument for NaN or infinite q.
  explicit EntropicIndex(double q);

  double value() const noexcept { return q_; }

  /// 1 - q, the exponent that appears in every deformed closed form.
  double deformation() const noexcept { return 1.0 - q_; }

  /// Exact q == 1 test; no tolerance band.
  bool classical() const noexcept { return q_ == 1.0; }

  /// The index 2 - q (used for ln_{2-q} and S_{2-q}).
  EntropicIndex dual() const { return EntropicIndex(2.0 - q_); }

  friend bool operator==(EntropicIndex, EntropicIndex) = default;

 private:
  double q_;
};

/// How q_exp treats arguments with 1 + (1-q)x <= 0.
enum class DomainPolicy {
  strict,  ///< throw DomainViolation
  cutoff,  ///< return 0 when q < 1 (Tsallis cutoff); q > 1 still throws
};

/// 1 + (1-q)x. Positive exactly on the q-exponential domain.
inline double q_exp_bracket(EntropicIndex q, double x) noexcept {
  return 1.0 + q.deformation() * x;
}

inline bool in_q_exp_domain(EntropicIndex q, double x) noexcept {
  return q.classical() || q_exp_bracket(q, x) > 0.0;
}

/// ln_q y = (y^(1-q) - 1)/(1-q); ln y at q = 1. Throws NonPositiveArgument for y <= 0.
double q_log(EntropicIndex q, double y);

/// exp_q x = [1 + (1-q)x]^(1/(1-q)); exp x at q = 1.
/// Throws DomainViolation (carrying the bracket) outside the domain unless the
/// cutoff policy applies.
double q_exp(EntropicIndex q, double x, DomainPolicy policy = DomainPolicy::strict);

/// ln_q(y/x) evaluated as x^(q-1) (ln_q y - ln_q x).
double q_log_of_ratio(EntropicIndex q, double y, double x);

/// An argument x paired with the index it is valid for.
class QDomainPoint {
 public:
  /// Throws DomainViolation if 1 + (1-q)x <= 0.
  QDomainPoint(EntropicIndex q, double x);

  EntropicIndex index() const noexcept { return q_; }
  double x() const noexcept { return x_; }

 private:
  EntropicIndex q_;
  double x_;
};

/// |ln_q(exp_q x) - x|.
double round_trip_check(const QDomainPoint& point);

}  // namespace qdeform
