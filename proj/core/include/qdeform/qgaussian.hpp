#pragma once

// q-Gaussian densities arising from ln_q f(e) = a_q e^2 / 2 + C_q, their
// normalization, the q-log-likelihood of a location parameter and the
// frequency-rescaling form f(e)/c = exp_q(-gamma_q (e / c^((1-q)/2))^2).

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qdeform/qcore.hpp"
#include "qdeform/table.hpp"

namespace qdeform {

/// beta_q = -a_q / (2 (1 + (1-q) C_q)).
/// Throws std::invalid_argument for a_q >= 0 and DomainViolation when
/// 1 + (1-q) C_q <= 0.
double beta_from(EntropicIndex q, double a_q, double c_q);

/// Z = integral of exp_q(-beta e^2) over its support.
///
/// q < 1: the compact support |e| < 1/sqrt(beta (1-q)) is integrated up to
/// the edge. q >= 1: the half line is split into doubling panels of width
/// 1/sqrt(beta) until the integrand is below 1e-14 of its peak (and, for
/// q > 1, deep in the power-law regime); the remaining power-law tail is
/// mapped onto (0, 1] with e = E s^(-(q-1)/(3-q)), which makes it a bounded
/// smooth integrand, and integrated exactly rather than dropped.
///
/// Throws UnnormalizableModel for q >= 3 and NonPositiveArgument for beta <= 0.
double normalization(EntropicIndex q, double beta);

/// q, a_q < 0, C_q and everything derived from them.
class QGaussianModel {
 public:
  QGaussianModel(EntropicIndex q, double a_q, double c_q);

  EntropicIndex q() const noexcept { return q_; }
  double a() const noexcept { return a_; }
  double integration_constant() const noexcept { return c_q_; }
  /// gamma_q = -a_q / 2.
  double gamma() const noexcept { return -0.5 * a_; }
  /// c = exp_q(C_q).
  double scale() const noexcept { return scale_; }
  double beta() const noexcept { return beta_; }
  /// Z for beta().
  double normalization() const noexcept { return z_; }
  /// 1/sqrt(beta (1-q)) for q < 1, +inf otherwise.
  double support_half_width() const noexcept;

 private:
  EntropicIndex q_;
  double a_;
  double c_q_;
  double scale_;
  double beta_;
  double z_;
};

/// exp_q(-beta e^2) / Z; zero outside a compact support.
double q_gaussian_pdf(const QGaussianModel& model, double e);

/// exp_q(a_q e^2 / 2 + C_q) = c * exp_q(-beta e^2); zero outside a compact support.
double unnormalized_density(const QGaussianModel& model, double e);

/// Observations x_1..x_n sharing one scale unit.
class SampleSet {
 public:
  /// Throws std::invalid_argument when empty or non-finite.
  explicit SampleSet(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double mean() const noexcept { return mean_; }
  /// max |x_i - mean|, or 1 when every sample coincides.
  double scale() const noexcept { return scale_; }

 private:
  std::vector<double> values_;
  double mean_ = 0.0;
  double scale_ = 1.0;
};

/// Treatment of samples outside a compact support (q < 1).
enum class SupportPolicy {
  strict,   ///< throw DomainViolation
  penalty,  ///< contribute ln_q(0+) = -1/(1-q)
};

/// sum_i ln_q f(x_i - theta) with f the model's normalized density.
double q_log_likelihood(const QGaussianModel& model, double theta, const SampleSet& samples,
                        SupportPolicy policy = SupportPolicy::strict);

struct Stationarity {
  double theta_star;
  double grad_at_mean;
  double curvature;
  double scale;

  /// |grad| <= 1e-6 |curvature| scale and curvature < 0.
  bool satisfied() const noexcept;
};

/// Finite-difference first and second derivatives of the likelihood at the
/// sample mean: central difference with step 1e-6 * scale for the gradient,
/// second difference with step 1e-4 * scale for the curvature.
/// Throws DomainViolation when the stencil leaves a compact support.
Stationarity mlp_stationarity(const QGaussianModel& model, const SampleSet& samples);

/// f'(e) / f(e)^q - a_q e for the unnormalized density, f' by central
/// difference with step 1e-6.
double defining_ode_residual(const QGaussianModel& model, double e);

/// Rows (e, f(e)) of f = exp_q(C_q - gamma e^2) with rescaled coordinates
/// (e / c^((1-q)/2), f / c), c = exp_q(C_q), and ln_q f = -gamma e^2 + C_q.
std::vector<FigureRow> frequency_rescale(EntropicIndex q, double gamma, double c_q,
                                         std::span<const double> es,
                                         const std::string& curve_id = "frequency");

struct Fig3Params {
  double q = 1.7;
  std::vector<double> scales{1.0, 10.0, 100.0};
  /// Grid on the rescaled abscissa x / c^((1-q)/2).
  Grid grid{-5.0, 5.0, 501};
};

/// y/c = exp_q(-(x / c^((1-q)/2))^2) for each c on a common rescaled grid,
/// with ln_q y = -x^2 + ln_q c.
FigureTable fig3_data(const Fig3Params& params = {});

}  // namespace qdeform
