#include "qdeform/qgaussian.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qdeform/numeric.hpp"
#include "quadrature.hpp"

namespace qdeform {
namespace {

constexpr double kTruncation = 1e-14;
constexpr double kPowerRegime = 100.0;
constexpr int kMaxPanels = 256;

// Tail of the half-line integral beyond `edge` for 1 < q < 3.
//
// With p = 1/(q-1), a = 1/(2p-1) and K = kappa edge^2, the substitution
// e = edge * s^(-a) turns (1 + kappa e^2)^(-p) de into
// a edge K^(-p) (1 + s^(2a)/K)^(-p) ds on (0, 1].
double power_law_tail(double q, double beta, double edge) {
  const double p = 1.0 / (q - 1.0);
  const double a = (q - 1.0) / (3.0 - q);
  const double k = (q - 1.0) * beta * edge * edge;
  const double log_bound = std::log(a * edge) - p * std::log(k);
  const double bound = std::exp(log_bound);
  if (bound == 0.0) return 0.0;
  auto integrand = [&](double s) {
    return std::exp(log_bound - p * std::log1p(std::pow(s, 2.0 * a) / k));
  };
  const double tail = detail::integrate(integrand, 0.0, 1.0).value;
  // The integrand never exceeds its value at s = 0.
  if (tail > bound * (1.0 + 1e-12)) {
    throw std::logic_error("q-Gaussian tail exceeds its analytic bound");
  }
  return tail;
}

}  // namespace

double beta_from(EntropicIndex q, double a_q, double c_q) {
  if (!(a_q < 0.0)) throw std::invalid_argument("a_q must be negative");
  const double bracket = q_exp_bracket(q, c_q);
  if (!(bracket > 0.0)) {
    throw DomainViolation("beta requires 1 + (1-q) C_q > 0, got " + format_real(bracket), bracket);
  }
  return -a_q / (2.0 * bracket);
}

double normalization(EntropicIndex q, double beta) {
  if (!(q.value() < 3.0)) {
    throw UnnormalizableModel("q-Gaussian is not normalizable for q >= 3");
  }
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw NonPositiveArgument("normalization requires beta > 0", beta);
  }
  auto g = [&](double e) { return q_exp(q, -beta * e * e, DomainPolicy::cutoff); };

  if (q.value() < 1.0) {
    const double edge = 1.0 / std::sqrt(beta * q.deformation());
    return 2.0 * detail::integrate(g, 0.0, edge).value;
  }

  const double kappa = (q.value() - 1.0) * beta;
  CompensatedSum half;
  double lo = 0.0;
  double hi = 1.0 / std::sqrt(beta);
  for (int panel = 0; panel < kMaxPanels; ++panel) {
    half.add(detail::integrate(g, lo, hi).value);
    lo = hi;
    hi *= 2.0;
    const bool negligible = g(lo) <= kTruncation;
    const bool asymptotic = q.classical() || kappa * lo * lo >= kPowerRegime;
    if (negligible && asymptotic) break;
  }
  if (!q.classical()) half.add(power_law_tail(q.value(), beta, lo));
  return 2.0 * half.value();
}

QGaussianModel::QGaussianModel(EntropicIndex q, double a_q, double c_q)
    : q_(q), a_(a_q), c_q_(c_q), scale_(0.0), beta_(beta_from(q, a_q, c_q)), z_(0.0) {
  scale_ = q_exp(q, c_q);
  z_ = qdeform::normalization(q, beta_);
}

double QGaussianModel::support_half_width() const noexcept {
  if (q_.value() >= 1.0) return std::numeric_limits<double>::infinity();
  return 1.0 / std::sqrt(beta_ * q_.deformation());
}

double q_gaussian_pdf(const QGaussianModel& model, double e) {
  return q_exp(model.q(), -model.beta() * e * e, DomainPolicy::cutoff) / model.normalization();
}

double unnormalized_density(const QGaussianModel& model, double e) {
  return q_exp(model.q(), 0.5 * model.a() * e * e + model.integration_constant(),
               DomainPolicy::cutoff);
}

SampleSet::SampleSet(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("sample set must be non-empty");
  CompensatedSum sum;
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("samples must be finite");
    sum.add(v);
  }
  mean_ = sum.value() / static_cast<double>(values_.size());
  double spread = 0.0;
  for (double v : values_) spread = std::max(spread, std::abs(v - mean_));
  scale_ = spread > 0.0 ? spread : 1.0;
}

double q_log_likelihood(const QGaussianModel& model, double theta, const SampleSet& samples,
                        SupportPolicy policy) {
  const EntropicIndex q = model.q();
  CompensatedSum sum;
  const auto xs = samples.values();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = q_gaussian_pdf(model, xs[i] - theta);
    if (f == 0.0 && q.value() < 1.0) {
      if (policy == SupportPolicy::strict) {
        throw DomainViolation("sample " + std::to_string(i) + " lies outside the density support",
                              q_exp_bracket(q, -model.beta() * (xs[i] - theta) * (xs[i] - theta)),
                              i);
      }
      sum.add(-1.0 / q.deformation());
      continue;
    }
    sum.add(q_log(q, f));
  }
  return sum.value();
}

bool Stationarity::satisfied() const noexcept {
  return curvature < 0.0 && std::abs(grad_at_mean) <= 1e-6 * std::abs(curvature) * scale;
}

Stationarity mlp_stationarity(const QGaussianModel& model, const SampleSet& samples) {
  const double theta = samples.mean();
  const double scale = samples.scale();
  const double h1 = 1e-6 * scale;
  const double h2 = 1e-4 * scale;

  const double edge = model.support_half_width();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double reach = std::abs(samples.values()[i] - theta) + h2;
    if (!(reach < edge)) {
      throw DomainViolation("sample mean is not interior to the likelihood domain",
                            q_exp_bracket(model.q(), -model.beta() * reach * reach), i);
    }
  }

  auto loglik = [&](double t) { return q_log_likelihood(model, t, samples); };
  const double center = loglik(theta);
  const double grad = (loglik(theta + h1) - loglik(theta - h1)) / (2.0 * h1);
  const double curvature = (loglik(theta + h2) - 2.0 * center + loglik(theta - h2)) / (h2 * h2);
  return {theta, grad, curvature, scale};
}

double defining_ode_residual(const QGaussianModel& model, double e) {
  constexpr double h = 1e-6;
  const EntropicIndex q = model.q();
  auto arg = [&](double x) { return 0.5 * model.a() * x * x + model.integration_constant(); };
  const double reach = std::abs(e) + h;
  if (!in_q_exp_domain(q, arg(reach))) {
    throw DomainViolation("e is not interior to the density support", q_exp_bracket(q, arg(reach)));
  }
  auto f = [&](double x) { return q_exp(q, arg(x)); };
  const double slope = (f(e + h) - f(e - h)) / (2.0 * h);
  return slope / std::pow(f(e), q.value()) - model.a() * e;
}

namespace {

std::vector<FigureRow> rescaled_rows(EntropicIndex q, double gamma, double c, double c_q,
                                     std::span<const double> es, const std::string& id) {
  // c^((1-q)/2) = sqrt(1 + (1-q) C_q).
  const double x_unit = std::sqrt(q_exp_bracket(q, c_q));
  std::vector<FigureRow> rows;
  rows.reserve(es.size());
  for (double e : es) {
    const double qlog = c_q - gamma * e * e;
    const double f = q_exp(q, qlog);
    rows.push_back({id, c, e, f, e / x_unit, f / c, qlog});
  }
  return rows;
}

}  // namespace

std::vector<FigureRow> frequency_rescale(EntropicIndex q, double gamma, double c_q,
                                         std::span<const double> es, const std::string& curve_id) {
  if (!(gamma > 0.0)) throw NonPositiveArgument("gamma_q must be positive", gamma);
  const double bracket = q_exp_bracket(q, c_q);
  if (!(bracket > 0.0)) {
    throw DomainViolation("scale requires 1 + (1-q) C_q > 0, got " + format_real(bracket), bracket);
  }
  return rescaled_rows(q, gamma, q_exp(q, c_q), c_q, es, curve_id);
}

FigureTable fig3_data(const Fig3Params& params) {
  const EntropicIndex q(params.q);
  const std::vector<double> grid = params.grid.values();
  FigureTable table;
  table.q = q;
  for (double c : params.scales) {
    if (!(c > 0.0)) throw NonPositiveArgument("figure scales must be positive", c);
    const double c_q = q_log(q, c);
    const double x_unit = std::pow(c, 0.5 * q.deformation());
    std::vector<double> es(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) es[i] = grid[i] * x_unit;
    auto rows = rescaled_rows(q, 1.0, c, c_q, es, "c=" + format_real(c));
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].x_rescaled = grid[i];
    table.rows.insert(table.rows.end(), rows.begin(), rows.end());
  }
  return table;
}

}  // namespace qdeform
