#include "qdeform/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qdeform/numeric.hpp"

namespace qdeform {

InitialCondition::InitialCondition(double x0, double y0) : x0_(x0), y0_(y0) {
  if (!(y0 > 0.0)) throw NonPositiveArgument("initial condition requires y0 > 0", y0);
  if (!std::isfinite(x0) || !std::isfinite(y0)) {
    throw std::invalid_argument("initial condition must be finite");
  }
}

RescaleFactor::RescaleFactor(double c0) : c0_(c0) {
  if (!(c0 > 0.0) || !std::isfinite(c0)) {
    throw NonPositiveArgument("rescale factor must be positive and finite", c0);
  }
}

RescaleFactor rescale_factor(EntropicIndex q, const InitialCondition& ic, Direction direction) {
  const double arg = q_log(q, ic.y0()) - sign_of(direction) * ic.x0();
  if (!in_q_exp_domain(q, arg)) {
    throw DomainViolation("no positive rescale factor: ln_q y0 - lambda x0 = " + format_real(arg) +
                              " is outside the q-exponential domain",
                          q_exp_bracket(q, arg));
  }
  return RescaleFactor(q_exp(q, arg));
}

double analytic_solution(EntropicIndex q, RescaleFactor c0, Direction direction, double x) {
  const double unit = std::pow(c0.value(), q.deformation());
  return c0.value() * q_exp(q, sign_of(direction) * x / unit);
}

std::vector<QLogPoint> q_log_line(EntropicIndex q, RescaleFactor c0, Direction direction,
                                  std::span<const double> xs) {
  const double intercept = q_log(q, c0.value());
  const double slope = sign_of(direction);
  std::vector<QLogPoint> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back({x, slope * x + intercept});
  return out;
}

Trajectory integrate_ode(EntropicIndex q, const InitialCondition& ic, Direction direction,
                         double x_end, double step, const Rk4Options& options) {
  if (!(step > 0.0)) throw std::invalid_argument("integration step must be positive");
  if (!(x_end > ic.x0())) throw std::invalid_argument("x_end must exceed x0");

  const double lambda = sign_of(direction);
  const double qv = q.value();
  const double d = q.deformation();
  const double unit = std::pow(rescale_factor(q, ic, direction).value(), d);

  const double span = x_end - ic.x0();
  const auto steps = static_cast<std::size_t>(std::ceil(span / step - 1e-9));
  const double h = span / static_cast<double>(steps);

  auto rhs = [&](double y) { return lambda * std::pow(y, qv); };

  Trajectory traj;
  traj.q = q;
  traj.direction = direction;
  traj.samples.reserve(steps + 1);
  traj.samples.push_back({ic.x0(), ic.y0()});

  double y = ic.y0();
  for (std::size_t k = 1; k <= steps; ++k) {
    const double x_prev = traj.samples.back().x;
    const double x_next = k == steps ? x_end : ic.x0() + h * static_cast<double>(k);
    if (!q.classical() && 1.0 + d * lambda * x_next / unit < options.edge_guard) {
      throw BlowupDetected("trajectory reaches the edge of the analytic domain near x = " +
                               format_real(x_next),
                           x_prev);
    }
    const double dx = x_next - x_prev;
    const double k1 = rhs(y);
    const double k2 = rhs(y + 0.5 * dx * k1);
    const double k3 = rhs(y + 0.5 * dx * k2);
    const double k4 = rhs(y + dx * k3);
    y += dx / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!(y > 0.0) || !(y < options.y_max)) {
      throw BlowupDetected("solution left (0, y_max) at x = " + format_real(x_next), x_prev);
    }
    traj.samples.push_back({x_next, y});
  }
  return traj;
}

double max_deviation_from_analytic(const Trajectory& trajectory) {
  if (trajectory.samples.empty()) return 0.0;
  const auto& first = trajectory.samples.front();
  const RescaleFactor c0 =
      rescale_factor(trajectory.q, InitialCondition(first.x, first.y), trajectory.direction);
  double worst = 0.0;
  for (const auto& s : trajectory.samples) {
    const double exact = analytic_solution(trajectory.q, c0, trajectory.direction, s.x);
    worst = std::max(worst, relative_error(s.y, exact));
  }
  return worst;
}

double rescaling_invariance_residual(EntropicIndex q, double c0, Direction direction,
                                     double x_end, double step) {
  const Trajectory traj = integrate_ode(q, InitialCondition(0.0, c0), direction, x_end, step);
  const double x_unit = std::pow(c0, q.deformation());
  const double lambda = sign_of(direction);
  const auto& s = traj.samples;
  double worst = 0.0;
  for (std::size_t k = 1; k + 1 < s.size(); ++k) {
    const double slope = (s[k + 1].y / c0 - s[k - 1].y / c0) /
                         (s[k + 1].x / x_unit - s[k - 1].x / x_unit);
    const double expected = lambda * std::pow(s[k].y / c0, q.value());
    worst = std::max(worst, relative_error(slope, expected));
  }
  return worst;
}

ScalePair shift_expansion(EntropicIndex q, double c) {
  const double bracket = q_exp_bracket(q, c);
  if (!(bracket > 0.0)) {
    throw DomainViolation("shift requires 1 + (1-q)c > 0, got " + format_real(bracket), bracket);
  }
  // exp_q(c)^(1-q) is the bracket itself.
  return {q_exp(q, c), q.classical() ? 1.0 : bracket};
}

ScalePair compose_shifts(EntropicIndex q, double c1, double c2) {
  const ScalePair first = shift_expansion(q, c1);
  const ScalePair second = shift_expansion(q, c2);
  return {first.y_scale * second.y_scale, first.x_scale * second.x_scale};
}

double composed_shift_equivalent(EntropicIndex q, double c1, double c2) {
  return c1 + c2 * shift_expansion(q, c1).x_scale;
}

FigureTable fig2_data(const Fig2Params& params) {
  const EntropicIndex q(params.q);
  const std::vector<double> grid = params.grid.values();
  FigureTable table;
  table.q = q;
  table.rows.reserve(grid.size() * params.scales.size());
  for (double scale : params.scales) {
    const RescaleFactor c(scale);
    const double x_unit = std::pow(scale, q.deformation());
    std::vector<double> xs(grid.size());
    std::transform(grid.begin(), grid.end(), xs.begin(), [&](double g) { return g * x_unit; });
    const auto line = q_log_line(q, c, Direction::decay, xs);
    const std::string id = "C=" + format_real(scale);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double y = analytic_solution(q, c, Direction::decay, xs[i]);
      table.rows.push_back({id, scale, xs[i], y, grid[i], y / scale, line[i].qlog_y});
    }
  }
  return table;
}

}  // namespace qdeform
