#pragma once

// The power-law growth/decay system dy/dx = lambda * y^q.
//
// ln_q y turns the system into the linear relation ln_q y = lambda x + ln_q C0,
// so every trajectory is C0 * exp_q(lambda x / C0^(1-q)) with the rescale
// factor C0 fixed by the initial condition. Rescaling (x, y) by
// (C0^(1-q), C0) maps every trajectory onto exp_q(lambda x).

#include <span>
#include <vector>

#include "qdeform/qcore.hpp"
#include "qdeform/table.hpp"

namespace qdeform {

/// Sign lambda of the right-hand side.
enum class Direction : int { decay = -1, growth = 1 };

constexpr double sign_of(Direction d) noexcept { return static_cast<double>(static_cast<int>(d)); }

/// (x0, y0) with y0 > 0.
class InitialCondition {
 public:
  /// Throws NonPositiveArgument for y0 <= 0.
  InitialCondition(double x0, double y0);

  double x0() const noexcept { return x0_; }
  double y0() const noexcept { return y0_; }

 private:
  double x0_;
  double y0_;
};

/// Positive scale C0 of a trajectory.
class RescaleFactor {
 public:
  /// Throws NonPositiveArgument for c0 <= 0 or non-finite c0.
  explicit RescaleFactor(double c0);

  double value() const noexcept { return c0_; }

 private:
  double c0_;
};

struct TrajectoryPoint {
  double x;
  double y;
};

/// Samples with strictly increasing x and positive y.
struct Trajectory {
  std::vector<TrajectoryPoint> samples;
  EntropicIndex q{1.0};
  Direction direction = Direction::growth;
};

/// C0 = exp_q(ln_q y0 - lambda x0). The default direction reproduces
/// ln_q C0 = ln_q y0 - x0.
RescaleFactor rescale_factor(EntropicIndex q, const InitialCondition& ic,
                             Direction direction = Direction::growth);

/// C0 * exp_q(lambda x / C0^(1-q)); exactly C0 at x = 0.
double analytic_solution(EntropicIndex q, RescaleFactor c0, Direction direction, double x);

struct QLogPoint {
  double x;
  double qlog_y;
};

/// Points of the straight line ln_q y = lambda x + ln_q C0.
std::vector<QLogPoint> q_log_line(EntropicIndex q, RescaleFactor c0, Direction direction,
                                  std::span<const double> xs);

struct Rk4Options {
  /// Integration stops with BlowupDetected once y reaches this bound.
  double y_max = 1e150;
  /// ... or once the analytic bracket 1 + (1-q) lambda x / C0^(1-q) drops below this.
  double edge_guard = 1e-12;
};

/// Classical fixed-step RK4 on [ic.x0, x_end]. The step is shrunk so that an
/// integral number of steps lands exactly on x_end.
Trajectory integrate_ode(EntropicIndex q, const InitialCondition& ic, Direction direction,
                         double x_end, double step, const Rk4Options& options = {});

/// Largest relative deviation of `trajectory` from the analytic solution
/// through its first sample.
double max_deviation_from_analytic(const Trajectory& trajectory);

/// Integrates from (0, c0), rescales to (x / c0^(1-q), y / c0) and compares
/// the central-difference slope of the rescaled samples against lambda * y~^q.
/// Returns the largest relative error over interior samples.
double rescaling_invariance_residual(EntropicIndex q, double c0, Direction direction,
                                     double x_end, double step);

/// Rescaling induced by a shift x -> x + c of exp_q:
/// exp_q(x + c) = y_scale * exp_q(x / x_scale).
struct ScalePair {
  double y_scale;
  double x_scale;
};

/// y_scale = exp_q(c), x_scale = y_scale^(1-q). Requires 1 + (1-q)c > 0.
ScalePair shift_expansion(EntropicIndex q, double c);

/// Two successive shifts, the second applied in the argument already
/// rescaled by the first: y_scale = exp_q(c1) exp_q(c2),
/// x_scale = exp_q(c1)^(1-q) exp_q(c2)^(1-q).
ScalePair compose_shifts(EntropicIndex q, double c1, double c2);

/// The single original-unit shift equivalent to compose_shifts(c1, c2):
/// c1 + c2 * exp_q(c1)^(1-q).
double composed_shift_equivalent(EntropicIndex q, double c1, double c2);

struct Fig2Params {
  double q = 1.3;
  std::vector<double> scales{1.0, 10.0, 20.0};
  /// Grid on the rescaled abscissa x / C^(1-q).
  Grid grid{0.0, 5.0, 501};
};

/// Decaying curves y = C exp_q(-x / C^(1-q)) sampled on a common rescaled
/// grid, with their rescaled coordinates and ln_q y = -x + ln_q C.
FigureTable fig2_data(const Fig2Params& params = {});

}  // namespace qdeform
