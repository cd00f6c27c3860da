// Acceptance run: one [PASS]/[FAIL] line per criterion.
//
// usage: acceptance <path-to-qdeform-cli>

#include <sys/wait.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "qdeform/canonical.hpp"
#include "qdeform/combinatorics.hpp"
#include "qdeform/dynamics.hpp"
#include "qdeform/numeric.hpp"
#include "qdeform/qgaussian.hpp"
#include "qdeform/random.hpp"
#include "qdeform/verify.hpp"

using namespace qdeform;

namespace {

constexpr double kIdentityTol = 1e-12;
constexpr double kRk4Tol = 1e-6;
constexpr double kInvarianceTol = 1e-4;
constexpr double kFigIdentityTol = 1e-12;
constexpr double kFigShapeTol = 1e-9;
constexpr double kStationarityTol = 1e-6;
constexpr double kQuadraticTol = 1e-6;
constexpr double kNormalizationTol = 1e-10;
constexpr double kMassTol = 1e-8;
constexpr double kSplitTol = 1e-12;
constexpr double kReproduceTol = 1e-10;
constexpr double kWorkedTol = 1e-14;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = elapsed < budget_s;
  const bool pass = o.pass && in_time;
  if (!pass) ++failures;
  std::printf("[%s] %2d %s: %s; %.3fs (budget %.0fs)%s\n", pass ? "PASS" : "FAIL", id, title,
              o.detail.c_str(), elapsed, budget_s, in_time ? "" : " over budget");
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double case_metric(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.cases) {
    if (c.name == name) return c.max_rel_err;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

struct Captured {
  int status;
  std::string out;
};

Captured capture(const std::string& command) {
  Captured c{-1, ""};
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return c;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) c.out.append(buf, n);
  const int raw = pclose(pipe);
  c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return c;
}

double pdf_mass(const QGaussianModel& m) {
  auto f = [&](double e) { return q_gaussian_pdf(m, e); };
  if (m.q().value() < 1.0) {
    boost::math::quadrature::tanh_sinh<double> ts;
    return 2.0 * ts.integrate(f, 0.0, m.support_half_width());
  }
  boost::math::quadrature::exp_sinh<double> es;
  return 2.0 * es.integrate(f, 0.0, std::numeric_limits<double>::infinity());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <qdeform-cli>\n");
    return 1;
  }
  const std::string cli = argv[1];

  criterion(1, "identity suite, 10000 tuples", 10.0, [] {
    const VerificationReport r = run_suite(Suite::identities, 42);
    double worst = 0.0;
    for (const char* name : {"round_trip", "q_exp_law", "q_product_associativity",
                             "q_product_commutativity", "shift_expansion", "log_of_ratio"}) {
      const double m = case_metric(r, name);
      worst = std::isnan(m) ? m : std::max(worst, m);
    }
    return Outcome{worst < kIdentityTol, "max rel err " + num(worst)};
  });

  criterion(2, "dynamics RK4 and rescaling invariance", 5.0, [] {
    const EntropicIndex q(1.3);
    const Trajectory t = integrate_ode(q, InitialCondition(0.0, 1.0), Direction::decay, 5.0, 1e-3);
    const double rk4 = max_deviation_from_analytic(t);
    double inv = 0.0;
    for (double c : {1.0, 10.0, 20.0}) {
      inv = std::max(inv, rescaling_invariance_residual(q, c, Direction::decay, 5.0, 1e-3));
    }
    return Outcome{rk4 <= kRk4Tol && inv <= kInvarianceTol,
                   "rk4 rel dev " + num(rk4) + ", invariance residual " + num(inv)};
  });

  criterion(3, "figure reproduction", 2.0, [] {
    double identical = 0.0, shape = 0.0;
    const FigureTable f2 = fig2_data();
    const FigureTable f3 = fig3_data();
    for (const FigureTable* t : {&f2, &f3}) {
      const std::size_t per_curve = t->rows.size() / 3;
      for (std::size_t i = 0; i < t->rows.size(); ++i) {
        const FigureRow& r = t->rows[i];
        identical = std::max(identical, relative_error(r.y_rescaled, t->rows[i % per_curve].y_rescaled));
        // fig2: ln_q y = ln_q C - x; fig3: ln_q y = ln_q c - x^2.
        const double x = r.x_raw;
        const double expected = q_log(t->q, r.scale) - (t == &f2 ? x : x * x);
        shape = std::max(shape, scaled_error(q_log(t->q, r.y_raw), expected));
      }
    }
    return Outcome{identical <= kFigIdentityTol && shape < kFigShapeTol,
                   "rescaled spread " + num(identical) + ", q-log residual " + num(shape)};
  });

  criterion(4, "q-Stirling error non-increasing", 5.0, [] {
    bool ok = true;
    std::string detail;
    for (double qv : {0.5, 1.0, 1.5, 2.0, 2.5}) {
      const EntropicIndex q(qv);
      double prev = INFINITY;
      for (std::uint64_t n : {10u, 100u, 1000u, 10000u}) {
        const double err = relative_error(q_stirling(q, n), q_log_factorial(q, n));
        ok = ok && err <= prev;
        prev = err;
      }
      detail += "q=" + num(qv) + ":" + num(prev) + " ";
    }
    return Outcome{ok, "err at n=1e4 " + detail};
  });

  criterion(5, "Tsallis correspondence error decreasing", 10.0, [] {
    bool ok = true;
    double last = 0.0;
    const std::vector<std::vector<std::uint64_t>> ratios{{1, 1}, {1, 2, 3}};
    auto counts = [](const std::vector<std::uint64_t>& ratio, std::uint64_t n) {
      std::uint64_t parts = 0;
      for (auto r : ratio) parts += r;
      std::vector<std::uint64_t> c;
      for (auto r : ratio) c.push_back(r * n / parts);
      return CountVector(c);
    };
    for (const auto& ratio : ratios) {
      for (double qv : {0.5, 1.0, 1.5, 2.0}) {
        double prev = INFINITY;
        for (std::uint64_t n : {60u, 600u, 6000u, 60000u}) {
          const CountVector cv = counts(ratio, n);
          const double err = qv == 2.0 ? tsallis_correspondence_q2(cv).rel_err
                                       : tsallis_correspondence(EntropicIndex(qv), cv).rel_err;
          ok = ok && err < prev;
          prev = err;
        }
        last = std::max(last, prev);
      }
    }
    return Outcome{ok, "worst error at n=60000 " + num(last)};
  });

  criterion(6, "MLP stationarity at the sample mean", 10.0, [] {
    Rng rng(42);
    bool ok = true;
    double worst_grad = 0.0, worst_quad = 0.0;
    for (double qv : {0.5, 1.3, 1.7}) {
      const QGaussianModel model(EntropicIndex(qv), -0.5, 0.5);
      for (int s = 0; s < 100; ++s) {
        std::vector<double> xs(rng.integer(2, 30));
        for (double& x : xs) x = rng.uniform(-1.0, 1.0);
        const Stationarity st = mlp_stationarity(model, SampleSet(xs));
        ok = ok && st.curvature < 0.0;
        worst_grad = std::max(worst_grad, std::abs(st.grad_at_mean) / (std::abs(st.curvature) * st.scale));
      }
      std::vector<double> lnf;
      for (int i = 0; i <= 200; ++i) lnf.push_back(q_log(model.q(), q_gaussian_pdf(model, -1.0 + 0.01 * i)));
      const double ref = lnf[2] - 2.0 * lnf[1] + lnf[0];
      for (std::size_t i = 1; i + 1 < lnf.size(); ++i) {
        worst_quad = std::max(worst_quad, relative_error(lnf[i + 1] - 2.0 * lnf[i] + lnf[i - 1], ref));
      }
    }
    ok = ok && worst_grad <= kStationarityTol && worst_quad <= kQuadraticTol;
    return Outcome{ok, "|grad|/(|curv| scale) " + num(worst_grad) + ", second-difference spread " +
                           num(worst_quad)};
  });

  criterion(7, "q-Gaussian normalization", 10.0, [] {
    const double z1 = normalization(EntropicIndex(1.0), 1.0);
    const double z0 = normalization(EntropicIndex(0.0), 1.0);
    const double e1 = std::abs(z1 - std::sqrt(std::numbers::pi));
    const double e0 = std::abs(z0 - 4.0 / 3.0);
    double mass = 0.0;
    for (double qv : {0.0, 0.5, 1.0, 1.5, 2.0, 2.5}) {
      for (double beta : {0.5, 1.0, 2.0}) {
        mass = std::max(mass, std::abs(pdf_mass(QGaussianModel(EntropicIndex(qv), -2.0 * beta, 0.0)) - 1.0));
      }
    }
    return Outcome{e1 <= kNormalizationTol && e0 <= kNormalizationTol && mass <= kMassTol,
                   "|Z(1,1)-sqrt(pi)| " + num(e1) + ", |Z(0,1)-4/3| " + num(e0) + ", |mass-1| " +
                       num(mass)};
  });

  criterion(8, "canonical form uniqueness", 2.0, [] {
    Rng rng(42);
    std::vector<double> xs(10);
    for (double& x : xs) x = rng.uniform(0.0, 5.0);
    const EntropicIndex q(1.5);
    const UniquenessReport u = verify_uniqueness(q, xs, 1.0, 100, rng);
    const auto dist = build_distribution(q, xs, 1.0);
    double reproduce = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      reproduce = std::max(reproduce, relative_error(u.canonical.probability(xs[i]), dist.probabilities()[i]));
    }
    const EntropicIndex one(1.0);
    const auto f_a = canonical_form(build_distribution(one, xs, 0.0));
    const auto f_b = canonical_form(build_distribution(one, xs, 1.0));
    double shift = std::max(std::abs(f_a.slope - f_b.slope), std::abs(f_a.intercept - f_b.intercept));
    const bool ok = u.accepted == 100 && u.max_probability_deviation <= kSplitTol &&
                    u.distinct_canonical_forms == 1 && reproduce <= kReproduceTol && shift <= kSplitTol;
    return Outcome{ok, "split dev " + num(u.max_probability_deviation) + ", forms " +
                           std::to_string(u.distinct_canonical_forms) + "/" + std::to_string(u.accepted) +
                           ", reproduce " + num(reproduce) + ", q=1 shift drift " + num(shift)};
  });

  criterion(9, "worked example q=2, xs=[0,1], c=0", 1.0, [] {
    const auto d = build_distribution(EntropicIndex(2.0), std::vector<double>{0.0, 1.0}, 0.0);
    const auto f = canonical_form(d);
    const double err = std::max({std::abs(d.probabilities()[0] - 2.0 / 3.0),
                                 std::abs(d.probabilities()[1] - 1.0 / 3.0), std::abs(f.slope + 1.5),
                                 std::abs(f.intercept + 0.5)});
    return Outcome{err <= kWorkedTol, "max abs err " + num(err)};
  });

  criterion(10, "CLI determinism", 30.0, [&] {
    const std::string cmd = "'" + cli + "' verify all --seed 42 --format json";
    const Captured a = capture(cmd);
    const Captured b = capture(cmd);
    const bool ok = a.status == 0 && b.status == 0 && !a.out.empty() && a.out == b.out;
    return Outcome{ok, "exit " + std::to_string(a.status) + "/" + std::to_string(b.status) + ", " +
                           std::to_string(a.out.size()) + " bytes, identical " +
                           (a.out == b.out ? "yes" : "no")};
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
