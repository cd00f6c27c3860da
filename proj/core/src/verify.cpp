#include "qdeform/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "qdeform/canonical.hpp"
#include "qdeform/combinatorics.hpp"
#include "qdeform/dynamics.hpp"
#include "qdeform/numeric.hpp"
#include "qdeform/qalgebra.hpp"
#include "qdeform/qcore.hpp"
#include "qdeform/qgaussian.hpp"
#include "qdeform/random.hpp"
#include "qdeform/table.hpp"
#include "quadrature.hpp"

namespace qdeform {
namespace {

constexpr std::size_t kIdentityTuples = 10000;
constexpr std::size_t kPropertyTuples = 1000;
constexpr double kMargin = 0.05;

class CaseList {
 public:
  void add(std::string name, double metric, double tolerance) {
    const bool pass = !std::isnan(metric) && metric <= tolerance;
    cases_.push_back({std::move(name), metric, tolerance, pass});
  }

  std::vector<CaseResult> take() { return std::move(cases_); }

 private:
  std::vector<CaseResult> cases_;
};

EntropicIndex draw_q(Rng& rng, double lo = 0.1, double hi = 2.9) {
  if (rng.chance(0.05)) return EntropicIndex(1.0);
  return EntropicIndex(rng.uniform(lo, hi));
}

// Argument in [lo, hi) whose bracket clears kMargin.
double draw_argument(Rng& rng, EntropicIndex q, double lo, double hi) {
  for (;;) {
    const double x = rng.uniform(lo, hi);
    if (q.classical() || q_exp_bracket(q, x) >= kMargin) return x;
  }
}

bool bracket_ok(EntropicIndex q, double x) {
  return q.classical() || q_exp_bracket(q, x) >= kMargin;
}

// Largest relative step increase along a sequence that should not grow;
// <= 0 when it never grows.
double max_growth(const std::vector<double>& errs) {
  double worst = -1.0;
  for (std::size_t i = 1; i < errs.size(); ++i) {
    worst = std::max(worst, (errs[i] - errs[i - 1]) / errs[i - 1]);
  }
  return std::max(worst, 0.0) == 0.0 ? 0.0 : worst;
}

std::string q_label(double q) { return "q=" + format_real(q); }

// ---------------------------------------------------------------------------

void identities(Rng& rng, CaseList& cases, VerificationReport& report) {
  double round_trip = 0.0, inverse = 0.0, law = 0.0, commute = 0.0, assoc = 0.0, ratio = 0.0,
         shift = 0.0, log_ratio = 0.0, drift = 0.0;

  for (std::size_t i = 0; i < kIdentityTuples; ++i) {
    const EntropicIndex q = draw_q(rng);
    const double x = draw_argument(rng, q, -5.0, 5.0);
    round_trip = std::max(round_trip, round_trip_check(QDomainPoint(q, x)) / std::max(1.0, std::abs(x)));

    const double y = rng.log_uniform(0.01, 100.0);
    inverse = std::max(inverse, relative_error(q_exp(q, q_log(q, y)), y));
  }

  for (std::size_t i = 0; i < kIdentityTuples; ++i) {
    const EntropicIndex q = draw_q(rng);
    double x1, x2;
    do {
      x1 = rng.uniform(-3.0, 3.0);
      x2 = rng.uniform(-3.0, 3.0);
    } while (!bracket_ok(q, x1) || !bracket_ok(q, x2) || !bracket_ok(q, x1 + x2));
    law = std::max(law, q_exp_law_check(q, x1, x2));
  }

  for (std::size_t i = 0; i < kIdentityTuples; ++i) {
    const EntropicIndex q = draw_q(rng);
    double l1, l2, l3;
    do {
      l1 = rng.uniform(-2.0, 2.0);
      l2 = rng.uniform(-2.0, 2.0);
      l3 = rng.uniform(-2.0, 2.0);
    } while (!bracket_ok(q, l1) || !bracket_ok(q, l2) || !bracket_ok(q, l3) ||
             !bracket_ok(q, l1 + l2) || !bracket_ok(q, l2 + l3) || !bracket_ok(q, l1 + l2 + l3) ||
             !bracket_ok(q, l1 - l2));
    const double x = q_exp(q, l1), y = q_exp(q, l2), z = q_exp(q, l3);
    const double xy = q_product(q, x, y);
    commute = std::max(commute, relative_error(q_product(q, y, x), xy));
    assoc = std::max(assoc, relative_error(q_product(q, xy, z), q_product(q, x, q_product(q, y, z))));
    ratio = std::max(ratio, relative_error(q_ratio(q, xy, y), x));
  }

  for (std::size_t i = 0; i < kIdentityTuples; ++i) {
    const EntropicIndex q = draw_q(rng);
    double c, x;
    do {
      c = rng.uniform(-3.0, 3.0);
      x = rng.uniform(-3.0, 3.0);
    } while (!bracket_ok(q, c) || !bracket_ok(q, x + c));
    const ScalePair s = shift_expansion(q, c);
    const double whole = q_exp(q, x + c);
    shift = std::max(shift, relative_error(s.y_scale * q_exp(q, x / s.x_scale), whole));
  }

  for (std::size_t i = 0; i < kIdentityTuples; ++i) {
    const EntropicIndex q = draw_q(rng);
    const double y = rng.log_uniform(0.1, 10.0);
    const double x = rng.log_uniform(0.1, 10.0);
    log_ratio = std::max(log_ratio, scaled_error(q_log_of_ratio(q, y, x), q_log(q, y / x)));
  }

  for (std::size_t i = 0; i < kPropertyTuples; ++i) {
    const EntropicIndex q = draw_q(rng);
    const auto n = static_cast<std::size_t>(rng.integer(1, 8));
    std::vector<double> shifts;
    double partial = 0.0;
    while (shifts.size() < n) {
      const double s = rng.uniform(-1.0, 1.0);
      if (!bracket_ok(q, partial + s)) continue;
      shifts.push_back(s);
      partial += s;
    }
    const ObservationSequence seq = scale_drift_expand(q, shifts);
    drift = std::max(drift, relative_error(drifted_product(q, seq), q_exp(q, compensated_sum(shifts))));
  }

  double continuity = 0.0;
  for (double q : {1.0 - 1e-6, 1.0 + 1e-6}) {
    for (const double x : Grid{-5.0, 5.0, 1001}.values()) {
      continuity = std::max(continuity, relative_error(q_exp(EntropicIndex(q), x), std::exp(x)));
    }
  }

  double monotone_violations = 0.0;
  for (double qv : {0.3, 0.5, 1.0, 1.3, 1.7, 2.0, 2.5}) {
    const EntropicIndex q(qv);
    double prev = -INFINITY;
    for (const double y : Grid{0.01, 100.0, 1000}.values()) {
      const double v = q_log(q, y);
      if (!(v > prev)) monotone_violations += 1.0;
      prev = v;
    }
  }

  cases.add("round_trip", round_trip, 1e-12);
  cases.add("inverse_pair", inverse, 1e-12);
  cases.add("q_exp_law", law, 1e-12);
  cases.add("q_product_commutativity", commute, 1e-12);
  cases.add("q_product_associativity", assoc, 1e-12);
  cases.add("q_ratio_inverse", ratio, 1e-12);
  cases.add("shift_expansion", shift, 1e-12);
  cases.add("log_of_ratio", log_ratio, 1e-12);
  cases.add("drift_product", drift, 1e-10);
  cases.add("continuity_at_one", continuity, 1e-4);
  cases.add("q_log_monotone", monotone_violations, 0.0);
  report.metadata.emplace_back("identities.tuples", static_cast<double>(kIdentityTuples));
}

// ---------------------------------------------------------------------------

void dynamics(Rng& rng, CaseList& cases, VerificationReport& report) {
  const EntropicIndex q13(1.3);
  const Trajectory decay = integrate_ode(q13, InitialCondition(0.0, 1.0), Direction::decay, 5.0, 1e-3);
  cases.add("rk4_vs_analytic_q=1.3", max_deviation_from_analytic(decay), 1e-6);

  const Trajectory blow = integrate_ode(EntropicIndex(2.0), InitialCondition(0.0, 1.0),
                                        Direction::growth, 0.5, 1e-3);
  cases.add("rk4_vs_analytic_q=2", max_deviation_from_analytic(blow), 1e-6);

  const std::vector<double> scales{1.0, 10.0, 20.0};
  for (double c : scales) {
    cases.add("rescaling_invariance_C=" + format_real(c),
              rescaling_invariance_residual(q13, c, Direction::decay, 5.0, 1e-3), 1e-4);
  }

  double ic_err = 0.0, shift = 0.0, composed = 0.0;
  for (std::size_t i = 0; i < kPropertyTuples; ++i) {
    const EntropicIndex q = draw_q(rng);
    const double x0 = rng.uniform(-1.0, 1.0);
    const double y0 = rng.log_uniform(0.1, 10.0);
    if (!bracket_ok(q, q_log(q, y0) - x0)) continue;
    const RescaleFactor c0 = rescale_factor(q, InitialCondition(x0, y0));
    ic_err = std::max(ic_err, scaled_error(q_log(q, c0.value()), q_log(q, y0) - x0));
  }
  for (std::size_t i = 0; i < kPropertyTuples; ++i) {
    const EntropicIndex q = draw_q(rng);
    double c, x;
    do {
      c = rng.uniform(-3.0, 3.0);
      x = rng.uniform(-3.0, 3.0);
    } while (!bracket_ok(q, c) || !bracket_ok(q, x + c));
    const ScalePair s = shift_expansion(q, c);
    shift = std::max(shift, relative_error(s.y_scale * q_exp(q, x / s.x_scale), q_exp(q, x + c)));
  }
  for (std::size_t i = 0; i < kPropertyTuples; ++i) {
    const EntropicIndex q = draw_q(rng);
    double c1, c2, x;
    do {
      c1 = rng.uniform(-2.0, 2.0);
      c2 = rng.uniform(-2.0, 2.0);
      x = rng.uniform(-2.0, 2.0);
    } while (!bracket_ok(q, c1) || !bracket_ok(q, c2) ||
             !bracket_ok(q, x + composed_shift_equivalent(q, c1, c2)));
    const ScalePair s = compose_shifts(q, c1, c2);
    const double whole = q_exp(q, x + composed_shift_equivalent(q, c1, c2));
    composed = std::max(composed, relative_error(s.y_scale * q_exp(q, x / s.x_scale), whole));
  }
  cases.add("initial_condition_scale", ic_err, 1e-12);
  cases.add("shift_expansion_identity", shift, 1e-12);
  cases.add("composed_shift_equivalence", composed, 1e-12);

  const FigureTable fig = fig2_data();
  const std::size_t per_curve = fig.rows.size() / scales.size();
  double identical = 0.0, affine = 0.0;
  for (std::size_t i = 0; i < fig.rows.size(); ++i) {
    const FigureRow& row = fig.rows[i];
    const FigureRow& base = fig.rows[i % per_curve];
    identical = std::max(identical, relative_error(row.y_rescaled, base.y_rescaled));
    affine = std::max(affine, scaled_error(q_log(fig.q, row.y_raw), row.qlog_y));
  }
  cases.add("fig2_rescaled_identity", identical, 1e-12);
  cases.add("fig2_qlog_affine", affine, 1e-9);

  report.metadata.emplace_back("dynamics.q", 1.3);
  for (double c : scales) report.metadata.emplace_back("dynamics.C", c);
}

// ---------------------------------------------------------------------------

std::vector<double> random_probabilities(Rng& rng, std::size_t k) {
  std::vector<double> w(k);
  for (double& v : w) v = -std::log(1.0 - rng.unit());
  const double total = compensated_sum(w);
  for (double& v : w) v /= total;
  return w;
}

void stirling(Rng& rng, CaseList& cases, VerificationReport& report) {
  const std::vector<std::uint64_t> ns{10, 100, 1000, 10000};
  for (double qv : {0.5, 1.0, 1.5, 2.0, 2.5}) {
    const EntropicIndex q(qv);
    std::vector<double> errs;
    for (auto n : ns) {
      const double exact = q_log_factorial(q, n);
      errs.push_back(relative_error(q_stirling(q, n), exact));
    }
    cases.add("stirling_error_nonincreasing_" + q_label(qv), max_growth(errs), 0.0);
  }

  const std::vector<std::vector<std::uint64_t>> ratios{{1, 1}, {1, 2, 3}};
  const std::vector<std::uint64_t> totals{60, 600, 6000, 60000};
  auto scaled_counts = [](const std::vector<std::uint64_t>& ratio, std::uint64_t n) {
    std::uint64_t parts = 0;
    for (auto r : ratio) parts += r;
    std::vector<std::uint64_t> counts;
    for (auto r : ratio) counts.push_back(r * n / parts);
    return CountVector(counts);
  };
  for (double qv : {0.5, 1.0, 1.5}) {
    for (const auto& ratio : ratios) {
      std::vector<double> errs;
      for (auto n : totals) errs.push_back(tsallis_correspondence(EntropicIndex(qv), scaled_counts(ratio, n)).rel_err);
      cases.add("correspondence_decreasing_" + q_label(qv) + "_k=" + std::to_string(ratio.size()),
                max_growth(errs), 0.0);
    }
  }
  for (const auto& ratio : ratios) {
    std::vector<double> errs;
    for (auto n : totals) errs.push_back(tsallis_correspondence_q2(scaled_counts(ratio, n)).rel_err);
    cases.add("correspondence_decreasing_q=2_k=" + std::to_string(ratio.size()), max_growth(errs), 0.0);
  }

  double limit = 0.0;
  for (std::size_t i = 0; i < kPropertyTuples; ++i) {
    const ProbabilityVector p(random_probabilities(rng, 10));
    const double shannon = tsallis_entropy(EntropicIndex(1.0), p);
    for (double qv : {1.0 - 1e-6, 1.0 + 1e-6}) {
      limit = std::max(limit, std::abs(tsallis_entropy(EntropicIndex(qv), p) - shannon));
    }
  }
  cases.add("entropy_limit_at_one", limit, 1e-4);

  double excess = 0.0, uniform_value = 0.0;
  for (double qv : {0.5, 1.0, 1.5, 2.0, 2.5}) {
    const EntropicIndex q(qv);
    for (std::size_t k : {2u, 5u, 10u}) {
      const double top = tsallis_entropy(q, ProbabilityVector::uniform(k));
      uniform_value = std::max(uniform_value, scaled_error(top, q_log(q, static_cast<double>(k))));
      for (std::size_t i = 0; i < kPropertyTuples; ++i) {
        const ProbabilityVector p(random_probabilities(rng, k));
        excess = std::max(excess, tsallis_entropy(q, p) - top);
      }
    }
  }
  cases.add("uniform_maximality", std::max(excess, 0.0), 1e-12);
  cases.add("uniform_value_is_lnq_k", uniform_value, 1e-12);
  report.metadata.emplace_back("stirling.max_n", 10000.0);
  report.metadata.emplace_back("correspondence.max_n", 60000.0);
}

// ---------------------------------------------------------------------------

void mlp(Rng& rng, CaseList& cases, VerificationReport& report) {
  constexpr double a_q = -0.5;
  constexpr double c_q = 0.5;
  constexpr std::size_t sets = 100;
  for (double qv : {0.5, 1.3, 1.7}) {
    const QGaussianModel model(EntropicIndex(qv), a_q, c_q);
    double worst_ratio = 0.0;
    double non_negative = 0.0;
    for (std::size_t s = 0; s < sets; ++s) {
      const auto n = static_cast<std::size_t>(rng.integer(2, 30));
      std::vector<double> xs(n);
      for (double& x : xs) x = rng.uniform(-1.0, 1.0);
      const SampleSet samples(std::move(xs));
      const Stationarity st = mlp_stationarity(model, samples);
      if (!(st.curvature < 0.0)) non_negative += 1.0;
      worst_ratio = std::max(worst_ratio, std::abs(st.grad_at_mean) / (std::abs(st.curvature) * st.scale));
    }
    cases.add("stationarity_at_mean_" + q_label(qv), worst_ratio, 1e-6);
    cases.add("curvature_negative_" + q_label(qv), non_negative, 0.0);
    report.metadata.emplace_back("mlp.q", qv);
    report.metadata.emplace_back("mlp.scale_c", model.scale());
  }

  double quad = 0.0;
  double ode = 0.0;
  for (double qv : {0.5, 1.0, 1.3, 1.7, 2.5}) {
    const QGaussianModel model(EntropicIndex(qv), a_q, c_q);
    const EntropicIndex q = model.q();
    const std::vector<double> es = Grid{-1.0, 1.0, 201}.values();
    std::vector<double> lnf;
    for (double e : es) lnf.push_back(q_log(q, q_gaussian_pdf(model, e)));
    const double ref = lnf[2] - 2.0 * lnf[1] + lnf[0];
    for (std::size_t i = 1; i + 1 < lnf.size(); ++i) {
      quad = std::max(quad, relative_error(lnf[i + 1] - 2.0 * lnf[i] + lnf[i - 1], ref));
    }
    for (double e : es) {
      const double budget = 1e-5 * std::abs(model.a() * e) + 1e-8;
      ode = std::max(ode, std::abs(defining_ode_residual(model, e)) / budget);
    }
  }
  cases.add("lnq_density_quadratic", quad, 1e-6);
  cases.add("defining_ode_residual_budget", ode, 1.0);

  double z_err = 0.0, mass = 0.0;
  for (double qv : {0.0, 0.5, 1.0, 1.5, 2.0, 2.5}) {
    for (double beta : {0.5, 1.0, 2.0}) {
      const double z = normalization(EntropicIndex(qv), beta);
      const double exact = normalization_closed_form(qv, beta);
      z_err = std::max(z_err, std::abs(z - exact));
      // Whole line folded onto [0, 1) by e = t / (1 - t); shares nothing with the panel scheme.
      const QGaussianModel model(EntropicIndex(qv), -2.0 * beta, 0.0);
      auto folded = [&](double t) {
        const double s = 1.0 - t;
        return q_gaussian_pdf(model, t / s) / (s * s);
      };
      const double total = 2.0 * detail::integrate(folded, 0.0, 1.0).value;
      mass = std::max(mass, std::abs(total - 1.0));
    }
  }
  cases.add("normalization_vs_closed_form", z_err, 1e-10);
  cases.add("pdf_total_mass", mass, 1e-8);

  const FigureTable fig = fig3_data();
  const std::size_t per_curve = fig.rows.size() / 3;
  double identical = 0.0, quadratic = 0.0;
  for (std::size_t i = 0; i < fig.rows.size(); ++i) {
    const FigureRow& row = fig.rows[i];
    identical = std::max(identical, relative_error(row.y_rescaled, fig.rows[i % per_curve].y_rescaled));
    quadratic = std::max(quadratic, scaled_error(q_log(fig.q, row.y_raw),
                                                 -row.x_raw * row.x_raw + q_log(fig.q, row.scale)));
  }
  cases.add("fig3_rescaled_identity", identical, 1e-12);
  cases.add("fig3_qlog_quadratic", quadratic, 1e-9);
  report.metadata.emplace_back("fig3.q", 1.7);
}

// ---------------------------------------------------------------------------

void canonical(Rng& rng, CaseList& cases, VerificationReport& report) {
  constexpr double q15 = 1.5;
  constexpr double c = 1.0;
  constexpr std::size_t splits = 100;
  std::vector<double> xs(10);
  for (double& x : xs) x = rng.uniform(0.0, 5.0);

  const UniquenessReport u = verify_uniqueness(EntropicIndex(q15), xs, c, splits, rng);
  cases.add("split_probability_invariance", u.max_probability_deviation, 1e-12);
  cases.add("canonical_form_unique", static_cast<double>(u.distinct_canonical_forms) - 1.0, 0.0);
  cases.add("exp_representations_distinct",
            static_cast<double>(splits) - static_cast<double>(u.distinct_parameterizations), 0.0);
  cases.add("splits_accepted", static_cast<double>(splits - u.accepted), 0.0);

  Rng classical_rng(rng.next());
  const UniquenessReport u1 = verify_uniqueness(EntropicIndex(1.0), xs, c, 20, classical_rng);
  cases.add("q=1_parameterizations_collapse", static_cast<double>(u1.distinct_parameterizations) - 1.0, 0.0);

  double reproduce = 0.0, printed = 0.0;
  // Shifts keep -x + shift inside the domain for every x in [0, 5].
  for (const auto& [qv, shift] : {std::pair{1.0, c}, {1.3, c}, {1.5, c}, {2.0, 0.0}, {2.5, 0.0}}) {
    const EntropicIndex q(qv);
    const DiscreteQDistribution dist = build_distribution(q, xs, shift);
    const CanonicalQLogForm form = canonical_form(dist);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double p = dist.probabilities()[i];
      reproduce = std::max(reproduce, relative_error(form.probability(xs[i]), p));
      printed = std::max(printed, scaled_error(form.q_log_probability(xs[i]), q_log(q, p)));
    }
  }
  cases.add("canonical_reproduces_probabilities", reproduce, 1e-10);
  cases.add("canonical_matches_direct_qlog", printed, 1e-10);

  double shift_free = 0.0;
  const EntropicIndex q1(1.0);
  const DiscreteQDistribution base = build_distribution(q1, xs, 0.0);
  const CanonicalQLogForm base_form = canonical_form(base);
  for (double shift : {-1.0, 0.5, 2.5}) {
    const DiscreteQDistribution d = build_distribution(q1, xs, shift);
    const CanonicalQLogForm f = canonical_form(d);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      shift_free = std::max(shift_free, relative_error(d.probabilities()[i], base.probabilities()[i]));
    }
    shift_free = std::max({shift_free, scaled_error(f.slope, base_form.slope),
                           scaled_error(f.intercept, base_form.intercept)});
  }
  cases.add("q=1_shift_independence", shift_free, 1e-12);

  const std::vector<double> worked_xs{0.0, 1.0};
  const DiscreteQDistribution worked = build_distribution(EntropicIndex(2.0), worked_xs, 0.0);
  const CanonicalQLogForm wf = canonical_form(worked);
  const double worked_err =
      std::max({std::abs(worked.probabilities()[0] - 2.0 / 3.0),
                std::abs(worked.probabilities()[1] - 1.0 / 3.0), std::abs(wf.slope + 1.5),
                std::abs(wf.intercept + 0.5)});
  cases.add("worked_example_q=2", worked_err, 1e-14);

  report.metadata.emplace_back("canonical.q", q15);
  report.metadata.emplace_back("canonical.c", c);
  report.metadata.emplace_back("canonical.splits", static_cast<double>(splits));
}

using SuiteFn = void (*)(Rng&, CaseList&, VerificationReport&);

SuiteFn suite_fn(Suite s) {
  switch (s) {
    case Suite::identities: return identities;
    case Suite::dynamics: return dynamics;
    case Suite::stirling: return stirling;
    case Suite::mlp: return mlp;
    case Suite::canonical: return canonical;
    case Suite::all: break;
  }
  throw std::logic_error("suite has no single runner");
}

}  // namespace

bool VerificationReport::pass() const noexcept {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::identities, Suite::dynamics, Suite::stirling, Suite::mlp,
                  Suite::canonical, Suite::all}) {
    if (suite_name(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::identities: return "identities";
    case Suite::dynamics: return "dynamics";
    case Suite::stirling: return "stirling";
    case Suite::mlp: return "mlp";
    case Suite::canonical: return "canonical";
    case Suite::all: return "all";
  }
  return "unknown";
}

VerificationReport run_suite(Suite suite, std::uint64_t seed) {
  VerificationReport report;
  report.suite = std::string(suite_name(suite));
  report.seed = seed;

  std::vector<Suite> parts;
  if (suite == Suite::all) {
    parts = {Suite::identities, Suite::dynamics, Suite::stirling, Suite::mlp, Suite::canonical};
  } else {
    parts = {suite};
  }
  for (Suite part : parts) {
    // Each suite gets its own stream so `all` reproduces the single-suite cases.
    Rng rng(seed);
    CaseList cases;
    suite_fn(part)(rng, cases, report);
    for (CaseResult& c : cases.take()) {
      if (suite == Suite::all) c.name = std::string(suite_name(part)) + "/" + c.name;
      report.cases.push_back(std::move(c));
    }
  }
  return report;
}

double normalization_closed_form(double q, double beta) {
  constexpr double pi = std::numbers::pi;
  if (q < 1.0) {
    const double m = 1.0 / (1.0 - q);
    return std::sqrt(pi / (beta * (1.0 - q))) * std::exp(std::lgamma(m + 1.0) - std::lgamma(m + 1.5));
  }
  if (q == 1.0) return std::sqrt(pi / beta);
  if (q < 3.0) {
    const double p = 1.0 / (q - 1.0);
    return std::sqrt(pi / (beta * (q - 1.0))) * std::exp(std::lgamma(p - 0.5) - std::lgamma(p));
  }
  throw UnnormalizableModel("closed form requires q < 3");
}

}  // namespace qdeform
