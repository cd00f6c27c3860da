#include "qdeform/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "qdeform/numeric.hpp"
#include "qdeform/random.hpp"
#include "qdeform/table.hpp"

namespace qdeform {
namespace {

std::vector<double> normalized(std::vector<double> w) {
  const double total = compensated_sum(w);
  for (double& v : w) v /= total;
  return w;
}

// exp_q((-x_i + shift) / unit) for every x_i, normalized.
std::vector<double> rescaled_representation(EntropicIndex q, std::span<const double> xs,
                                            double shift, double unit) {
  std::vector<double> w;
  w.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    try {
      w.push_back(q_exp(q, (-xs[i] + shift) / unit));
    } catch (const DomainViolation& e) {
      throw DomainViolation("representation undefined at x[" + std::to_string(i) + "]",
                            e.constraint(), i);
    }
  }
  return normalized(std::move(w));
}

double sub_shift_unit(EntropicIndex q, double c) {
  const double bracket = q_exp_bracket(q, c);
  if (!(bracket > 0.0)) {
    throw DomainViolation("sub-shift " + format_real(c) + " outside the q-exponential domain",
                          bracket);
  }
  return q.classical() ? 1.0 : bracket;
}

}  // namespace

DiscreteQDistribution build_distribution(EntropicIndex q, std::span<const double> xs, double c) {
  if (xs.empty()) throw std::invalid_argument("distribution needs at least one data point");
  DiscreteQDistribution dist(q, c);
  dist.xs_.assign(xs.begin(), xs.end());
  dist.frequencies_.reserve(xs.size());
  CompensatedSum total;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double arg = -xs[i] + c;
    if (!in_q_exp_domain(q, arg)) {
      throw DomainViolation("frequency undefined for x[" + std::to_string(i) +
                                "] = " + format_real(xs[i]),
                            q_exp_bracket(q, arg), i);
    }
    const double n_i = q_exp(q, arg);
    if (!(n_i > 0.0)) {
      throw DomainViolation("frequency underflows to zero for x[" + std::to_string(i) + "]",
                            q_exp_bracket(q, arg), i);
    }
    dist.frequencies_.push_back(n_i);
    total.add(n_i);
  }
  dist.total_ = total.value();
  dist.probabilities_.reserve(xs.size());
  for (double n_i : dist.frequencies_) dist.probabilities_.push_back(n_i / dist.total_);
  return dist;
}

SplitProbabilities split_representation(EntropicIndex q, std::span<const double> xs, double c1,
                                        double c2) {
  const double unit1 = sub_shift_unit(q, c1);
  const double unit2 = sub_shift_unit(q, c2);
  return {rescaled_representation(q, xs, c2, unit1), rescaled_representation(q, xs, c1, unit2)};
}

CanonicalQLogForm canonical_form(const DiscreteQDistribution& dist) {
  const EntropicIndex q = dist.q();
  const double n = dist.total();
  const double t = q.classical() ? 1.0 : std::pow(n, -q.deformation());
  return {q, -t, t * dist.shift() - q_log(q.dual(), n)};
}

std::pair<double, double> feasible_split_interval(EntropicIndex q, double c) {
  double lo = 0.0;
  double hi = 0.0;
  const double d = q.deformation();
  if (q.classical()) {
    const double half = std::max(1.0, std::abs(c));
    lo = 0.5 * c - half;
    hi = 0.5 * c + half;
  } else if (d > 0.0) {
    lo = -1.0 / d;
    hi = c + 1.0 / d;
  } else {
    lo = c + 1.0 / d;
    hi = -1.0 / d;
  }
  if (!(hi > lo)) {
    throw DomainViolation("no split of c = " + format_real(c) + " keeps both sub-shifts valid",
                          hi - lo);
  }
  const double margin = 0.01 * (hi - lo);
  return {lo + margin, hi - margin};
}

UniquenessReport verify_uniqueness(EntropicIndex q, std::span<const double> xs, double c,
                                   std::size_t n_splits, Rng& rng) {
  const DiscreteQDistribution reference = build_distribution(q, xs, c);
  const auto& p_ref = reference.probabilities();
  const auto [lo, hi] = feasible_split_interval(q, c);

  UniquenessReport report;
  report.requested = n_splits;
  report.canonical = canonical_form(reference);

  std::set<std::pair<double, double>> parameterizations;
  std::set<std::pair<double, double>> forms;
  const std::size_t max_draws = 100 * n_splits + 100;
  for (std::size_t draw = 0; draw < max_draws && report.accepted < n_splits; ++draw) {
    const double c1 = rng.uniform(lo, hi);
    const double c2 = c - c1;
    if (c1 + c2 != c) {
      ++report.rejected;
      continue;
    }
    SplitProbabilities split;
    CanonicalQLogForm form;
    try {
      split = split_representation(q, xs, c1, c2);
      form = canonical_form(build_distribution(q, xs, c1 + c2));
    } catch (const DomainViolation&) {
      ++report.domain_failures;
      continue;
    }
    for (std::size_t i = 0; i < p_ref.size(); ++i) {
      report.max_probability_deviation =
          std::max({report.max_probability_deviation, relative_error(split.first[i], p_ref[i]),
                    relative_error(split.second[i], p_ref[i])});
    }
    parameterizations.emplace(sub_shift_unit(q, c1), sub_shift_unit(q, c2));
    forms.emplace(form.slope, form.intercept);
    ++report.accepted;
  }
  report.distinct_parameterizations = parameterizations.size();
  report.distinct_canonical_forms = forms.size();
  return report;
}

}  // namespace qdeform
