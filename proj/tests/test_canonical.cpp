#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracle.hpp"
#include "qdeform/canonical.hpp"
#include "qdeform/numeric.hpp"
#include "qdeform/random.hpp"

namespace qdeform {
namespace {

// ln_q p_i recomputed from scratch: ln_q(n_i / n) with n_i = exp_q(c - x_i).
long double oracle_qlog_probability(long double q, const std::vector<double>& xs, long double c,
                                    std::size_t i) {
  long double n = 0.0L;
  for (double x : xs) n += oracle::q_exp(q, c - x);
  return oracle::q_log(q, oracle::q_exp(q, c - xs[i]) / n);
}

TEST(Build, WorkedExample) {
  const auto d = build_distribution(EntropicIndex(2.0), std::vector<double>{0.0, 1.0}, 0.0);
  EXPECT_EQ(d.frequencies(), (std::vector<double>{1.0, 0.5}));
  EXPECT_EQ(d.total(), 1.5);
  EXPECT_NEAR(d.probabilities()[0], 2.0 / 3.0, 1e-16);
  EXPECT_NEAR(d.probabilities()[1], 1.0 / 3.0, 1e-16);
  const CanonicalQLogForm f = canonical_form(d);
  EXPECT_EQ(f.slope, -1.5);
  EXPECT_EQ(f.intercept, -0.5);
}

TEST(Build, SingleOutcome) {
  for (double q : {0.5, 1.0, 2.0}) {
    const auto d = build_distribution(EntropicIndex(q), std::vector<double>{0.7}, 0.3);
    EXPECT_EQ(d.probabilities(), std::vector<double>{1.0});
    const CanonicalQLogForm f = canonical_form(d);
    EXPECT_NEAR(f.probability(0.7), 1.0, 1e-15);
  }
}

TEST(Build, Errors) {
  EXPECT_THROW(build_distribution(EntropicIndex(1.5), std::vector<double>{}, 0.0),
               std::invalid_argument);
  try {
    build_distribution(EntropicIndex(0.5), std::vector<double>{0.0, 1.0, 5.0}, 0.0);
    FAIL();
  } catch (const DomainViolation& e) {
    ASSERT_TRUE(e.index().has_value());
    EXPECT_EQ(*e.index(), 2u);
    EXPECT_DOUBLE_EQ(e.constraint(), -1.5);
  }
}

TEST(Build, ClassicalIndependentOfShift) {
  const std::vector<double> xs{0.2, 1.7, 3.1, 0.9};
  const auto a = build_distribution(EntropicIndex(1.0), xs, 0.0);
  const auto b = build_distribution(EntropicIndex(1.0), xs, 2.5);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    EXPECT_LT(relative_error(a.probabilities()[i], b.probabilities()[i]), 1e-15);
  }
  const auto fa = canonical_form(a), fb = canonical_form(b);
  EXPECT_EQ(fa.slope, -1.0);
  EXPECT_EQ(fb.slope, -1.0);
  EXPECT_NEAR(fa.intercept, fb.intercept, 1e-15);
}

TEST(Split, ReferenceCases) {
  const std::vector<double> xs01{0.0, 1.0};
  const auto zero = split_representation(EntropicIndex(2.0), xs01, 0.0, 0.0);
  EXPECT_NEAR(zero.first[0], 2.0 / 3.0, 1e-16);
  EXPECT_NEAR(zero.second[1], 1.0 / 3.0, 1e-16);

  const std::vector<double> xs{0.0, 1.0, 2.0};
  const EntropicIndex q(1.5);
  const auto a = split_representation(q, xs, 0.3, 0.7);
  const auto b = split_representation(q, xs, 0.9, 0.1);
  const auto ref = build_distribution(q, xs, 1.0).probabilities();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (double p : {a.first[i], a.second[i], b.first[i], b.second[i]}) {
      EXPECT_LT(relative_error(p, ref[i]), 1e-14);
    }
  }
  EXPECT_THROW(split_representation(EntropicIndex(2.0), xs, 1.5, -0.5), DomainViolation);
}

TEST(Canonical, MatchesIndependentQLog) {
  Rng rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const double q = rng.uniform(1.01, 2.9);
    std::vector<double> xs(1 + rng.integer(0, 9));
    for (double& x : xs) x = rng.uniform(0.0, 5.0);
    const double c = rng.uniform(-1.0, 1.0);
    const auto d = build_distribution(EntropicIndex(q), xs, c);
    const CanonicalQLogForm f = canonical_form(d);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const long double ref = oracle_qlog_probability(q, xs, c, i);
      ASSERT_LT(std::fabs(f.q_log_probability(xs[i]) - ref) / std::max(1.0L, std::fabs(ref)), 1e-12);
      ASSERT_LT(relative_error(f.probability(xs[i]), d.probabilities()[i]), 1e-10);
    }
  }
}

TEST(FeasibleInterval, KeepsBothSubShiftsValid) {
  for (double q : {0.3, 0.8, 1.2, 1.5, 2.5}) {
    for (double c : {-0.5, 0.0, 1.0}) {
      const EntropicIndex qi(q);
      const auto [lo, hi] = feasible_split_interval(qi, c);
      ASSERT_LT(lo, hi);
      for (double c1 : {lo, 0.5 * (lo + hi), hi}) {
        EXPECT_GT(q_exp_bracket(qi, c1), 0.0);
        EXPECT_GT(q_exp_bracket(qi, c - c1), 0.0);
      }
    }
  }
  // q < 1 with a very negative c leaves no room for two valid halves.
  EXPECT_THROW(feasible_split_interval(EntropicIndex(0.5), -5.0), DomainViolation);
  const auto [lo1, hi1] = feasible_split_interval(EntropicIndex(1.0), 4.0);
  EXPECT_DOUBLE_EQ(0.5 * (lo1 + hi1), 2.0);
}

TEST(Uniqueness, ManySplitsOneForm) {
  Rng rng(42);
  std::vector<double> xs(10);
  for (double& x : xs) x = rng.uniform(0.0, 5.0);
  const UniquenessReport r = verify_uniqueness(EntropicIndex(1.5), xs, 1.0, 100, rng);
  EXPECT_EQ(r.requested, 100u);
  EXPECT_EQ(r.accepted, 100u);
  EXPECT_EQ(r.domain_failures, 0u);
  EXPECT_LE(r.max_probability_deviation, 1e-12);
  EXPECT_EQ(r.distinct_canonical_forms, 1u);
  EXPECT_EQ(r.distinct_parameterizations, 100u);
  EXPECT_EQ(r.canonical, canonical_form(build_distribution(EntropicIndex(1.5), xs, 1.0)));
}

TEST(Uniqueness, ClassicalAndSingleSplit) {
  Rng rng(1);
  const std::vector<double> xs{0.5, 1.5, 2.0};
  const UniquenessReport classical = verify_uniqueness(EntropicIndex(1.0), xs, 0.8, 25, rng);
  EXPECT_EQ(classical.distinct_parameterizations, 1u);
  EXPECT_EQ(classical.distinct_canonical_forms, 1u);
  const UniquenessReport one = verify_uniqueness(EntropicIndex(2.0), xs, 0.2, 1, rng);
  EXPECT_EQ(one.accepted, 1u);
  EXPECT_EQ(one.distinct_canonical_forms, 1u);
}

}  // namespace
}  // namespace qdeform
