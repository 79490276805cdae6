#include "support.hpp"

#include "radixforge/analysis.hpp"
#include "radixforge/cylinders.hpp"
#include "radixforge/fixtures.hpp"
#include "radixforge/representations.hpp"

#include <gtest/gtest.h>

namespace rf = radixforge;

namespace {

rf::Rational q(const char* text) { return rf::parse_rational(text); }

rf::ProbabilityModel model(std::initializer_list<const char*> p) {
  std::vector<rf::Rational> v;
  for (const char* t : p) v.push_back(q(t));
  return rf::ProbabilityModel(v);
}

rf::ProbabilityModel random_model(rf::testing::Random& r, int base) {
  std::vector<rf::Rational> w;
  rf::Rational total = 0;
  for (int i = 0; i < base; ++i) {
    w.emplace_back(r.uniform(1, 9));
    total += w.back();
  }
  for (auto& x : w) x /= total;
  return rf::ProbabilityModel(w);
}

}  // namespace

TEST(Continuity, WorkedExamples) {
  const auto ex11 = rf::OperatorSchedule::constant(rf::fixtures::example_pair_op());
  const auto half = rf::continuity_classify(q("1/2"), ex11);
  EXPECT_FALSE(half.continuous);
  EXPECT_EQ(half.jump, q("2/3"));
  // 0(1) maps to 1(10) and 1(0) to 0(01).
  EXPECT_EQ(half.left_limit, q("5/6"));
  EXPECT_EQ(half.right_limit, q("1/6"));

  // Left form 0(2) maps to 0(1) = 1/6, right form 1(0) maps to 2(0) = 2/3.
  const auto theta = rf::OperatorSchedule::constant(rf::fixtures::ternary_swap_op());
  const auto third = rf::continuity_classify(q("1/3"), theta);
  EXPECT_EQ(third.jump, q("1/2"));
  EXPECT_EQ(third.left_limit, q("1/6"));
  EXPECT_EQ(third.right_limit, q("2/3"));

  EXPECT_TRUE(rf::continuity_classify(q("1/3"), ex11).continuous);
  EXPECT_TRUE(rf::continuity_classify(q("0"), ex11).continuous);
  EXPECT_TRUE(rf::continuity_classify(q("1"), ex11).continuous);
  EXPECT_THROW(rf::continuity_classify(q("3/2"), ex11), std::invalid_argument);
}

TEST(Continuity, IdentityAndComplementEverywhere) {
  for (const auto& sch : {rf::OperatorSchedule::identity(2), rf::OperatorSchedule::complement(2),
                          rf::OperatorSchedule::identity(3, 2)}) {
    for (int j = 0; j <= 81; ++j) {
      EXPECT_TRUE(rf::continuity_classify(rf::Rational(j) / 81, sch).continuous);
    }
    for (int j = 0; j <= 64; ++j) {
      EXPECT_TRUE(rf::continuity_classify(rf::Rational(j) / 64, sch).continuous);
    }
  }
}

TEST(Continuity, LimitsMatchNearbyPoints) {
  rf::testing::Random r(51);
  for (int i = 0; i < 60; ++i) {
    const auto sch = rf::testing::random_schedule(r, 2, 2);
    const rf::Rational x = rf::Rational(r.uniform(1, 31)) / 32;
    const auto rep = rf::continuity_classify(x, sch);
    // Points within 2^-40 of x agree with the one-sided limits to within 2^-30.
    const rf::Rational eps = rf::inverse_power(2, 40);
    EXPECT_LE(rf::testing::abs(rf::pseudo_value(x - eps, sch) - rep.left_limit), rf::inverse_power(2, 30));
    EXPECT_LE(rf::testing::abs(rf::pseudo_value(x + eps, sch) - rep.right_limit), rf::inverse_power(2, 30));
  }
}

TEST(JumpBound, NonStrictBoundHolds) {
  rf::testing::Random r(52);
  for (int i = 0; i < 60; ++i) {
    const auto sch = rf::testing::random_schedule(r, 2, 3);
    for (int j = 1; j < 64; ++j) {
      const rf::Rational x = rf::Rational(j) / 64;
      const auto bound = rf::jump_bound(x, sch);
      ASSERT_TRUE(bound);
      ASSERT_LE(rf::continuity_classify(x, sch).jump, *bound);
    }
  }
  EXPECT_FALSE(rf::jump_bound(q("1/3"), rf::OperatorSchedule::identity(2)));
}

TEST(JumpBound, StrictBoundFailsOnFirstBlock) {
  const rf::OperatorSchedule sch(2, {rf::BlockOp::complement(2, 1)}, {rf::BlockOp::identity(2, 1)});
  const auto rep = rf::continuity_classify(q("1/2"), sch);
  EXPECT_EQ(rep.jump, 1);
  EXPECT_EQ(rf::jump_bound(q("1/2"), sch), rf::Rational(1));
}

TEST(Monotonicity, Classes) {
  EXPECT_EQ(rf::monotonicity_scan(rf::OperatorSchedule::identity(2), 4).kind,
            rf::Monotonicity::StrictlyIncreasing);
  EXPECT_EQ(rf::monotonicity_scan(rf::OperatorSchedule::complement(2), 4).kind,
            rf::Monotonicity::StrictlyDecreasing);
  const rf::OperatorSchedule tail_identity(
      2, {rf::fixtures::example_pair_op()}, {rf::BlockOp::identity(2, 1)});
  EXPECT_EQ(rf::monotonicity_scan(tail_identity, 4).kind, rf::Monotonicity::PiecewiseMonotone);

  const auto ex11 = rf::OperatorSchedule::constant(rf::fixtures::example_pair_op());
  const auto rep = rf::monotonicity_scan(ex11, 4);
  EXPECT_EQ(rep.kind, rf::Monotonicity::NonMonotone);
  ASSERT_TRUE(rep.witness);
  const auto& [x1, x2, x3] = *rep.witness;
  ASSERT_LT(x1, x2);
  ASSERT_LT(x2, x3);
  const auto y1 = rf::pseudo_value(x1, ex11), y2 = rf::pseudo_value(x2, ex11), y3 = rf::pseudo_value(x3, ex11);
  EXPECT_FALSE((y1 < y2 && y2 < y3) || (y1 > y2 && y2 > y3));
}

TEST(Distance, Counterexamples) {
  const auto theta = rf::OperatorSchedule::constant(rf::fixtures::ternary_swap_op());
  EXPECT_EQ(rf::pseudo_value(q("4/9"), theta) - rf::pseudo_value(q("1/3"), theta), q("2/9"));
  const auto pair = rf::distance_counterexample(theta, 2);
  ASSERT_TRUE(pair);
  EXPECT_NE(rf::testing::abs(rf::pseudo_value(pair->second, theta) - rf::pseudo_value(pair->first, theta)),
            rf::testing::abs(pair->second - pair->first));
  EXPECT_FALSE(rf::distance_counterexample(rf::OperatorSchedule::identity(2), 6));
  EXPECT_FALSE(rf::distance_counterexample(rf::OperatorSchedule::complement(2), 6));
  EXPECT_FALSE(rf::distance_counterexample(rf::OperatorSchedule::complement(3, 2), 4));
}

TEST(Distance, AgreesWithMonotonicity) {
  rf::testing::Random r(53);
  for (int i = 0; i < 60; ++i) {
    const int s = r.uniform(2, 3);
    const auto sch = rf::testing::random_schedule(r, s, 2);
    const std::size_t rank = sch.boundary_at_or_after(sch.prefix_digits() + sch.period_digits());
    const auto kind = rf::monotonicity_scan(sch, rank).kind;
    const bool strict = kind == rf::Monotonicity::StrictlyIncreasing ||
                        kind == rf::Monotonicity::StrictlyDecreasing;
    EXPECT_EQ(!rf::distance_counterexample(sch, rank).has_value(), strict);
  }
}

TEST(Integral, ExhaustiveEqualsClosedForm) {
  EXPECT_EQ(rf::partition_integral(rf::OperatorSchedule::identity(2), 1), q("1/4"));
  EXPECT_EQ(rf::partition_integral(rf::OperatorSchedule::identity(2), 3), q("7/16"));
  // Identity at K=2: cylinder infima 0, 1/4, 1/2, 3/4 each weighted 1/4.
  EXPECT_EQ(rf::partition_integral(rf::OperatorSchedule::identity(2), 2), q("3/8"));
  rf::testing::Random r(54);
  for (int i = 0; i < 20; ++i) {
    const auto sch = rf::testing::random_schedule(r, 2, 3);
    for (std::size_t n = 1; sch.block_start(n) <= 12; ++n) {
      const std::size_t k = sch.block_start(n);
      ASSERT_EQ(rf::partition_integral(sch, n), rf::partition_integral_closed_form(2, k));
    }
  }
  EXPECT_EQ(rf::partition_integral_closed_form(2, 5), q("31/64"));
}

TEST(Salem, UniformIsIdentity) {
  const auto uniform = model({"1/2", "1/2"});
  for (int j = 0; j <= 256; ++j) {
    const rf::Rational x = rf::Rational(j) / 256;
    EXPECT_EQ(rf::distribution_function(x, uniform), x);
  }
  EXPECT_EQ(rf::distribution_function(q("1/3"), uniform), q("1/3"));
  EXPECT_EQ(rf::distribution_function(q("1/3"), model({"1/3", "1/3", "1/3"})), q("1/3"));
}

TEST(Salem, KnownValues) {
  const auto p = model({"1/4", "3/4"});
  EXPECT_EQ(rf::distribution_function(q("1/2"), p), q("1/4"));
  EXPECT_EQ(rf::distribution_function(q("0"), p), 0);
  EXPECT_EQ(rf::distribution_function(q("1"), p), 1);
  EXPECT_EQ(rf::distribution_function(q("-1"), p), 0);
  EXPECT_EQ(rf::distribution_function(q("2"), p), 1);
  // 1/4 = 0.01: a_0 + a_1 * p_0 = 1/4 * 1/4.
  EXPECT_EQ(rf::distribution_function(q("1/4"), p), q("1/16"));
  EXPECT_EQ(rf::distribution_function(q("3/4"), p), q("7/16"));
}

TEST(Salem, SeriesMatchesPartialSums) {
  rf::testing::Random r(55);
  for (int i = 0; i < 200; ++i) {
    const int s = r.uniform(2, 3);
    const auto p = random_model(r, s);
    const auto w = rf::testing::random_word(r, s, 4, 4);
    rf::Rational sum = 0, weight = 1;
    for (std::size_t n = 0; n < 60; ++n) {
      sum += p.offset(n, w.at(n)) * weight;
      weight *= p.probability(n, w.at(n));
    }
    const rf::Rational exact = rf::salem_series(w, p);
    ASSERT_GE(exact, sum);
    ASSERT_LE(exact - sum, weight);
  }
}

TEST(Salem, MonotoneOnGrid) {
  rf::testing::Random r(56);
  for (int i = 0; i < 10; ++i) {
    const int s = r.uniform(2, 3);
    const auto p = random_model(r, s);
    rf::Rational prev = -1;
    for (int j = 0; j <= 1024; ++j) {
      const rf::Rational f = rf::distribution_function(rf::Rational(j) / 1024, p);
      ASSERT_GE(f, prev);
      prev = f;
    }
  }
}

TEST(Salem, PerPositionProbabilities) {
  rf::EventuallyPeriodic<std::vector<rf::Rational>> seq;
  seq.pre = {{q("1/3"), q("2/3")}};
  seq.per = {{q("1/2"), q("1/2")}, {q("1/4"), q("3/4")}};
  const rf::ProbabilityModel p(seq);
  EXPECT_EQ(rf::distribution_function(q("1/2"), p), q("1/3"));
  EXPECT_EQ(rf::distribution_function(q("1"), p), 1);
  rf::Rational prev = -1;
  for (int j = 0; j <= 128; ++j) {
    const auto f = rf::distribution_function(rf::Rational(j) / 128, p);
    ASSERT_GE(f, prev);
    prev = f;
  }
  EXPECT_THROW(rf::ProbabilityModel(std::vector<rf::Rational>{q("1/2"), q("1/3")}), std::invalid_argument);
}

TEST(Salem, DegenerateProbabilities) {
  // A period of certain digits has ratio 1 but only zero offsets.
  const auto p = model({"0", "1"});
  EXPECT_EQ(rf::salem_series(rf::parse_word("2:(0)"), p), 0);
  EXPECT_EQ(rf::salem_series(rf::parse_word("2:(1)"), p), 0);
  EXPECT_EQ(rf::salem_series(rf::parse_word("3:2(1)"), model({"0", "1", "0"})), 1);
  EXPECT_EQ(rf::distribution_function(q("1/2"), model({"1", "0"})), 1);
}

TEST(SalemType, TwoPathsAgree) {
  rf::testing::Random r(57);
  const auto complement = rf::OperatorSchedule::complement(2);
  EXPECT_EQ(rf::salem_type(q("0"), model({"1/4", "3/4"}), complement), 1);
  for (int i = 0; i < 200; ++i) {
    const int s = r.uniform(2, 3);
    const auto sch = rf::testing::random_schedule(r, s, 2);
    const auto p = random_model(r, s);
    const rf::Rational x = rf::testing::random_rational(r, 100);
    const rf::Rational by_value = rf::salem_type(x, p, sch);
    const rf::Rational by_digits = rf::salem_series(rf::transform(rf::expand(x, s), sch), p);
    ASSERT_EQ(by_value, by_digits) << x;
    ASSERT_EQ(rf::salem_type(x, model(s == 2 ? std::initializer_list<const char*>{"1/2", "1/2"}
                                              : std::initializer_list<const char*>{"1/3", "1/3", "1/3"}),
                             sch),
              rf::pseudo_value(x, sch));
  }
  const auto id = rf::OperatorSchedule::identity(2);
  const auto p = model({"1/4", "3/4"});
  EXPECT_EQ(rf::salem_type(q("3/8"), p, id), rf::distribution_function(q("3/8"), p));
}
