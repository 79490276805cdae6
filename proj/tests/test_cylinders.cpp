#include "support.hpp"

#include "radixforge/cylinders.hpp"
#include "radixforge/fixtures.hpp"
#include "radixforge/representations.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

namespace rf = radixforge;

namespace {

rf::Rational q(const char* text) { return rf::parse_rational(text); }

rf::OperatorSchedule theta() { return rf::OperatorSchedule::constant(rf::fixtures::ternary_swap_op()); }

// Random boundary rank in [1, limit], falling back to the first boundary.
std::size_t random_boundary(rf::testing::Random& r, const rf::OperatorSchedule& sch, std::size_t limit) {
  const auto b = sch.boundaries_up_to(limit);
  if (b.empty()) return sch.boundary_at_or_after(1);
  return b[static_cast<std::size_t>(r.uniform(0, static_cast<int>(b.size()) - 1))];
}

}  // namespace

TEST(Cylinder, Endpoints) {
  const auto c = rf::cylinder_interval({0, 0, 2}, 3);
  EXPECT_EQ(c.lower, q("2/27"));
  EXPECT_EQ(c.upper, q("1/9"));
  EXPECT_EQ(c.length(), q("1/27"));
  const auto root = rf::cylinder_interval({}, 2);
  EXPECT_EQ(root.lower, 0);
  EXPECT_EQ(root.upper, 1);
  EXPECT_THROW(rf::cylinder_interval({3}, 3), std::invalid_argument);
}

TEST(Cylinder, ChildrenTileParent) {
  rf::testing::Random r(41);
  for (int i = 0; i < 100; ++i) {
    const int s = r.uniform(2, 5);
    std::vector<rf::Digit> digits(static_cast<std::size_t>(r.uniform(0, 5)));
    for (auto& d : digits) d = r.uniform(0, s - 1);
    const auto parent = rf::cylinder_interval(digits, s);
    const auto kids = rf::children(parent);
    ASSERT_EQ(kids.size(), static_cast<std::size_t>(s));
    EXPECT_EQ(kids.front().lower, parent.lower);
    EXPECT_EQ(kids.back().upper, parent.upper);
    for (std::size_t j = 1; j < kids.size(); ++j) EXPECT_EQ(kids[j - 1].upper, kids[j].lower);
  }
}

TEST(Cylinder, PseudoCylindersPartitionUnitInterval) {
  rf::testing::Random r(42);
  for (int i = 0; i < 40; ++i) {
    const int s = r.uniform(2, 3);
    const auto sch = rf::testing::random_schedule(r, s, 2);
    const std::size_t rank = random_boundary(r, sch, s == 2 ? 8 : 5);
    std::vector<rf::Cylinder> cyl;
    for (const auto& p : rf::all_prefixes(s, rank)) cyl.push_back(rf::cylinder_interval(p, sch));
    std::sort(cyl.begin(), cyl.end(), [](const auto& a, const auto& b) { return a.lower < b.lower; });
    EXPECT_EQ(cyl.front().lower, 0);
    EXPECT_EQ(cyl.back().upper, 1);
    for (std::size_t j = 1; j < cyl.size(); ++j) ASSERT_EQ(cyl[j - 1].upper, cyl[j].lower);
    for (const auto& c : cyl) ASSERT_EQ(c.length(), rf::inverse_power(static_cast<std::uint64_t>(s), rank));
  }
}

TEST(Cylinder, ImageIsCylinderOfSameLength) {
  rf::testing::Random r(43);
  for (int i = 0; i < 60; ++i) {
    const int s = r.uniform(2, 3);
    const auto sch = rf::testing::random_schedule(r, s, 2);
    const std::size_t rank = random_boundary(r, sch, 6);
    std::vector<rf::Digit> digits(rank);
    for (auto& d : digits) d = r.uniform(0, s - 1);
    const auto c = rf::cylinder_interval(digits, s);
    const auto image = rf::image_of_cylinder(c, sch);
    EXPECT_EQ(image.length(), c.length());
    EXPECT_EQ(image.digits, rf::transform_prefix(digits, sch));
    // Sampled interior points land inside the image.
    for (int j = 1; j < 8; ++j) {
      const rf::Rational x = c.lower + c.length() * rf::Rational(j) / 8;
      ASSERT_TRUE(image.contains(rf::pseudo_value(x, sch)));
    }
  }
}

TEST(Image, TernaryExample) {
  const auto image = rf::image_of_interval(q("2/27"), q("4/27"), theta(), 3);
  ASSERT_TRUE(image.exact);
  ASSERT_EQ(image.intervals.size(), 2U);
  EXPECT_EQ(image.intervals[0], std::make_pair(q("1/27"), q("2/27")));
  EXPECT_EQ(image.intervals[1], std::make_pair(q("6/27"), q("7/27")));
  EXPECT_EQ(image.points, (std::vector<rf::Rational>{q("5/54"), q("8/27")}));
  EXPECT_EQ(image.measure, q("2/27"));
}

TEST(Image, CylinderImages) {
  const auto sch = theta();
  EXPECT_EQ(rf::image_of_cylinder(rf::cylinder_interval({0, 0, 2}, 3), sch).digits,
            (std::vector<rf::Digit>{0, 0, 1}));
  EXPECT_EQ(rf::image_of_cylinder(rf::cylinder_interval({0, 1, 0}, 3), sch).digits,
            (std::vector<rf::Digit>{0, 2, 0}));
}

TEST(Image, MeasurePreservation) {
  rf::testing::Random r(44);
  for (int i = 0; i < 100; ++i) {
    const int s = r.uniform(2, 3);
    const auto sch = rf::testing::random_schedule(r, s, 2);
    const std::size_t depth = random_boundary(r, sch, 6);
    const auto grid = rf::testing::small_pow(static_cast<std::uint64_t>(s), depth);
    auto a = static_cast<std::uint64_t>(r.uniform64(0, grid));
    auto b = static_cast<std::uint64_t>(r.uniform64(0, grid));
    while (a == b) b = static_cast<std::uint64_t>(r.uniform64(0, grid));
    if (a > b) std::swap(a, b);
    const rf::Rational unit = rf::inverse_power(static_cast<std::uint64_t>(s), depth);
    const rf::Rational lo = rf::Rational(rf::BigInt(static_cast<unsigned long>(a))) * unit;
    const rf::Rational hi = rf::Rational(rf::BigInt(static_cast<unsigned long>(b))) * unit;
    const auto image = rf::image_of_interval(lo, hi, sch, depth);
    ASSERT_TRUE(image.exact);
    ASSERT_EQ(image.measure, hi - lo);
    rf::Rational total = 0;
    for (const auto& [x, y] : image.intervals) total += y - x;
    ASSERT_EQ(total, image.measure);

    // Off-grid endpoints: the inner and outer covers bracket the length.
    rf::Rational u = rf::testing::random_rational(r, 97), v = rf::testing::random_rational(r, 97);
    while (u == v) v = rf::testing::random_rational(r, 97);
    if (u > v) std::swap(u, v);
    const auto rough = rf::image_of_interval(u, v, sch, depth);
    if (rough.exact) {
      ASSERT_EQ(rough.measure, v - u);
    } else {
      ASSERT_LE(rough.inner_measure, v - u);
      ASSERT_GE(rough.outer_measure, v - u);
      ASSERT_LE(rough.outer_measure - rough.inner_measure, 2 * unit);
    }
  }
  EXPECT_THROW(rf::image_of_interval(q("1/2"), q("1/4"), theta(), 2), std::invalid_argument);
}

TEST(Adjacency, MatchesSortedImages) {
  const auto id = rf::adjacency_profile(rf::OperatorSchedule::identity(2), 3);
  EXPECT_EQ(id.arrangement, rf::Arrangement::LeftToRight);
  const auto nega = rf::adjacency_profile(rf::fixtures::nega_binary_schedule(), 1);
  EXPECT_EQ(nega.arrangement, rf::Arrangement::RightToLeft);
  EXPECT_EQ(rf::adjacency_profile(rf::fixtures::nega_binary_schedule(), 2).arrangement,
            rf::Arrangement::Mixed);

  rf::testing::Random r(45);
  for (int i = 0; i < 40; ++i) {
    const int s = r.uniform(2, 3);
    const auto sch = rf::testing::random_schedule(r, s, 2);
    const std::size_t rank = random_boundary(r, sch, 6);
    const auto profile = rf::adjacency_profile(sch, rank);
    std::vector<rf::Rational> lows;
    for (const auto& p : rf::all_prefixes(s, rank)) {
      lows.push_back(rf::image_of_cylinder(rf::cylinder_interval(p, s), sch).lower);
    }
    std::vector<std::size_t> order(lows.size());
    std::iota(order.begin(), order.end(), 0U);
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return lows[x] < lows[y]; });
    std::vector<std::size_t> position(lows.size());
    for (std::size_t j = 0; j < order.size(); ++j) position[order[j]] = j;
    ASSERT_EQ(profile.image_position, position);
    bool increasing = true, decreasing = true;
    for (std::size_t j = 0; j < position.size(); ++j) {
      increasing = increasing && position[j] == j;
      decreasing = decreasing && position[j] == position.size() - 1 - j;
    }
    const auto expected = increasing   ? rf::Arrangement::LeftToRight
                          : decreasing ? rf::Arrangement::RightToLeft
                                       : rf::Arrangement::Mixed;
    ASSERT_EQ(profile.arrangement, expected);
  }
}
