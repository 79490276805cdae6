#pragma once

#include "radixforge/digit_word.hpp"
#include "radixforge/schedule.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace radixforge {

/// Closed interval of all values whose digits start with `digits`:
/// [digits(0), digits(s-1)], of length s^-rank.
struct Cylinder {
  int base = 2;
  std::vector<Digit> digits;
  Rational lower;
  Rational upper;

  [[nodiscard]] std::size_t rank() const { return digits.size(); }
  [[nodiscard]] Rational length() const { return upper - lower; }
  [[nodiscard]] bool contains(const Rational& x) const { return lower <= x && x <= upper; }
};

/// s-adic cylinder with the given base digits.
Cylinder cylinder_interval(const std::vector<Digit>& digits, int base);
/// Pseudo cylinder of a schedule; the rank must be a block boundary.
Cylinder cylinder_interval(const std::vector<Digit>& digits, const OperatorSchedule& schedule);

/// The s children of rank+1, left to right.
std::vector<Cylinder> children(const Cylinder& cylinder);
/// The s^k children at the next block boundary, in lexicographic order of
/// the appended block.
std::vector<Cylinder> children(const Cylinder& cylinder, const OperatorSchedule& schedule);

/// Pseudo cylinder f(c) whose base is the blockwise image of c's base.
Cylinder image_of_cylinder(const Cylinder& cylinder, const OperatorSchedule& schedule);

/// Union of disjoint closed intervals plus isolated points outside them.
struct ImageSet {
  std::vector<std::pair<Rational, Rational>> intervals;
  std::vector<Rational> points;
  Rational measure;
  /// The interval resolved into cylinders at the requested depth. Otherwise
  /// `intervals` is the image of the inner cover, `measure` its length, and
  /// `outer_measure` the length of the image of the outer cover.
  bool exact = true;
  Rational inner_measure;
  Rational outer_measure;
};

/// Greedy cover of [a,b] by maximal s-adic cylinders whose ranks are block
/// boundaries <= depth. Requires a and b to be multiples of s^-depth.
std::vector<Cylinder> cylinder_cover(const Rational& a, const Rational& b,
                                     const OperatorSchedule& schedule, std::size_t depth);

/// f([a,b]) resolved at `depth`, which must be a block boundary.
ImageSet image_of_interval(const Rational& a, const Rational& b,
                           const OperatorSchedule& schedule, std::size_t depth);

enum class Arrangement { LeftToRight, RightToLeft, Mixed };

struct AdjacencyProfile {
  std::size_t rank = 0;
  /// image_position[j]: left-to-right position of the image of the j-th
  /// rank-n cylinder (inputs in left-to-right order).
  std::vector<std::size_t> image_position;
  Arrangement arrangement = Arrangement::LeftToRight;
};

/// Placement of the s^n rank-n pseudo cylinders; n must be a block boundary.
AdjacencyProfile adjacency_profile(const OperatorSchedule& schedule, std::size_t rank);

/// Limit on s^rank for exhaustive enumerations over cylinders.
inline constexpr std::size_t kMaxEnumeration = std::size_t{1} << 22;

/// All rank-n digit tuples in lexicographic order. Throws past kMaxEnumeration.
std::vector<std::vector<Digit>> all_prefixes(int base, std::size_t rank);

}  // namespace radixforge
