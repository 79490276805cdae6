#pragma once

#include "radixforge/digit_word.hpp"
#include "radixforge/schedule.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace radixforge {

/// Membership word of N_B: position n (0-based here, n+1 in 1-based terms)
/// carries a minus sign iff the entry is true.
using SignPattern = EventuallyPeriodic<bool>;

/// Odd 1-based positions: the nega-s-adic pattern.
SignPattern odd_positions();
SignPattern all_positions();
SignPattern no_positions();

/// Blockwise image of the digit word under the schedule (pseudo-s-adic
/// digits). The result is structurally minimized but not canonicalized.
DigitWord transform(const DigitWord& word, const OperatorSchedule& schedule);

/// Blockwise inverse images.
DigitWord inverse_transform(const DigitWord& word, const OperatorSchedule& schedule);

/// Image of a finite digit prefix whose length is a block boundary.
std::vector<Digit> transform_prefix(const std::vector<Digit>& digits,
                                    const OperatorSchedule& schedule);

/// f(x): value of the transformed canonical expansion of x.
Rational pseudo_value(const Rational& x, const OperatorSchedule& schedule);

enum class PointKind { SAdicRational, SAdicIrrational };

struct ImagePoint {
  DigitWord word;
  Rational value;
  /// The image word ends in period (0) or (s-1).
  bool pseudo_rational = false;
};

/// Outcome of the two-representation case split. For s-adic rationals
/// `images` holds the image of the terminating form, then of the (s-1)-tailed
/// form; otherwise it holds the single image.
struct PointClassification {
  PointKind kind = PointKind::SAdicIrrational;
  std::vector<DigitWord> preimages;
  std::vector<ImagePoint> images;
  /// Both images have the same value (always true for single images).
  bool equal = true;
};

PointClassification classify_point(const Rational& x, const OperatorSchedule& schedule);

/// Replaces the digit at every position in the pattern by s-1-digit.
DigitWord flip_positions(const DigitWord& word, const SignPattern& pattern);

/// sum alpha_n / (-s)^n.
Rational nega_value(const DigitWord& word);

/// sum (-1)^{rho_n} alpha_n / s^n with the minus sign on N_B.
Rational quasi_nega_value(const DigitWord& word, const SignPattern& pattern);

/// Range [a'_0, a''_0] of the quasi-nega-s-adic representation.
std::pair<Rational, Rational> quasi_bounds(int base, const SignPattern& pattern);

/// A digit word whose quasi-nega value is x.
DigitWord quasi_nega_expand(const Rational& x, int base, const SignPattern& pattern);

/// Positive Cantor series sum eps_n / (q_1 ... q_n), optionally with the minus
/// sign on the positions of `signs`.
Rational cantor_value(const EventuallyPeriodic<Digit>& digits,
                      const EventuallyPeriodic<int>& bases,
                      const std::optional<SignPattern>& signs = std::nullopt);

}  // namespace radixforge
