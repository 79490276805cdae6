#pragma once

#include "radixforge/periodic.hpp"
#include "radixforge/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace radixforge {

using Digit = int;

/// Eventually periodic s-adic digit word
///   x = sum_{n>=1} digit_n / s^n.
/// Only structural validity is enforced on construction; canonical form is
/// produced by `canonicalize` and `expand`.
class DigitWord {
 public:
  DigitWord() = default;
  /// Throws std::invalid_argument if base < 2, the period is empty, or a
  /// digit is outside {0, ..., base-1}.
  DigitWord(int base, std::vector<Digit> pre, std::vector<Digit> per);
  DigitWord(int base, EventuallyPeriodic<Digit> digits);

  [[nodiscard]] int base() const { return base_; }
  [[nodiscard]] const std::vector<Digit>& pre() const { return digits_.pre; }
  [[nodiscard]] const std::vector<Digit>& per() const { return digits_.per; }
  [[nodiscard]] const EventuallyPeriodic<Digit>& digits() const { return digits_; }
  [[nodiscard]] Digit at(std::size_t n) const { return digits_.at(n); }

  /// Same digit sequence with minimal preperiod and period.
  [[nodiscard]] DigitWord minimized() const;

  /// "s:pre(per)"; digits are comma separated when s > 10.
  [[nodiscard]] std::string str() const;

  bool operator==(const DigitWord&) const = default;

 private:
  int base_ = 2;
  EventuallyPeriodic<Digit> digits_{{}, {0}};
};

/// Parses the text form produced by DigitWord::str().
DigitWord parse_word(std::string_view text);

/// Canonical s-adic expansion of x in [0,1] by long division. s-adic
/// rationals get their terminating form; x = 1 gives period (s-1).
DigitWord expand(const Rational& x, int base);

/// Exact value (P + Q/(s^L - 1)) / s^M of an eventually periodic word.
Rational evaluate(const DigitWord& word);

/// The unique canonical word with the same value.
DigitWord canonicalize(const DigitWord& word);

/// The other expansion of an s-adic rational in (0,1); nothing otherwise.
std::optional<DigitWord> dual_form(const DigitWord& word);

/// True when the value has two s-adic expansions.
bool is_s_adic_rational(const Rational& x, int base);

}  // namespace radixforge
