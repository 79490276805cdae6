#include "radixforge/representations.hpp"

#include <stdexcept>

namespace radixforge {

namespace {

// Digits [begin, begin + op.length()) of `digits` rewritten through `op`.
void apply_block(const BlockOp& op, const std::vector<Digit>& digits, std::size_t begin,
                 std::vector<Digit>& out) {
  const auto k = static_cast<std::size_t>(op.length());
  std::vector<Digit> tuple(digits.begin() + static_cast<std::ptrdiff_t>(begin),
                           digits.begin() + static_cast<std::ptrdiff_t>(begin + k));
  const auto image = op.apply(tuple);
  out.insert(out.end(), image.begin(), image.end());
}

void check_base(const DigitWord& word, const OperatorSchedule& schedule) {
  if (word.base() != schedule.base()) {
    throw std::invalid_argument("word base " + std::to_string(word.base()) +
                                " does not match schedule base " +
                                std::to_string(schedule.base()));
  }
}

}  // namespace

SignPattern odd_positions() { return SignPattern{{}, {true, false}}; }
SignPattern all_positions() { return SignPattern{{}, {true}}; }
SignPattern no_positions() { return SignPattern{{}, {false}}; }

DigitWord transform(const DigitWord& word, const OperatorSchedule& schedule) {
  check_base(word, schedule);
  // Output preperiod A = K0 + c*Kp >= |pre|; beyond A the digit stream and the
  // block pattern repeat jointly with period lcm(|per|, Kp).
  const std::size_t k0 = schedule.prefix_digits();
  const std::size_t kp = schedule.period_digits();
  std::size_t start = k0;
  if (word.pre().size() > k0) {
    start = k0 + ((word.pre().size() - k0 + kp - 1) / kp) * kp;
  }
  const std::size_t length = std::lcm(word.per().size(), kp);
  const std::vector<Digit> digits = word.digits().prefix(start + length);

  std::vector<Digit> out;
  out.reserve(digits.size());
  for (std::size_t n = 0, pos = 0; pos < digits.size(); ++n) {
    const BlockOp& op = schedule.block(n);
    apply_block(op, digits, pos, out);
    pos += static_cast<std::size_t>(op.length());
  }
  std::vector<Digit> pre(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(start));
  std::vector<Digit> per(out.begin() + static_cast<std::ptrdiff_t>(start), out.end());
  return DigitWord(word.base(), std::move(pre), std::move(per));
}

DigitWord inverse_transform(const DigitWord& word, const OperatorSchedule& schedule) {
  return transform(word, schedule.inverse());
}

std::vector<Digit> transform_prefix(const std::vector<Digit>& digits,
                                    const OperatorSchedule& schedule) {
  if (!schedule.is_boundary(digits.size())) {
    throw std::invalid_argument("rank " + std::to_string(digits.size()) +
                                " is not a block boundary of the schedule");
  }
  std::vector<Digit> out;
  out.reserve(digits.size());
  for (std::size_t n = 0, pos = 0; pos < digits.size(); ++n) {
    const BlockOp& op = schedule.block(n);
    apply_block(op, digits, pos, out);
    pos += static_cast<std::size_t>(op.length());
  }
  return out;
}

Rational pseudo_value(const Rational& x, const OperatorSchedule& schedule) {
  return evaluate(transform(expand(x, schedule.base()), schedule));
}

namespace {

ImagePoint image_point(const DigitWord& preimage, const OperatorSchedule& schedule) {
  ImagePoint point{transform(preimage, schedule), 0, false};
  point.value = evaluate(point.word);
  const auto& per = point.word.per();
  point.pseudo_rational =
      per.size() == 1 && (per[0] == 0 || per[0] == point.word.base() - 1);
  return point;
}

}  // namespace

PointClassification classify_point(const Rational& x, const OperatorSchedule& schedule) {
  const DigitWord word = expand(x, schedule.base());
  PointClassification result;
  result.preimages.push_back(word);
  if (auto dual = dual_form(word)) {
    result.kind = PointKind::SAdicRational;
    result.preimages.push_back(*dual);
  }
  for (const DigitWord& w : result.preimages) result.images.push_back(image_point(w, schedule));
  result.equal = result.images.front().value == result.images.back().value;
  return result;
}

DigitWord flip_positions(const DigitWord& word, const SignPattern& pattern) {
  if (pattern.per.empty()) throw std::invalid_argument("sign pattern period must be nonempty");
  const Alignment align = Alignment{}.include(word.digits()).include(pattern);
  EventuallyPeriodic<Digit> digits = word.digits().realigned(align.start, align.length);
  const int top = word.base() - 1;
  for (std::size_t n = 0; n < digits.pre.size(); ++n) {
    if (pattern.at(n)) digits.pre[n] = top - digits.pre[n];
  }
  for (std::size_t n = 0; n < digits.per.size(); ++n) {
    if (pattern.at(align.start + n)) digits.per[n] = top - digits.per[n];
  }
  return DigitWord(word.base(), std::move(digits)).minimized();
}

Rational nega_value(const DigitWord& word) {
  const int s = word.base();
  return evaluate(flip_positions(word, odd_positions())) - Rational(BigInt(s), BigInt(s + 1));
}

std::pair<Rational, Rational> quasi_bounds(int base, const SignPattern& pattern) {
  if (pattern.per.empty()) throw std::invalid_argument("sign pattern period must be nonempty");
  // a'_0 = -sum_{n in N_B} (s-1)/s^n, the negated value of the indicator word.
  EventuallyPeriodic<Digit> indicator;
  for (const bool b : pattern.pre) indicator.pre.push_back(b ? base - 1 : 0);
  for (const bool b : pattern.per) indicator.per.push_back(b ? base - 1 : 0);
  const Rational lower = -evaluate(DigitWord(base, std::move(indicator)));
  return {lower, lower + 1};
}

Rational quasi_nega_value(const DigitWord& word, const SignPattern& pattern) {
  return evaluate(flip_positions(word, pattern)) + quasi_bounds(word.base(), pattern).first;
}

DigitWord quasi_nega_expand(const Rational& x, int base, const SignPattern& pattern) {
  const auto [lower, upper] = quasi_bounds(base, pattern);
  if (x < lower || x > upper) {
    throw std::invalid_argument("x = " + to_string(x) + " outside [" + to_string(lower) +
                                ", " + to_string(upper) + "]");
  }
  return flip_positions(expand(x - lower, base), pattern);
}

Rational cantor_value(const EventuallyPeriodic<Digit>& digits,
                      const EventuallyPeriodic<int>& bases,
                      const std::optional<SignPattern>& signs) {
  if (digits.per.empty() || bases.per.empty() || (signs && signs->per.empty())) {
    throw std::invalid_argument("Cantor series inputs need nonempty periods");
  }
  Alignment align = Alignment{}.include(digits).include(bases);
  if (signs) align.include(*signs);

  auto term = [&](std::size_t n) {
    const int q = bases.at(n);
    const Digit eps = digits.at(n);
    if (q < 2) throw std::invalid_argument("Cantor base q_n must be >= 2");
    if (eps < 0 || eps >= q) {
      throw std::invalid_argument("digit " + std::to_string(eps) + " at position " +
                                  std::to_string(n + 1) + " not below q_n = " +
                                  std::to_string(q));
    }
    return std::pair<int, int>{(signs && signs->at(n)) ? -eps : eps, q};
  };

  Rational scale = 1;  // 1 / (q_1 ... q_n)
  Rational head = 0;
  for (std::size_t n = 0; n < align.start; ++n) {
    const auto [eps, q] = term(n);
    scale /= q;
    head += eps * scale;
  }
  // One aligned period contributes `cycle`; later periods repeat it scaled by r.
  const Rational entry_scale = scale;
  Rational cycle = 0;
  for (std::size_t n = align.start; n < align.start + align.length; ++n) {
    const auto [eps, q] = term(n);
    scale /= q;
    cycle += eps * scale;
  }
  const Rational ratio = scale / entry_scale;
  Rational value = head + cycle / (1 - ratio);
  value.canonicalize();
  return value;
}

}  // namespace radixforge
