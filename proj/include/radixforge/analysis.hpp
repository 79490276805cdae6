#pragma once

#include "radixforge/digit_word.hpp"
#include "radixforge/schedule.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace radixforge {

struct ContinuityReport {
  bool continuous = true;
  /// |right limit - left limit|; zero when continuous.
  Rational jump;
  /// Limits from the left and right. At 0 only the right limit exists and at
  /// 1 only the left one; the missing side repeats f(x0).
  Rational left_limit;
  Rational right_limit;
};

/// At an s-adic rational x0 the right limit is f of the terminating form and
/// the left limit is f of the (s-1)-tailed form.
ContinuityReport continuity_classify(const Rational& x0, const OperatorSchedule& schedule);

/// Jump bound at x0 = p/s^m: s^-(k_1 + ... + k_{n-1}) where block n is the
/// block holding position m. Returns nothing for points with one expansion.
std::optional<Rational> jump_bound(const Rational& x0, const OperatorSchedule& schedule);

enum class Monotonicity { StrictlyIncreasing, StrictlyDecreasing, PiecewiseMonotone, NonMonotone };

struct MonotonicityReport {
  Monotonicity kind = Monotonicity::StrictlyIncreasing;
  /// x1 < x2 < x3 whose images are not monotone, when one was found.
  std::optional<std::array<Rational, 3>> witness;
};

/// Classifies f from the schedule tail, and for non-monotone schedules scans
/// cylinder midpoints at every block boundary <= rank for a witness triple.
MonotonicityReport monotonicity_scan(const OperatorSchedule& schedule, std::size_t rank);

/// Points x1 < x2 among the cylinder endpoints at block boundaries <= rank with
/// |f(x2) - f(x1)| != x2 - x1.
std::optional<std::pair<Rational, Rational>> distance_counterexample(
    const OperatorSchedule& schedule, std::size_t rank);

/// Exhaustive partition sum over the rank-K cylinders, K = k_1 + ... + k_n:
/// sum of inf f(cylinder) * s^-K.
Rational partition_integral(const OperatorSchedule& schedule, std::size_t blocks);

/// (s^K - 1) / (2 s^K).
Rational partition_integral_closed_form(int base, std::size_t rank);

/// Digit probabilities p_0..p_{s-1}, constant or per position (eventually
/// periodic). Each vector sums to 1.
class ProbabilityModel {
 public:
  explicit ProbabilityModel(std::vector<Rational> constant);
  explicit ProbabilityModel(EventuallyPeriodic<std::vector<Rational>> per_position);

  [[nodiscard]] int base() const { return base_; }
  [[nodiscard]] const EventuallyPeriodic<std::vector<Rational>>& vectors() const { return p_; }
  [[nodiscard]] const Rational& probability(std::size_t position, Digit digit) const;
  /// a_i = p_0 + ... + p_{i-1} at the given position.
  [[nodiscard]] const Rational& offset(std::size_t position, Digit digit) const;

 private:
  int base_;
  EventuallyPeriodic<std::vector<Rational>> p_;
  EventuallyPeriodic<std::vector<Rational>> a_;
};

/// a_{b_1} + sum_{n>=2} a_{b_n} prod_{j<n} p_{b_j} over the digits of `word`,
/// summed exactly with a telescoped periodic tail.
Rational salem_series(const DigitWord& word, const ProbabilityModel& p);

/// F_eta(x): 0 below 0, 1 at and above 1, the series on x's digits otherwise.
Rational distribution_function(const Rational& x, const ProbabilityModel& p);

/// F_eta with the digits taken from the pseudo digits of x under `schedule`.
Rational distribution_function(const Rational& x, const ProbabilityModel& p,
                               const OperatorSchedule& schedule);

/// f_D = F_eta o f.
Rational salem_type(const Rational& x, const ProbabilityModel& p,
                    const OperatorSchedule& schedule);

}  // namespace radixforge
