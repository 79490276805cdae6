#include "radixforge/analysis.hpp"

#include "radixforge/cylinders.hpp"
#include "radixforge/representations.hpp"

#include <stdexcept>

namespace radixforge {

namespace {

void require_unit_interval(const Rational& x) {
  if (x < 0 || x > 1) throw std::invalid_argument("x must lie in [0,1]");
}

void require_boundary(const OperatorSchedule& schedule, std::size_t rank) {
  if (!schedule.is_boundary(rank)) {
    throw std::invalid_argument("rank " + std::to_string(rank) +
                                " is not a block boundary of the schedule");
  }
}

// Largest block boundary <= limit.
std::size_t boundary_at_or_below(const OperatorSchedule& schedule, std::size_t limit) {
  return schedule.block_start(schedule.block_containing(limit));
}

Rational abs_value(const Rational& x) { return x < 0 ? Rational(-x) : x; }

}  // namespace

ContinuityReport continuity_classify(const Rational& x0, const OperatorSchedule& schedule) {
  require_unit_interval(x0);
  const DigitWord word = expand(x0, schedule.base());
  ContinuityReport report;
  report.right_limit = evaluate(transform(word, schedule));
  report.left_limit = report.right_limit;
  if (auto dual = dual_form(word)) {
    report.left_limit = evaluate(transform(*dual, schedule));
  }
  report.jump = abs_value(report.right_limit - report.left_limit);
  report.continuous = report.jump == 0;
  return report;
}

std::optional<Rational> jump_bound(const Rational& x0, const OperatorSchedule& schedule) {
  if (!is_s_adic_rational(x0, schedule.base())) return std::nullopt;
  // The last nonzero digit of the terminating form sits at 0-based m-1.
  const std::size_t m = expand(x0, schedule.base()).pre().size();
  const std::size_t start = schedule.block_start(schedule.block_containing(m - 1));
  return inverse_power(static_cast<std::uint64_t>(schedule.base()), start);
}

MonotonicityReport monotonicity_scan(const OperatorSchedule& schedule, std::size_t rank) {
  require_boundary(schedule, rank);
  MonotonicityReport report;
  if (schedule.all_identity()) {
    report.kind = Monotonicity::StrictlyIncreasing;
    return report;
  }
  if (schedule.all_complement()) {
    report.kind = Monotonicity::StrictlyDecreasing;
    return report;
  }
  // Beyond the preperiod f acts on every rank-K0 cylinder as x -> x or as a
  // reflection when the tail is uniform.
  if (schedule.period_all_identity() || schedule.period_all_complement()) {
    report.kind = Monotonicity::PiecewiseMonotone;
    return report;
  }
  report.kind = Monotonicity::NonMonotone;
  const int s = schedule.base();
  for (const std::size_t r : schedule.boundaries_up_to(rank)) {
    const Rational half_width = inverse_power(static_cast<std::uint64_t>(s), r) / 2;
    std::vector<Rational> xs;
    std::vector<Rational> ys;
    for (const auto& digits : all_prefixes(s, r)) {
      xs.push_back(cylinder_interval(digits, s).lower + half_width);
      ys.push_back(pseudo_value(xs.back(), schedule));
      const std::size_t n = ys.size();
      if (n < 3) continue;
      const auto& y1 = ys[n - 3];
      const auto& y2 = ys[n - 2];
      const auto& y3 = ys[n - 1];
      if ((y1 < y2 && y2 > y3) || (y1 > y2 && y2 < y3)) {
        report.witness = std::array<Rational, 3>{xs[n - 3], xs[n - 2], xs[n - 1]};
        return report;
      }
    }
  }
  return report;
}

std::optional<std::pair<Rational, Rational>> distance_counterexample(
    const OperatorSchedule& schedule, std::size_t rank) {
  require_boundary(schedule, rank);
  const int s = schedule.base();
  const std::size_t finest = boundary_at_or_below(schedule, rank);
  // Grid j / s^R holds every endpoint of rank <= R.
  const auto count = all_prefixes(s, finest).size();
  const Rational unit = inverse_power(static_cast<std::uint64_t>(s), finest);
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (std::size_t j = 0; j <= count; ++j) {
    xs.push_back(Rational(BigInt(static_cast<unsigned long>(j))) * unit);
    ys.push_back(pseudo_value(xs.back(), schedule));
  }
  // On a line, a map preserving the distances to two distinct pivots is an
  // isometry of the whole grid, so checking the pivots suffices.
  for (std::size_t pivot = 0; pivot < 2 && pivot < xs.size(); ++pivot) {
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (abs_value(ys[j] - ys[pivot]) != abs_value(xs[j] - xs[pivot])) {
        return std::pair{xs[std::min(j, pivot)], xs[std::max(j, pivot)]};
      }
    }
  }
  return std::nullopt;
}

Rational partition_integral(const OperatorSchedule& schedule, std::size_t blocks) {
  if (blocks < 1) throw std::invalid_argument("partition integral needs at least one block");
  const std::size_t rank = schedule.block_start(blocks);
  const int s = schedule.base();
  // inf f(cylinder) = I / s^K where I spells the image base.
  BigInt sum = 0;
  for (const auto& digits : all_prefixes(s, rank)) {
    BigInt image = 0;
    for (const Digit d : transform_prefix(digits, schedule)) image = image * s + d;
    sum += image;
  }
  Rational result(sum, ipow(static_cast<std::uint64_t>(s), 2 * rank));
  result.canonicalize();
  return result;
}

Rational partition_integral_closed_form(int base, std::size_t rank) {
  const BigInt total = ipow(static_cast<std::uint64_t>(base), rank);
  Rational result(total - 1, 2 * total);
  result.canonicalize();
  return result;
}

namespace {

std::vector<Rational> checked_vector(std::vector<Rational> p, std::size_t expected_size) {
  if (p.size() < 2) throw std::invalid_argument("probability vector needs at least 2 entries");
  if (expected_size != 0 && p.size() != expected_size) {
    throw std::invalid_argument("probability vectors must all have the same length");
  }
  Rational sum = 0;
  for (const Rational& v : p) {
    if (v < 0 || v > 1) throw std::invalid_argument("probability " + to_string(v) + " outside [0,1]");
    sum += v;
  }
  if (sum != 1) throw std::invalid_argument("probabilities sum to " + to_string(sum) + ", not 1");
  return p;
}

std::vector<Rational> offsets(const std::vector<Rational>& p) {
  std::vector<Rational> a(p.size());
  for (std::size_t i = 1; i < p.size(); ++i) a[i] = a[i - 1] + p[i - 1];
  return a;
}

}  // namespace

ProbabilityModel::ProbabilityModel(std::vector<Rational> constant)
    : ProbabilityModel(EventuallyPeriodic<std::vector<Rational>>{{}, {std::move(constant)}}) {}

ProbabilityModel::ProbabilityModel(EventuallyPeriodic<std::vector<Rational>> per_position)
    : base_(0), p_(std::move(per_position)) {
  if (p_.per.empty()) throw std::invalid_argument("probability schedule period must be nonempty");
  std::size_t size = 0;
  for (auto* seq : {&p_.pre, &p_.per}) {
    for (auto& v : *seq) {
      v = checked_vector(std::move(v), size);
      size = v.size();
      if (seq == &p_.pre) a_.pre.push_back(offsets(v));
      else a_.per.push_back(offsets(v));
    }
  }
  base_ = static_cast<int>(size);
}

const Rational& ProbabilityModel::probability(std::size_t position, Digit digit) const {
  return p_.at(position).at(static_cast<std::size_t>(digit));
}

const Rational& ProbabilityModel::offset(std::size_t position, Digit digit) const {
  return a_.at(position).at(static_cast<std::size_t>(digit));
}

Rational salem_series(const DigitWord& word, const ProbabilityModel& p) {
  if (word.base() != p.base()) {
    throw std::invalid_argument("word base " + std::to_string(word.base()) +
                                " does not match " + std::to_string(p.base()) + " probabilities");
  }
  const Alignment align = Alignment{}.include(word.digits()).include(p.vectors());
  Rational weight = 1;  // prod_{j<n} p_{b_j}
  Rational head = 0;
  for (std::size_t n = 0; n < align.start; ++n) {
    const Digit d = word.at(n);
    head += p.offset(n, d) * weight;
    weight *= p.probability(n, d);
  }
  const Rational entry_weight = weight;
  Rational cycle = 0;
  for (std::size_t n = align.start; n < align.start + align.length; ++n) {
    const Digit d = word.at(n);
    cycle += p.offset(n, d) * weight;
    weight *= p.probability(n, d);
  }
  Rational value = head;
  if (weight == entry_weight && entry_weight != 0) {
    // Ratio 1: the tail converges only when every period adds nothing.
    if (cycle != 0) throw std::domain_error("distribution series diverges (period ratio 1)");
  } else if (entry_weight != 0) {
    value += cycle / (1 - weight / entry_weight);
  }
  value.canonicalize();
  return value;
}

Rational distribution_function(const Rational& x, const ProbabilityModel& p) {
  if (x < 0) return 0;
  if (x >= 1) return 1;
  return salem_series(expand(x, p.base()), p);
}

Rational distribution_function(const Rational& x, const ProbabilityModel& p,
                               const OperatorSchedule& schedule) {
  if (x < 0) return 0;
  if (x > 1) return 1;
  return salem_series(transform(expand(x, schedule.base()), schedule), p);
}

Rational salem_type(const Rational& x, const ProbabilityModel& p,
                    const OperatorSchedule& schedule) {
  require_unit_interval(x);
  return distribution_function(pseudo_value(x, schedule), p);
}

}  // namespace radixforge
