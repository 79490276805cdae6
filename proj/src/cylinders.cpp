#include "radixforge/cylinders.hpp"

#include "radixforge/representations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace radixforge {

namespace {

void require_boundary(const OperatorSchedule& schedule, std::size_t rank) {
  if (!schedule.is_boundary(rank)) {
    throw std::invalid_argument("rank " + std::to_string(rank) +
                                " is not a block boundary of the schedule");
  }
}

// x * s^depth when it is an integer.
std::optional<BigInt> scaled_integer(const Rational& x, int base, std::size_t depth) {
  const Rational scaled = x * Rational(ipow(static_cast<std::uint64_t>(base), depth));
  if (scaled.get_den() != 1) return std::nullopt;
  return scaled.get_num();
}

// Closed intervals sorted and merged when they overlap or touch.
std::vector<std::pair<Rational, Rational>> merge(std::vector<std::pair<Rational, Rational>> in) {
  std::sort(in.begin(), in.end());
  std::vector<std::pair<Rational, Rational>> out;
  for (auto& iv : in) {
    if (!out.empty() && iv.first <= out.back().second) {
      out.back().second = std::max(out.back().second, iv.second);
    } else {
      out.push_back(std::move(iv));
    }
  }
  return out;
}

Rational total_length(const std::vector<std::pair<Rational, Rational>>& intervals) {
  Rational sum = 0;
  for (const auto& [lo, hi] : intervals) sum += hi - lo;
  return sum;
}

std::vector<std::pair<Rational, Rational>> cover_images(const std::vector<Cylinder>& cover,
                                                         const OperatorSchedule& schedule) {
  std::vector<std::pair<Rational, Rational>> images;
  images.reserve(cover.size());
  for (const Cylinder& c : cover) {
    const Cylinder image = image_of_cylinder(c, schedule);
    images.emplace_back(image.lower, image.upper);
  }
  return merge(std::move(images));
}

}  // namespace

Cylinder cylinder_interval(const std::vector<Digit>& digits, int base) {
  // Validates the digits as a side effect.
  Cylinder c{base, digits, evaluate(DigitWord(base, digits, {0})),
             evaluate(DigitWord(base, digits, {base - 1}))};
  return c;
}

Cylinder cylinder_interval(const std::vector<Digit>& digits, const OperatorSchedule& schedule) {
  require_boundary(schedule, digits.size());
  return cylinder_interval(digits, schedule.base());
}

std::vector<Cylinder> children(const Cylinder& cylinder) {
  std::vector<Cylinder> out;
  for (Digit d = 0; d < cylinder.base; ++d) {
    auto digits = cylinder.digits;
    digits.push_back(d);
    out.push_back(cylinder_interval(digits, cylinder.base));
  }
  return out;
}

std::vector<Cylinder> children(const Cylinder& cylinder, const OperatorSchedule& schedule) {
  const std::size_t n = schedule.blocks_before(cylinder.rank());
  const int k = schedule.block(n).length();
  std::vector<Cylinder> out;
  for (const auto& block : all_prefixes(schedule.base(), static_cast<std::size_t>(k))) {
    auto digits = cylinder.digits;
    digits.insert(digits.end(), block.begin(), block.end());
    out.push_back(cylinder_interval(digits, schedule.base()));
  }
  return out;
}

Cylinder image_of_cylinder(const Cylinder& cylinder, const OperatorSchedule& schedule) {
  return cylinder_interval(transform_prefix(cylinder.digits, schedule), schedule.base());
}

std::vector<Cylinder> cylinder_cover(const Rational& a, const Rational& b,
                                     const OperatorSchedule& schedule, std::size_t depth) {
  require_boundary(schedule, depth);
  const int s = schedule.base();
  const auto lo = scaled_integer(a, s, depth);
  const auto hi = scaled_integer(b, s, depth);
  if (!lo || !hi) {
    throw std::invalid_argument("interval endpoints are not multiples of s^-depth");
  }
  std::vector<std::size_t> ranks = schedule.boundaries_up_to(depth);
  ranks.insert(ranks.begin(), 0);

  // Work in units of s^-depth; a rank-m cylinder spans s^(depth-m) units.
  std::vector<Cylinder> cover;
  BigInt pos = *lo;
  while (pos < *hi) {
    for (const std::size_t m : ranks) {
      const BigInt span = ipow(static_cast<std::uint64_t>(s), depth - m);
      if (pos % span != 0 || pos + span > *hi) continue;
      // Digits of pos / span in base s, m of them.
      BigInt q = pos / span;
      std::vector<Digit> digits(m);
      for (std::size_t i = m; i > 0; --i) {
        digits[i - 1] = static_cast<Digit>(BigInt(q % s).get_si());
        q /= s;
      }
      cover.push_back(cylinder_interval(digits, s));
      pos += span;
      break;
    }
  }
  return cover;
}

ImageSet image_of_interval(const Rational& a, const Rational& b,
                           const OperatorSchedule& schedule, std::size_t depth) {
  if (!(0 <= a && a < b && b <= 1)) {
    throw std::invalid_argument("interval must satisfy 0 <= a < b <= 1");
  }
  require_boundary(schedule, depth);
  const int s = schedule.base();
  ImageSet result;

  if (scaled_integer(a, s, depth) && scaled_integer(b, s, depth)) {
    result.intervals = cover_images(cylinder_cover(a, b, schedule, depth), schedule);
    result.measure = total_length(result.intervals);
    result.inner_measure = result.measure;
    result.outer_measure = result.measure;
    // Each expansion of an endpoint maps somewhere; images outside the
    // cylinder images are isolated points of f([a,b]).
    for (const Rational& end : {a, b}) {
      const DigitWord word = expand(end, s);
      std::vector<DigitWord> forms{word};
      if (auto dual = dual_form(word)) forms.push_back(*dual);
      for (const DigitWord& form : forms) {
        const Rational y = evaluate(transform(form, schedule));
        const bool covered = std::any_of(result.intervals.begin(), result.intervals.end(),
                                         [&](const auto& iv) { return iv.first <= y && y <= iv.second; });
        if (!covered) result.points.push_back(y);
      }
    }
    std::sort(result.points.begin(), result.points.end());
    result.points.erase(std::unique(result.points.begin(), result.points.end()),
                        result.points.end());
    return result;
  }

  // Inner cover: largest aligned subinterval; outer cover: smallest aligned
  // superinterval. Their lengths differ by at most 2 s^-depth.
  const Rational unit = inverse_power(static_cast<std::uint64_t>(s), depth);
  const Rational a_scaled = a / unit;
  const Rational b_scaled = b / unit;
  BigInt a_floor, a_ceil, b_floor, b_ceil;
  mpz_fdiv_q(a_floor.get_mpz_t(), a_scaled.get_num_mpz_t(), a_scaled.get_den_mpz_t());
  mpz_cdiv_q(a_ceil.get_mpz_t(), a_scaled.get_num_mpz_t(), a_scaled.get_den_mpz_t());
  mpz_fdiv_q(b_floor.get_mpz_t(), b_scaled.get_num_mpz_t(), b_scaled.get_den_mpz_t());
  mpz_cdiv_q(b_ceil.get_mpz_t(), b_scaled.get_num_mpz_t(), b_scaled.get_den_mpz_t());

  result.exact = false;
  const Rational inner_a = Rational(a_ceil) * unit;
  const Rational inner_b = Rational(b_floor) * unit;
  if (inner_a < inner_b) {
    result.intervals = cover_images(cylinder_cover(inner_a, inner_b, schedule, depth), schedule);
  }
  result.inner_measure = total_length(result.intervals);
  result.measure = result.inner_measure;
  const auto outer = cover_images(
      cylinder_cover(Rational(a_floor) * unit, Rational(b_ceil) * unit, schedule, depth),
      schedule);
  result.outer_measure = total_length(outer);
  return result;
}

std::vector<std::vector<Digit>> all_prefixes(int base, std::size_t rank) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < rank; ++i) {
    count *= static_cast<std::size_t>(base);
    if (count > kMaxEnumeration) {
      throw std::invalid_argument("enumeration of s^" + std::to_string(rank) +
                                  " cylinders exceeds 2^22");
    }
  }
  std::vector<std::vector<Digit>> out;
  out.reserve(count);
  std::vector<Digit> digits(rank, 0);
  for (std::size_t j = 0; j < count; ++j) {
    out.push_back(digits);
    for (std::size_t i = rank; i > 0; --i) {
      if (++digits[i - 1] < base) break;
      digits[i - 1] = 0;
    }
  }
  return out;
}

AdjacencyProfile adjacency_profile(const OperatorSchedule& schedule, std::size_t rank) {
  require_boundary(schedule, rank);
  const int s = schedule.base();
  AdjacencyProfile profile;
  profile.rank = rank;
  // Images of rank-n cylinders are rank-n cylinders, so the left-to-right
  // position of an image is the lexicographic rank of its base.
  for (const auto& digits : all_prefixes(s, rank)) {
    const auto image = transform_prefix(digits, schedule);
    std::size_t position = 0;
    for (const Digit d : image) position = position * static_cast<std::size_t>(s) + static_cast<std::size_t>(d);
    profile.image_position.push_back(position);
  }
  const auto& pos = profile.image_position;
  const bool increasing = std::is_sorted(pos.begin(), pos.end());
  const bool decreasing = std::is_sorted(pos.rbegin(), pos.rend());
  if (increasing) {
    profile.arrangement = Arrangement::LeftToRight;
  } else if (decreasing) {
    profile.arrangement = Arrangement::RightToLeft;
  } else {
    profile.arrangement = Arrangement::Mixed;
  }
  return profile;
}

}  // namespace radixforge
