#pragma once

#include "radixforge/digit_word.hpp"
#include "radixforge/schedule.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace radixforge::testing {

class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  std::uint64_t uniform64(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(engine_);
  }
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

inline std::uint64_t small_pow(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t out = 1;
  while (exponent-- > 0) out *= base;
  return out;
}

inline BlockOp random_op(Random& r, int base, int max_length) {
  const int k = r.uniform(1, max_length);
  const std::uint64_t n = small_pow(static_cast<std::uint64_t>(base), static_cast<std::uint64_t>(k));
  const BigInt count = factorial(n);
  // Mix in anchors so identity/complement blocks show up often.
  switch (r.uniform(0, 5)) {
    case 0: return BlockOp::identity(base, k);
    case 1: return BlockOp::complement(base, k);
    default: break;
  }
  const std::uint64_t top = count.fits_ulong_p() ? count.get_ui() - 1 : UINT64_MAX;
  return BlockOp::from_index(base, k, BigInt(static_cast<unsigned long>(r.uniform64(0, top))));
}

inline OperatorSchedule random_schedule(Random& r, int base, int max_length = 2) {
  std::vector<BlockOp> pre, per;
  const int pre_len = r.uniform(0, 2);
  const int per_len = r.uniform(1, 3);
  for (int i = 0; i < pre_len; ++i) pre.push_back(random_op(r, base, max_length));
  for (int i = 0; i < per_len; ++i) per.push_back(random_op(r, base, max_length));
  return OperatorSchedule(base, std::move(pre), std::move(per));
}

inline DigitWord random_word(Random& r, int base, int max_pre, int max_per) {
  std::vector<Digit> pre(static_cast<std::size_t>(r.uniform(0, max_pre)));
  std::vector<Digit> per(static_cast<std::size_t>(r.uniform(1, max_per)));
  for (auto& d : pre) d = r.uniform(0, base - 1);
  for (auto& d : per) d = r.uniform(0, base - 1);
  return DigitWord(base, std::move(pre), std::move(per));
}

/// Uniform p/q in [0,1] with 1 <= q <= max_den.
inline Rational random_rational(Random& r, int max_den) {
  const int q = r.uniform(1, max_den);
  Rational x(BigInt(r.uniform(0, q)), BigInt(q));
  x.canonicalize();
  return x;
}

/// Sum of the first n digit contributions with optional signs, computed term by term.
inline Rational partial_sum(const DigitWord& w, std::size_t n, const std::vector<int>& signs = {}) {
  Rational sum = 0;
  Rational scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    scale /= w.base();
    const int sign = signs.empty() ? 1 : signs[i % signs.size()];
    sum += Rational(sign * w.at(i)) * scale;
  }
  return sum;
}

inline Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

}  // namespace radixforge::testing
