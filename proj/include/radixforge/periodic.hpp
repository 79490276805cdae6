#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace radixforge {

/// An infinite sequence given by a finite preperiod followed by a nonempty
/// period repeated forever. Positions are 0-based.
template <typename T>
struct EventuallyPeriodic {
  std::vector<T> pre;
  std::vector<T> per;

  [[nodiscard]] typename std::vector<T>::const_reference at(std::size_t n) const {
    if (n < pre.size()) return pre[n];
    return per[(n - pre.size()) % per.size()];
  }

  /// First `count` terms.
  [[nodiscard]] std::vector<T> prefix(std::size_t count) const {
    std::vector<T> out;
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n) out.push_back(at(n));
    return out;
  }

  /// Same sequence, rewritten with preperiod length `start` (>= pre.size())
  /// and period length `length` (a multiple of per.size()).
  [[nodiscard]] EventuallyPeriodic realigned(std::size_t start,
                                             std::size_t length) const {
    if (start < pre.size() || length == 0 || length % per.size() != 0) {
      throw std::logic_error("realigned: incompatible alignment");
    }
    EventuallyPeriodic out;
    out.pre = prefix(start);
    out.per.reserve(length);
    for (std::size_t n = 0; n < length; ++n) out.per.push_back(at(start + n));
    return out;
  }

  /// Minimal preperiod and minimal period describing the same sequence.
  [[nodiscard]] EventuallyPeriodic minimized() const {
    EventuallyPeriodic out = *this;
    const std::size_t len = out.per.size();
    for (std::size_t d = 1; d <= len; ++d) {
      if (len % d != 0) continue;
      bool repeats = true;
      for (std::size_t i = d; i < len && repeats; ++i) {
        repeats = out.per[i] == out.per[i - d];
      }
      if (repeats) {
        out.per.resize(d);
        break;
      }
    }
    // Roll the period backwards while the last preperiod term matches.
    while (!out.pre.empty() && out.pre.back() == out.per.back()) {
      out.per.insert(out.per.begin(), out.pre.back());
      out.per.pop_back();
      out.pre.pop_back();
    }
    return out;
  }

  bool operator==(const EventuallyPeriodic&) const = default;
};

/// Common alignment of several eventually periodic sequences: the joint
/// preperiod start and the joint period length.
struct Alignment {
  std::size_t start = 0;
  std::size_t length = 1;

  template <typename T>
  Alignment& include(const EventuallyPeriodic<T>& seq) {
    start = std::max(start, seq.pre.size());
    length = std::lcm(length, seq.per.size());
    return *this;
  }
};

}  // namespace radixforge
