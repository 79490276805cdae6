#include "radixforge/schedule.hpp"

#include <algorithm>
#include <stdexcept>

namespace radixforge {

OperatorSchedule::OperatorSchedule(int base, std::vector<BlockOp> pre, std::vector<BlockOp> per)
    : base_(base), pre_(std::move(pre)), per_(std::move(per)) {
  if (per_.empty()) throw std::invalid_argument("schedule period must be nonempty");
  for (const auto* ops : {&pre_, &per_}) {
    for (const BlockOp& op : *ops) {
      if (op.base() != base_) {
        throw std::invalid_argument("schedule operators must share base " +
                                    std::to_string(base_));
      }
    }
  }
  for (const BlockOp& op : pre_) prefix_digits_ += static_cast<std::size_t>(op.length());
  for (const BlockOp& op : per_) period_digits_ += static_cast<std::size_t>(op.length());
}

OperatorSchedule OperatorSchedule::constant(BlockOp op) {
  const int base = op.base();
  return OperatorSchedule(base, {}, {std::move(op)});
}

OperatorSchedule OperatorSchedule::identity(int base, int length) {
  return constant(BlockOp::identity(base, length));
}

OperatorSchedule OperatorSchedule::complement(int base, int length) {
  return constant(BlockOp::complement(base, length));
}

const BlockOp& OperatorSchedule::block(std::size_t n) const {
  if (n < pre_.size()) return pre_[n];
  return per_[(n - pre_.size()) % per_.size()];
}

std::size_t OperatorSchedule::block_start(std::size_t n) const {
  if (n <= pre_.size()) {
    std::size_t pos = 0;
    for (std::size_t i = 0; i < n; ++i) pos += static_cast<std::size_t>(pre_[i].length());
    return pos;
  }
  const std::size_t rest = n - pre_.size();
  std::size_t pos = prefix_digits_ + (rest / per_.size()) * period_digits_;
  for (std::size_t i = 0; i < rest % per_.size(); ++i) {
    pos += static_cast<std::size_t>(per_[i].length());
  }
  return pos;
}

bool OperatorSchedule::is_boundary(std::size_t position) const {
  return block_start(block_containing(position)) == position;
}

std::size_t OperatorSchedule::blocks_before(std::size_t position) const {
  const std::size_t n = block_containing(position);
  if (block_start(n) != position) {
    throw std::invalid_argument("position " + std::to_string(position) +
                                " is not a block boundary of the schedule");
  }
  return n;
}

std::size_t OperatorSchedule::block_containing(std::size_t position) const {
  // Largest n with block_start(n) <= position.
  if (position < prefix_digits_) {
    std::size_t n = 0;
    std::size_t pos = 0;
    while (pos + static_cast<std::size_t>(pre_[n].length()) <= position) {
      pos += static_cast<std::size_t>(pre_[n].length());
      ++n;
    }
    return n;
  }
  const std::size_t rest = position - prefix_digits_;
  std::size_t n = pre_.size() + (rest / period_digits_) * per_.size();
  std::size_t pos = prefix_digits_ + (rest / period_digits_) * period_digits_;
  for (std::size_t i = 0; i < per_.size(); ++i) {
    if (pos + static_cast<std::size_t>(per_[i].length()) > position) break;
    pos += static_cast<std::size_t>(per_[i].length());
    ++n;
  }
  return n;
}

std::vector<std::size_t> OperatorSchedule::boundaries_up_to(std::size_t limit) const {
  std::vector<std::size_t> out;
  for (std::size_t n = 1;; ++n) {
    const std::size_t pos = block_start(n);
    if (pos > limit) break;
    out.push_back(pos);
  }
  return out;
}

std::size_t OperatorSchedule::boundary_at_or_after(std::size_t position) const {
  const std::size_t n = block_containing(position);
  const std::size_t start = block_start(n);
  return start == position ? start : block_start(n + 1);
}

OperatorSchedule OperatorSchedule::inverse() const {
  std::vector<BlockOp> pre;
  std::vector<BlockOp> per;
  for (const BlockOp& op : pre_) pre.push_back(radixforge::inverse(op));
  for (const BlockOp& op : per_) per.push_back(radixforge::inverse(op));
  return OperatorSchedule(base_, std::move(pre), std::move(per));
}

namespace {

bool all_of(const std::vector<BlockOp>& ops, bool (BlockOp::*pred)() const) {
  return std::all_of(ops.begin(), ops.end(), [&](const BlockOp& op) { return (op.*pred)(); });
}

}  // namespace

bool OperatorSchedule::all_identity() const {
  return all_of(pre_, &BlockOp::is_identity) && all_of(per_, &BlockOp::is_identity);
}

bool OperatorSchedule::all_complement() const {
  return all_of(pre_, &BlockOp::is_complement) && all_of(per_, &BlockOp::is_complement);
}

bool OperatorSchedule::period_all_identity() const { return all_of(per_, &BlockOp::is_identity); }

bool OperatorSchedule::period_all_complement() const {
  return all_of(per_, &BlockOp::is_complement);
}

}  // namespace radixforge
