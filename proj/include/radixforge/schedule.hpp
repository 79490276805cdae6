#pragma once

#include "radixforge/block_op.hpp"

#include <cstddef>
#include <vector>

namespace radixforge {

/// Eventually periodic sequence of block converters, one per digit block.
/// Block n covers digit positions [start(n), start(n) + k_n).
class OperatorSchedule {
 public:
  /// Throws if the period is empty or the operators disagree on the base.
  OperatorSchedule(int base, std::vector<BlockOp> pre, std::vector<BlockOp> per);

  /// The same operator on every block.
  static OperatorSchedule constant(BlockOp op);
  static OperatorSchedule identity(int base, int length = 1);
  static OperatorSchedule complement(int base, int length = 1);

  [[nodiscard]] int base() const { return base_; }
  [[nodiscard]] const std::vector<BlockOp>& pre() const { return pre_; }
  [[nodiscard]] const std::vector<BlockOp>& per() const { return per_; }

  /// Operator acting on block n (0-based).
  [[nodiscard]] const BlockOp& block(std::size_t n) const;
  /// First digit position of block n.
  [[nodiscard]] std::size_t block_start(std::size_t n) const;

  /// Digits covered by the preperiod blocks.
  [[nodiscard]] std::size_t prefix_digits() const { return prefix_digits_; }
  /// Digits covered by one period of blocks.
  [[nodiscard]] std::size_t period_digits() const { return period_digits_; }

  /// True when some block starts (or the word starts) at `position`.
  [[nodiscard]] bool is_boundary(std::size_t position) const;
  /// Index of the block starting at the boundary `position`, i.e. the number
  /// of blocks covering [0, position). Throws if not a boundary.
  [[nodiscard]] std::size_t blocks_before(std::size_t position) const;
  /// All boundaries in [1, limit].
  [[nodiscard]] std::vector<std::size_t> boundaries_up_to(std::size_t limit) const;
  /// Index of the block containing digit `position`.
  [[nodiscard]] std::size_t block_containing(std::size_t position) const;
  /// Smallest boundary >= position.
  [[nodiscard]] std::size_t boundary_at_or_after(std::size_t position) const;

  /// Schedule of blockwise inverse operators.
  [[nodiscard]] OperatorSchedule inverse() const;

  /// All operators are identities (resp. complements).
  [[nodiscard]] bool all_identity() const;
  [[nodiscard]] bool all_complement() const;
  [[nodiscard]] bool period_all_identity() const;
  [[nodiscard]] bool period_all_complement() const;

  bool operator==(const OperatorSchedule&) const = default;

 private:
  int base_;
  std::vector<BlockOp> pre_;
  std::vector<BlockOp> per_;
  std::size_t prefix_digits_ = 0;
  std::size_t period_digits_ = 0;
};

}  // namespace radixforge
