#pragma once

#include "radixforge/digit_word.hpp"
#include "radixforge/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace radixforge {

/// Tuples of A_s^k are identified with their lexicographic rank, i.e. the
/// base-s integer they spell.
using TupleRank = std::uint32_t;

/// Largest alphabet A_s^k for which a dense table is built.
inline constexpr std::uint64_t kMaxBlockAlphabet = std::uint64_t{1} << 20;

/// A bijection of A_s^k (one block converter theta_{k,i}). The table and the
/// factorial-numbering index are kept consistent; index 0 is the identity and
/// index (s^k)!-1 is the digitwise complement.
class BlockOp {
 public:
  /// Decodes `index` (Lehmer code over lexicographically ordered tuples).
  static BlockOp from_index(int base, int length, const BigInt& index);
  /// Takes an explicit table of tuple ranks; throws unless it is a bijection.
  static BlockOp from_table(int base, int length, std::vector<TupleRank> table);
  static BlockOp identity(int base, int length);
  static BlockOp complement(int base, int length);

  [[nodiscard]] int base() const { return base_; }
  [[nodiscard]] int length() const { return length_; }
  [[nodiscard]] std::size_t size() const { return table_.size(); }
  [[nodiscard]] const BigInt& index() const { return index_; }
  [[nodiscard]] const std::vector<TupleRank>& table() const { return table_; }

  [[nodiscard]] TupleRank operator()(TupleRank rank) const { return table_.at(rank); }
  /// Image of a digit tuple of length k.
  [[nodiscard]] std::vector<Digit> apply(const std::vector<Digit>& tuple) const;

  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] bool is_complement() const;

  bool operator==(const BlockOp& other) const {
    return base_ == other.base_ && length_ == other.length_ && table_ == other.table_;
  }

 private:
  BlockOp(int base, int length, std::vector<TupleRank> table, BigInt index);

  int base_;
  int length_;
  std::vector<TupleRank> table_;
  BigInt index_;
};

/// Equivalent to BlockOp::from_index.
BlockOp perm_from_index(int base, int length, const BigInt& index);
BigInt index_of_perm(const BlockOp& op);

/// Lexicographic rank of a tuple and its inverse.
TupleRank tuple_rank(const std::vector<Digit>& tuple, int base);
std::vector<Digit> tuple_of_rank(TupleRank rank, int base, int length);

/// (a o b)(t) = a(b(t)).
BlockOp compose(const BlockOp& a, const BlockOp& b);
BlockOp inverse(const BlockOp& op);
BlockOp power(const BlockOp& op, std::uint64_t exponent);

/// Least t >= 1 with op^t = identity (lcm of cycle lengths).
BigInt op_order(const BlockOp& op);

/// Cycles of the permutation of tuple ranks, each starting at its smallest
/// element, ordered by that element.
std::vector<std::vector<TupleRank>> cycles(const BlockOp& op);

}  // namespace radixforge
