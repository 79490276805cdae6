#include "radixforge/block_op.hpp"

#include <stdexcept>
#include <string>

namespace radixforge {

namespace {

std::size_t alphabet_size(int base, int length) {
  if (base < 2) throw std::invalid_argument("base must be >= 2");
  if (length < 1) throw std::invalid_argument("block length must be >= 1");
  std::uint64_t n = 1;
  for (int i = 0; i < length; ++i) {
    n *= static_cast<std::uint64_t>(base);
    if (n > kMaxBlockAlphabet) {
      throw std::invalid_argument("block alphabet s^k exceeds 2^20");
    }
  }
  return static_cast<std::size_t>(n);
}

// Fenwick tree over {0,...,n-1} marking the still-unused elements.
class UnusedSet {
 public:
  explicit UnusedSet(std::size_t n) : tree_(n + 1, 0) {
    for (std::size_t i = 1; i <= n; ++i) {
      tree_[i] += 1;
      const std::size_t parent = i + (i & (~i + 1));
      if (parent <= n) tree_[parent] += tree_[i];
    }
  }

  // Number of unused elements strictly below `value`.
  std::size_t count_below(std::size_t value) const {
    std::size_t sum = 0;
    for (std::size_t i = value; i > 0; i -= i & (~i + 1)) sum += tree_[i];
    return sum;
  }

  void remove(std::size_t value) {
    for (std::size_t i = value + 1; i < tree_.size(); i += i & (~i + 1)) tree_[i] -= 1;
  }

  // The unused element with exactly `order` unused elements below it.
  std::size_t select(std::size_t order) const {
    std::size_t pos = 0;
    std::size_t step = 1;
    while (step * 2 < tree_.size()) step *= 2;
    for (; step > 0; step /= 2) {
      if (pos + step < tree_.size() && tree_[pos + step] <= order) {
        pos += step;
        order -= tree_[pos];
      }
    }
    return pos;
  }

 private:
  std::vector<std::size_t> tree_;
};

BigInt lehmer_index(const std::vector<TupleRank>& table) {
  const std::size_t n = table.size();
  UnusedSet unused(n);
  BigInt index = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t digit = unused.count_below(table[j]);
    unused.remove(table[j]);
    index *= static_cast<unsigned long>(n - j);
    index += static_cast<unsigned long>(digit);
  }
  return index;
}

}  // namespace

BlockOp::BlockOp(int base, int length, std::vector<TupleRank> table, BigInt index)
    : base_(base), length_(length), table_(std::move(table)), index_(std::move(index)) {}

BlockOp BlockOp::from_index(int base, int length, const BigInt& index) {
  const std::size_t n = alphabet_size(base, length);
  if (index < 0 || index >= factorial(n)) {
    throw std::invalid_argument("operator index " + to_string(index) +
                                " out of range [0, (s^k)!-1]");
  }
  // Factorial-base digits, least significant first: radix 1, 2, ..., n.
  std::vector<std::size_t> lehmer(n);
  BigInt rest = index;
  for (std::size_t radix = 1; radix <= n; ++radix) {
    lehmer[n - radix] = mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(),
                                      static_cast<unsigned long>(radix));
  }
  UnusedSet unused(n);
  std::vector<TupleRank> table(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t value = unused.select(lehmer[j]);
    unused.remove(value);
    table[j] = static_cast<TupleRank>(value);
  }
  return BlockOp(base, length, std::move(table), index);
}

BlockOp BlockOp::from_table(int base, int length, std::vector<TupleRank> table) {
  const std::size_t n = alphabet_size(base, length);
  if (table.size() != n) {
    throw std::invalid_argument("operator table must have s^k = " + std::to_string(n) +
                                " entries");
  }
  std::vector<bool> hit(n, false);
  for (const TupleRank r : table) {
    if (r >= n || hit[r]) throw std::invalid_argument("operator table is not a bijection");
    hit[r] = true;
  }
  BigInt index = lehmer_index(table);
  return BlockOp(base, length, std::move(table), std::move(index));
}

BlockOp BlockOp::identity(int base, int length) {
  const std::size_t n = alphabet_size(base, length);
  std::vector<TupleRank> table(n);
  for (std::size_t j = 0; j < n; ++j) table[j] = static_cast<TupleRank>(j);
  return BlockOp(base, length, std::move(table), BigInt(0));
}

BlockOp BlockOp::complement(int base, int length) {
  const std::size_t n = alphabet_size(base, length);
  std::vector<TupleRank> table(n);
  for (std::size_t j = 0; j < n; ++j) table[j] = static_cast<TupleRank>(n - 1 - j);
  return BlockOp(base, length, std::move(table), factorial(n) - 1);
}

std::vector<Digit> BlockOp::apply(const std::vector<Digit>& tuple) const {
  if (tuple.size() != static_cast<std::size_t>(length_)) {
    throw std::invalid_argument("tuple length " + std::to_string(tuple.size()) +
                                " does not match block length " + std::to_string(length_));
  }
  return tuple_of_rank(table_[tuple_rank(tuple, base_)], base_, length_);
}

bool BlockOp::is_identity() const { return index_ == 0; }

bool BlockOp::is_complement() const {
  for (std::size_t j = 0; j < table_.size(); ++j) {
    if (table_[j] != table_.size() - 1 - j) return false;
  }
  return true;
}

BlockOp perm_from_index(int base, int length, const BigInt& index) {
  return BlockOp::from_index(base, length, index);
}

BigInt index_of_perm(const BlockOp& op) { return lehmer_index(op.table()); }

TupleRank tuple_rank(const std::vector<Digit>& tuple, int base) {
  std::uint64_t rank = 0;
  for (const Digit d : tuple) {
    if (d < 0 || d >= base) {
      throw std::invalid_argument("digit " + std::to_string(d) +
                                  " out of alphabet for base " + std::to_string(base));
    }
    rank = rank * static_cast<std::uint64_t>(base) + static_cast<std::uint64_t>(d);
  }
  return static_cast<TupleRank>(rank);
}

std::vector<Digit> tuple_of_rank(TupleRank rank, int base, int length) {
  std::vector<Digit> tuple(static_cast<std::size_t>(length));
  for (int i = length - 1; i >= 0; --i) {
    tuple[static_cast<std::size_t>(i)] = static_cast<Digit>(rank % static_cast<TupleRank>(base));
    rank /= static_cast<TupleRank>(base);
  }
  return tuple;
}

BlockOp compose(const BlockOp& a, const BlockOp& b) {
  if (a.base() != b.base() || a.length() != b.length()) {
    throw std::invalid_argument("compose: operators differ in base or block length");
  }
  std::vector<TupleRank> table(a.size());
  for (std::size_t j = 0; j < table.size(); ++j) table[j] = a(b(static_cast<TupleRank>(j)));
  return BlockOp::from_table(a.base(), a.length(), std::move(table));
}

BlockOp inverse(const BlockOp& op) {
  std::vector<TupleRank> table(op.size());
  for (std::size_t j = 0; j < table.size(); ++j) table[op.table()[j]] = static_cast<TupleRank>(j);
  return BlockOp::from_table(op.base(), op.length(), std::move(table));
}

BlockOp power(const BlockOp& op, std::uint64_t exponent) {
  BlockOp result = BlockOp::identity(op.base(), op.length());
  BlockOp square = op;
  while (exponent > 0) {
    if (exponent & 1U) result = compose(square, result);
    exponent >>= 1U;
    if (exponent > 0) square = compose(square, square);
  }
  return result;
}

std::vector<std::vector<TupleRank>> cycles(const BlockOp& op) {
  std::vector<std::vector<TupleRank>> out;
  std::vector<bool> seen(op.size(), false);
  for (std::size_t start = 0; start < op.size(); ++start) {
    if (seen[start]) continue;
    std::vector<TupleRank> cycle;
    for (TupleRank j = static_cast<TupleRank>(start); !seen[j]; j = op(j)) {
      seen[j] = true;
      cycle.push_back(j);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

BigInt op_order(const BlockOp& op) {
  BigInt order = 1;
  for (const auto& cycle : cycles(op)) {
    mpz_lcm_ui(order.get_mpz_t(), order.get_mpz_t(), static_cast<unsigned long>(cycle.size()));
  }
  return order;
}

}  // namespace radixforge
