#ifndef WEYLMULT_MONOMIAL_HPP
#define WEYLMULT_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "weylmult/rootsys.hpp"

namespace weylmult {

enum class Ord { less, equal, greater };

/// Right-to-left comparison of exponent tuples: the last position where the
/// tuples differ decides; equal tuples compare equal.  Total order.
/// Throws std::invalid_argument on length mismatch.
Ord tuple_compare(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b);

/// Layout of the triangular index tuple shared by the monomial index K and
/// the flat exponent vector I.  Block b (1-based, size b) occupies flat slots
/// [b(b-1)/2, b(b-1)/2 + b) and carries superscript j = l - b + 1; within a
/// block, subscripts are stored in decreasing order b, b-1, ..., 1.
/// Immutable and shared per rank.
class TriLayout {
 public:
  static const TriLayout& get(int rank);

  int rank() const { return rank_; }
  int size() const { return rank_ * (rank_ + 1) / 2; }
  int block_begin(int b) const { return (b - 1) * b / 2; }
  int block_size(int b) const { return b; }
  int superscript(int b) const { return rank_ - b + 1; }
  int block_of(int j) const { return rank_ - j + 1; }

  /// Flat slot of the entry with subscript i and superscript j.
  /// Valid iff 1 <= i, 1 <= j, i + j <= rank + 1.
  int pos(int i, int j) const { return block_begin(block_of(j)) + (block_of(j) - i); }
  bool valid(int i, int j) const { return i >= 1 && j >= 1 && i + j <= rank_ + 1; }

  int subscript_at(int flat) const { return sub_[static_cast<std::size_t>(flat)]; }
  int superscript_at(int flat) const { return sup_[static_cast<std::size_t>(flat)]; }

 private:
  explicit TriLayout(int rank);
  int rank_;
  std::vector<int> sub_, sup_;
};

/// Exponent tuple of a normal-ordered product of divided powers: entry t is
/// the divided power of the t-th root vector in positive_roots_ordered order.
struct ExponentVector {
  int rank = 0;
  std::vector<std::int64_t> entries;

  bool operator==(const ExponentVector& o) const { return rank == o.rank && entries == o.entries; }
};

/// Triangular index K of the monomial theta^K, stored blockwise in the flat
/// tuple order (block 1 first).  Entry k(i, j) is the divided power of the
/// i-th lowering generator in the block with superscript j.
struct MonomialIndex {
  int rank = 0;
  std::vector<std::int64_t> entries;

  std::int64_t k(int i, int j) const {
    return entries[static_cast<std::size_t>(TriLayout::get(rank).pos(i, j))];
  }
  bool operator==(const MonomialIndex& o) const { return rank == o.rank && entries == o.entries; }
};

Ord compare(const ExponentVector& a, const ExponentVector& b);
Ord compare(const MonomialIndex& a, const MonomialIndex& b);

/// Membership in the index set: every block weakly decreasing in storage
/// order (k_b >= k_{b-1} >= ... >= k_1) and all entries nonnegative.
bool is_in_pi(const MonomialIndex& K);

/// The leading exponent tuple of theta^K: block b of K with entries
/// k_b >= ... >= k_1 maps to the consecutive differences
/// (k_b - k_{b-1}, ..., k_2 - k_1, k_1).  Throws if K is not in the index set.
ExponentVector exponents_of(const MonomialIndex& K);

/// Inverse of exponents_of: per-block suffix sums.
MonomialIndex index_of(const ExponentVector& I);

/// Total divided power of each lowering generator across theta^K:
/// c_i = sum over blocks of k_i^j.
AlphaVector content(const MonomialIndex& K);

/// Splits K = K2 + K1 where K2 zeroes the last block (the rank-(l-1) part)
/// and K1 keeps only the last block.
std::pair<MonomialIndex, MonomialIndex> split(const MonomialIndex& K);

MonomialIndex add(const MonomialIndex& a, const MonomialIndex& b);
MonomialIndex zero_index(int rank);

/// Display form of theta^K, factors left to right, e.g. "f2^(1) f1^(1)".
/// The zero index renders as "1".  Display-only, never parsed back.
std::string render_theta(const MonomialIndex& K);

/// Display form of the tuple with block separators, e.g. "(1; 2,1)".
std::string render_index(const MonomialIndex& K);

}  // namespace weylmult

#endif
