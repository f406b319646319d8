#ifndef WEYLMULT_BASIS_HPP
#define WEYLMULT_BASIS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "weylmult/monomial.hpp"
#include "weylmult/rootsys.hpp"

namespace weylmult {

/// Last-block-only index (p_1, ..., p_l), the branching parameter.  Stored
/// with p[0] = p_1.  Membership requires p_1 <= p_2 <= ... <= p_l; the
/// lambda-bounded set additionally requires p_i - p_{i-1} <= lambda_i for
/// every i (p_0 = 0).
struct PiPrimeElement {
  std::vector<std::int64_t> p;

  int rank() const { return static_cast<int>(p.size()); }
  bool operator==(const PiPrimeElement& o) const { return p == o.p; }
};

/// A partially fixed monomial index together with the highest weight, for
/// querying the per-entry upper bounds.  Entries are fixed one at a time;
/// the bound for (i, j) reads only entries that come before it in
/// application order (all superscripts q < j, and subscripts < i within j).
class BoundContext {
 public:
  explicit BoundContext(Weight lambda);

  int rank() const { return lambda_.rank(); }
  const Weight& lambda() const { return lambda_; }

  void set(int i, int j, std::int64_t value);
  bool is_set(int i, int j) const;
  std::int64_t get(int i, int j) const;

  /// The upper bound for entry (i, j):
  ///   lambda_i + sum_{q<=j} k_{i-1}^q + sum_{q<j} k_{i+1}^q - 2 sum_{q<j} k_i^q
  /// with k_0^q = 0.  This equals the eigenvalue of the i-th coroot on the
  /// partial vector right before the (i, j) factor is applied.  Throws
  /// std::logic_error when an entry the formula reads is not set.
  std::int64_t bound(int i, int j) const;

 private:
  std::int64_t read(int i, int j) const;
  Weight lambda_;
  std::vector<std::int64_t> entries_;
  std::vector<bool> set_;
};

/// Visitor returns false to stop the traversal early.  The emitted index is
/// owned by the traversal and only valid during the call; copy to keep it.
using BasisVisitor = std::function<bool(const MonomialIndex&)>;

/// Content-aware visitor: also receives the index content (c_i = sum over
/// blocks of k_i^j), which the traversal maintains incrementally.
using BasisContentVisitor =
    std::function<bool(const MonomialIndex&, const std::vector<std::int64_t>&)>;

/// Depth-first generation of the bounded index set for a dominant weight,
/// in application order (superscript j = 1 first; within a block subscripts
/// ascending; each entry ranges over [k_{i-1}^j, bound(i, j)]).  When a
/// content filter is given, branches whose partial content exceeds it are
/// pruned and only indices with exactly that content are emitted.
/// cap > 0 limits the number of emitted elements (resource_limit_error).
void enumerate_basis(const Weight& lambda, const AlphaVector* filter,
                     const BasisVisitor& visit, std::uint64_t cap = 0);
void enumerate_basis(const Weight& lambda, const AlphaVector* filter,
                     const BasisContentVisitor& visit, std::uint64_t cap = 0);

BigInt count_basis(const Weight& lambda, const AlphaVector* filter = nullptr,
                   std::uint64_t cap = 0);

/// Membership test: K in Pi and every entry within its bound.
bool in_basis(const Weight& lambda, const MonomialIndex& K);

/// All lambda-bounded last-block indices, ascending in the tuple order
/// (equivalently, lexicographic on (p_1, ..., p_l)).
std::vector<PiPrimeElement> enumerate_pi_prime(const Weight& lambda);

/// Embeds P as a monomial index with all other blocks zero.
MonomialIndex pad_pi_prime(const PiPrimeElement& P);

/// Partitionable traversal: a prefix is one completed first applied block
/// (the values k_1^1, ..., k_l^1); the remaining blocks are enumerated per
/// prefix.  Serial enumerate_basis walks the same prefixes in order, so a
/// worker per prefix reproduces the serial stream up to interleaving.
struct BasisPrefix {
  std::vector<std::int64_t> first_block;  // subscript order 1..l
};

std::vector<BasisPrefix> enumerate_first_block(const Weight& lambda, const AlphaVector* filter);

/// Continues the traversal below one prefix; returns false if the visitor
/// stopped it.
bool enumerate_from_prefix(const Weight& lambda, const AlphaVector* filter,
                           const BasisPrefix& prefix, const BasisVisitor& visit);
bool enumerate_from_prefix(const Weight& lambda, const AlphaVector* filter,
                           const BasisPrefix& prefix, const BasisContentVisitor& visit);

}  // namespace weylmult

#endif
