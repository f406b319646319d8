#ifndef WEYLMULT_MULT_HPP
#define WEYLMULT_MULT_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "weylmult/basis.hpp"
#include "weylmult/branch.hpp"
#include "weylmult/numeric.hpp"
#include "weylmult/rootsys.hpp"

namespace weylmult {

struct MemoKey {
  int rank = 0;
  std::vector<std::int64_t> lambda;
  std::vector<std::int64_t> mu;

  bool operator==(const MemoKey&) const = default;
  bool operator<(const MemoKey& o) const {
    if (rank != o.rank) return rank < o.rank;
    if (lambda != o.lambda) return lambda < o.lambda;
    return mu < o.mu;
  }
};

/// Shared memo table for the rank recursion.  Concurrent insert-if-absent;
/// identical keys always carry identical values, so last writer wins.
class MultMemo {
 public:
  std::optional<BigInt> find(const MemoKey& k) const;
  void store(const MemoKey& k, const BigInt& v);
  std::size_t size() const;
  std::vector<std::pair<MemoKey, BigInt>> snapshot() const;

 private:
  std::map<MemoKey, BigInt> table_;
  mutable std::mutex lock_;
};

/// Weight multiplicity by rank recursion: the multiplicity at mu is the sum,
/// over bounded last-block indices P compatible with a = lambda - mu in the
/// root lattice (p_l = a_l and p_i <= a_i for i < l), of the multiplicity of
/// the restricted mu in the rank-(l-1) component selected by P.  Base rank 1
/// is the weight string 0 <= a <= lambda.  Requires lambda dominant.
BigInt mult_recursive(const Weight& lambda, const Weight& mu, MultMemo& memo);

/// The components the top level of the recursion selects, with their
/// summands; positions s are 1-based into the ordered component list.
struct SelectedComponent {
  int s = 0;
  PiPrimeElement P;
  Weight highest_weight;
  BigInt summand;
};
std::vector<SelectedComponent> mult_selection(const Weight& lambda, const Weight& mu,
                                              MultMemo& memo);

/// Weight multiplicity by direct basis count: the number of basis indices
/// with content lambda - mu.
BigInt mult_count(const Weight& lambda, const Weight& mu, std::uint64_t cap = 0);

/// Full weight-multiplicity table of one module.
struct Character {
  int rank = 0;
  std::map<std::vector<std::int64_t>, BigInt> table;  // mu coords -> multiplicity

  BigInt total_mass() const;
};

enum class CharMethod { count, recursive, freudenthal };

/// Candidate exponent box containing the support: componentwise
/// 0 <= a <= a_max where a_max solves C a_max = lambda - w0(lambda).
std::vector<std::int64_t> support_box(const Weight& lambda);

class FreudenthalTable;

/// memo/table, when given, are used (and filled) instead of per-call state.
Character character(const Weight& lambda, CharMethod method, std::uint64_t cap = 0,
                    MultMemo* memo = nullptr, FreudenthalTable* table = nullptr);

enum class DimMethod { enumerate, weyl };

BigInt dim(const Weight& lambda, DimMethod method, std::uint64_t cap = 0);

}  // namespace weylmult

#endif
