#ifndef WEYLMULT_ORACLE_HPP
#define WEYLMULT_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "weylmult/numeric.hpp"
#include "weylmult/rootsys.hpp"

namespace weylmult {

/// Weight multiplicities of one highest-weight module via the classical
/// top-down recursion over the weight lattice.  All intermediate arithmetic
/// is exact; every division is checked to be remainder-free.  Results are
/// cached per instance; the cache supports concurrent callers.
class FreudenthalTable {
 public:
  explicit FreudenthalTable(Weight lambda);

  const Weight& lambda() const { return lambda_; }

  BigInt mult(const Weight& mu);
  /// Multiplicity at lambda minus the root-lattice element with coefficients a.
  BigInt mult_alpha(const std::vector<std::int64_t>& a);

  std::vector<std::pair<std::vector<std::int64_t>, BigInt>> snapshot() const;
  void preload(const std::vector<std::int64_t>& a, const BigInt& value);

 private:
  BigInt compute(const std::vector<std::int64_t>& a);  // caller holds the lock

  Weight lambda_;
  std::map<std::vector<std::int64_t>, BigInt> memo_;
  mutable std::mutex lock_;
};

/// One-shot convenience wrapper.
BigInt freudenthal_mult(const Weight& lambda, const Weight& mu);

/// Triangular interlacing pattern; rows[0] is the top row (length l+1),
/// consecutive rows interlace: upper[t] >= lower[t] >= upper[t+1].
struct GTPattern {
  std::vector<std::vector<std::int64_t>> rows;
};

/// Top row induced by a dominant weight: the partition
/// (w_1+...+w_l, w_2+...+w_l, ..., w_l, 0).
std::vector<std::int64_t> gt_top_row(const Weight& lambda);

/// Required bottom-up row sums (S_1, ..., S_{l+1}) for patterns of weight mu:
/// S_m - S_{m-1} is the m-th entry of mu translated to the epsilon basis.
/// Absent when lambda - mu is not a nonnegative root-lattice element.
std::optional<std::vector<std::int64_t>> gt_row_sums(const Weight& lambda, const Weight& mu);

/// Enumerates patterns with the given top row; when row_sums is present only
/// patterns whose rows have exactly those sums are produced.  Visitor returns
/// false to stop.
void enumerate_gt(const Weight& lambda, const std::optional<std::vector<std::int64_t>>& row_sums,
                  const std::function<bool(const GTPattern&)>& visit);

/// Number of patterns with top row from lambda and weight mu; equals the
/// weight multiplicity.
BigInt gt_count(const Weight& lambda, const Weight& mu);

/// Number of all patterns with top row from lambda; equals the dimension.
BigInt gt_total(const Weight& lambda);

}  // namespace weylmult

#endif
