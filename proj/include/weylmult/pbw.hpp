#ifndef WEYLMULT_PBW_HPP
#define WEYLMULT_PBW_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "weylmult/monomial.hpp"
#include "weylmult/numeric.hpp"

namespace weylmult {

/// One divided-power factor f_{root}^{(power)} of a product word.
struct Factor {
  RootInterval root;
  std::int64_t power = 0;
  bool operator==(const Factor&) const = default;
};

/// Ordered product of divided powers of negative root vectors, read left to
/// right.  Powers are divided powers throughout and must be >= 1.
using FactorWord = std::vector<Factor>;

/// Strict right-to-left order on exponent tuples, for map keys.
struct TupleLess {
  bool operator()(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) const {
    return tuple_compare(a, b) == Ord::less;
  }
};

/// Integer linear combination of normal-ordered monomials, keyed by exponent
/// tuple; map iteration ascends in the monomial order, so the last entry is
/// the leading term.  Zero coefficients are never stored.
struct PBWPolynomial {
  int rank = 0;
  std::map<std::vector<std::int64_t>, BigInt, TupleLess> terms;

  bool operator==(const PBWPolynomial& o) const { return rank == o.rank && terms == o.terms; }
};

/// Which adjacent reducible pair the rewriter picks next.  Both strategies
/// reach the same normal form; having two is what makes that testable.
enum class Strategy { leftmost, rightmost };

inline constexpr std::size_t kDefaultTermCap = 1'000'000;

/// Expands a product of divided powers into the normal-ordered basis.
/// Rewrites adjacent pairs only:
///   - equal roots merge,  f^(a) f^(b) = binom(a+b, a) f^(a+b);
///   - non-concatenating intervals commute;
///   - for A = [i,j], B = [j+1,k], C = [i,k] the out-of-order pair becomes
///       f_B^(a) f_A^(b) = sum_m f_C^(m) f_A^(b-m) f_B^(a-m),
///     and the reversed identity carries alternating signs,
///       f_A^(b) f_B^(a) = sum_m (-1)^m f_C^(m) f_B^(a-m) f_A^(b-m).
/// All coefficients stay integral.  Throws resource_limit_error when the
/// number of live words plus collected terms exceeds term_cap.
PBWPolynomial straighten(int rank, const FactorWord& word,
                         Strategy strategy = Strategy::leftmost,
                         std::size_t term_cap = kDefaultTermCap);

/// The word of theta^K (simple-root factors, left to right) straightened.
/// Throws std::invalid_argument if K is not in the index set.
PBWPolynomial theta_expand(const MonomialIndex& K, std::size_t term_cap = kDefaultTermCap);

/// Greatest exponent tuple of a nonzero polynomial and its coefficient.
std::pair<ExponentVector, BigInt> leading(const PBWPolynomial& p);

/// Checks that theta^K straightens to its predicted leading monomial with
/// coefficient one.
bool verify_leading_term(const MonomialIndex& K, std::size_t term_cap = kDefaultTermCap);

/// Normal-ordered word of a basis exponent tuple (zero powers skipped).
FactorWord word_of(const ExponentVector& I);

/// The defining word of theta^K: for each block, factors f_b ... f_1 with the
/// block's divided powers, blocks in storage order.
FactorWord theta_word(const MonomialIndex& K);

/// Product of two normal forms, re-straightened term by term.
PBWPolynomial multiply(const PBWPolynomial& p, const PBWPolynomial& q,
                       std::size_t term_cap = kDefaultTermCap);

std::string render_root(const RootInterval& r);           // "f2", "f1~3"
std::string render_word(const FactorWord& w);             // "f2^(2) f1^(1)"
std::string render_exponents(const ExponentVector& I);    // normal form of one monomial
std::string render(const PBWPolynomial& p);               // "f1^(1) f2^(2) + ..."

}  // namespace weylmult

#endif
