#ifndef WEYLMULT_ROOTSYS_HPP
#define WEYLMULT_ROOTSYS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weylmult/numeric.hpp"

namespace weylmult {

/// Positive root of A_l supported on the interval [lo, hi] of simple roots,
/// 1 <= lo <= hi <= l.  lo == hi is the simple root itself.
struct RootInterval {
  int lo = 0;
  int hi = 0;
  bool operator==(const RootInterval&) const = default;
};

/// Integral weight of A_l in fundamental-weight coordinates.  General
/// weights may have negative coordinates; dominance is a separate predicate.
struct Weight {
  std::vector<std::int64_t> coords;

  Weight() = default;
  explicit Weight(std::vector<std::int64_t> c) : coords(std::move(c)) {}

  int rank() const { return static_cast<int>(coords.size()); }
  bool operator==(const Weight& o) const { return coords == o.coords; }
  bool operator<(const Weight& o) const { return coords < o.coords; }
};

/// Nonnegative element of the root lattice, stored by its coefficients in
/// the simple-root basis.
struct AlphaVector {
  std::vector<std::int64_t> coeffs;

  AlphaVector() = default;
  explicit AlphaVector(std::vector<std::int64_t> a) : coeffs(std::move(a)) {}

  int rank() const { return static_cast<int>(coeffs.size()); }
  bool operator==(const AlphaVector& o) const { return coeffs == o.coeffs; }
};

/// Cartan pairing <alpha_j, alpha_i^vee> for A_l; 1-based indices.
inline std::int64_t cartan_entry(int i, int j) {
  if (i == j) return 2;
  return (i - j == 1 || j - i == 1) ? -1 : 0;
}

std::vector<std::vector<std::int64_t>> cartan_matrix(int rank);

/// The fixed enumeration of the positive roots of A_l: group b (1-based)
/// lists the b intervals (b,b), (b-1,b), ..., (1,b), groups in increasing b.
/// Built once per rank and shared immutably.
const std::vector<RootInterval>& positive_roots_ordered(int rank);

inline int root_count(int rank) { return rank * (rank + 1) / 2; }

/// Flat position of the interval [lo, hi] in positive_roots_ordered.
inline int root_position(int lo, int hi) { return hi * (hi - 1) / 2 + (hi - lo); }

/// Coordinatewise difference a - b of two weights of equal rank.
std::vector<std::int64_t> weight_diff(const Weight& a, const Weight& b);

/// Solves C * a = d exactly over the rationals (C = Cartan matrix) and
/// returns a when it is a nonnegative integer vector, otherwise nothing.
/// An absent result means d is not a nonnegative root-lattice element.
std::optional<AlphaVector> weight_to_alpha(const std::vector<std::int64_t>& d);

/// Fundamental-weight coordinates of sum a_i alpha_i, i.e. C * a.
Weight alpha_to_weight(const AlphaVector& a);

/// lambda minus the root-lattice element with coefficients a, in
/// fundamental-weight coordinates.
Weight weight_minus_alpha(const Weight& lambda, const std::vector<std::int64_t>& a);

/// Same, written into a caller-owned buffer (resized to rank).
void weight_minus_alpha_into(const Weight& lambda, const std::vector<std::int64_t>& a,
                             std::vector<std::int64_t>& out);

bool is_dominant(const Weight& w);

/// Drops the last coordinate: the restriction to the rank-(l-1) subalgebra
/// generated by the first l-1 simple root pairs.  Requires rank >= 2.
Weight restrict_weight(const Weight& w);

/// Weyl dimension formula for A_l, evaluated exactly:
/// prod over intervals [i,j] of (sum_{m=i..j} (w_m + 1)) / (j - i + 1).
/// Requires w dominant.
BigInt weyl_dim(const Weight& w);

/// Action of the simple reflection s_i on fundamental-weight coordinates:
/// mu - mu_i * alpha_i.  1-based i.
Weight simple_reflection(const Weight& mu, int i);

std::string render_weight(const Weight& w);

}  // namespace weylmult

#endif
