#ifndef WEYLMULT_BRANCH_HPP
#define WEYLMULT_BRANCH_HPP

#include <vector>

#include "weylmult/basis.hpp"
#include "weylmult/numeric.hpp"
#include "weylmult/rootsys.hpp"

namespace weylmult {

/// One irreducible component of the restriction to rank l-1: the s-th step
/// of the filtration, its last-block index P, the component highest weight
/// (always dominant), and its dimension.
struct BranchComponent {
  int s = 0;  // 1-based filtration position
  PiPrimeElement P;
  Weight highest_weight;  // rank l-1
  BigInt dim;
};

/// Component highest weight for one P: coordinate j of lambda minus the
/// root-lattice element with coefficients p, restricted to the first l-1
/// coordinates: lambda_j - 2 p_j + p_{j-1} + p_{j+1}.
Weight branch_weight(const Weight& lambda, const PiPrimeElement& P);

/// Decomposition of the restriction of the irreducible module with highest
/// weight lambda to the rank-(l-1) subalgebra, one component per bounded
/// last-block index, in ascending tuple order.  Requires rank >= 2, lambda
/// dominant.
std::vector<BranchComponent> branch(const Weight& lambda);

/// Consistency check: component dimensions sum to the full dimension.
bool check_dim_sum(const Weight& lambda);

}  // namespace weylmult

#endif
