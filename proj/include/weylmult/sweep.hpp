#ifndef WEYLMULT_SWEEP_HPP
#define WEYLMULT_SWEEP_HPP

#include <string>
#include <vector>

#include "weylmult/rootsys.hpp"

namespace weylmult {

/// Outcome of one verification property over a sweep of inputs.  On failure
/// `detail` holds a minimal counterexample.
struct PropertyResult {
  std::string name;
  bool pass = true;
  long long cases = 0;
  std::string detail;
};

/// All dominant weights of the given rank with coordinates <= max_coord.
std::vector<Weight> all_weights(int rank, int max_coord);

// Per-property sweeps.  Each fans its cases out to an OpenMP worker pool and
// reports the first failing case in deterministic order.

/// |bounded index set| equals the Weyl dimension.
PropertyResult sweep_dim(int rank, int max_coord);

/// Branch components: dimensions sum to the full dimension, every component
/// weight is dominant, the first component is the restricted highest weight.
PropertyResult sweep_branch(int rank, int max_coord);

/// For every weight in the support: recursion = count = both oracles,
/// invariance under every simple reflection, and total mass = dimension.
PropertyResult sweep_mult_methods(int rank, int max_coord);

/// Every index with entries <= max_entry straightens to its predicted
/// leading monomial with coefficient one, and the leading exponent map is
/// injective on the sweep set.
PropertyResult sweep_leading_term(int rank, int max_entry);

/// Index/exponent roundtrips both ways on bounded sweep sets.
PropertyResult sweep_bijections(int rank, int max_entry);

/// Random words straighten to the same normal form under both reduction
/// strategies; coefficients are integral by representation.
PropertyResult sweep_confluence(int rank, int words, int max_factors, int max_power,
                                unsigned seed);

/// Parallel kernels agree with the serial reference.
PropertyResult sweep_parallel_agreement(int rank, int max_coord);

/// The standard battery over ranks 1..max_rank at the given coordinate cap.
std::vector<PropertyResult> run_all_sweeps(int max_rank, int max_coord);

}  // namespace weylmult

#endif
