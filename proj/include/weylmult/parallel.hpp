#ifndef WEYLMULT_PARALLEL_HPP
#define WEYLMULT_PARALLEL_HPP

#include <cstdint>

#include "weylmult/mult.hpp"

namespace weylmult {

// OpenMP kernels over the partitioned basis traversal.  Each worker owns the
// completions of one first-block prefix; partial results merge by addition,
// so the outputs are identical to the serial reference in basis/mult.

BigInt count_basis_parallel(const Weight& lambda, const AlphaVector* filter = nullptr,
                            std::uint64_t cap = 0);

Character character_count_parallel(const Weight& lambda, std::uint64_t cap = 0);

BigInt mult_count_parallel(const Weight& lambda, const Weight& mu, std::uint64_t cap = 0);

}  // namespace weylmult

#endif
