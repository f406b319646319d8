#include "weylmult/branch.hpp"

#include <stdexcept>

namespace weylmult {

Weight branch_weight(const Weight& lambda, const PiPrimeElement& P) {
  const int l = lambda.rank();
  if (P.rank() != l) throw std::invalid_argument("branch_weight: rank mismatch");
  std::vector<std::int64_t> hw(static_cast<std::size_t>(l - 1));
  for (int j = 1; j < l; ++j) {
    std::int64_t v = lambda.coords[static_cast<std::size_t>(j - 1)];
    v = checked_sub(v, checked_mul(2, P.p[static_cast<std::size_t>(j - 1)]));
    if (j >= 2) v = checked_add(v, P.p[static_cast<std::size_t>(j - 2)]);
    v = checked_add(v, P.p[static_cast<std::size_t>(j)]);
    hw[static_cast<std::size_t>(j - 1)] = v;
  }
  return Weight(std::move(hw));
}

std::vector<BranchComponent> branch(const Weight& lambda) {
  if (lambda.rank() < 2) throw std::invalid_argument("branch requires rank >= 2");
  if (!is_dominant(lambda)) throw std::invalid_argument("branch requires a dominant weight");
  std::vector<BranchComponent> out;
  int s = 0;
  for (const PiPrimeElement& P : enumerate_pi_prime(lambda)) {
    BranchComponent c;
    c.s = ++s;
    c.P = P;
    c.highest_weight = branch_weight(lambda, P);
    if (!is_dominant(c.highest_weight))
      throw std::logic_error("branch: non-dominant component weight");
    c.dim = weyl_dim(c.highest_weight);
    out.push_back(std::move(c));
  }
  return out;
}

bool check_dim_sum(const Weight& lambda) {
  BigInt sum = 0;
  for (const BranchComponent& c : branch(lambda)) sum += c.dim;
  return sum == weyl_dim(lambda);
}

}  // namespace weylmult
