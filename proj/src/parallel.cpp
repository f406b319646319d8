#include "weylmult/parallel.hpp"

#include <atomic>
#include <exception>

#include <omp.h>

#include "weylmult/monomial.hpp"
#include "weylmult/oracle.hpp"

namespace weylmult {

namespace {

// Shared stop/cap/error state for one parallel traversal.
struct TraversalGuard {
  explicit TraversalGuard(std::uint64_t cap_) : cap(cap_) {}

  const std::uint64_t cap;
  std::atomic<std::uint64_t> seen{0};
  std::atomic<bool> over{false};
  std::atomic<bool> failed{false};
  std::exception_ptr error;

  bool stopped() const {
    return over.load(std::memory_order_relaxed) || failed.load(std::memory_order_relaxed);
  }

  // One emitted element; false once the cap is crossed.
  bool tick() {
    if (cap == 0) return true;
    if (seen.fetch_add(1, std::memory_order_relaxed) + 1 > cap) {
      over.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  void capture() {
#pragma omp critical(weylmult_parallel_error)
    {
      if (!failed.exchange(true)) error = std::current_exception();
    }
  }

  void finish() const {
    if (failed.load()) std::rethrow_exception(error);
    if (over.load()) throw resource_limit_error("basis enumeration cap exceeded");
  }
};

}  // namespace

BigInt count_basis_parallel(const Weight& lambda, const AlphaVector* filter, std::uint64_t cap) {
  const std::vector<BasisPrefix> prefixes = enumerate_first_block(lambda, filter);
  std::vector<std::uint64_t> partial(prefixes.size(), 0);
  TraversalGuard guard(cap);

#pragma omp parallel for schedule(dynamic)
  for (std::size_t t = 0; t < prefixes.size(); ++t) {
    if (guard.stopped()) continue;
    try {
      std::uint64_t local = 0;
      enumerate_from_prefix(lambda, filter, prefixes[t], [&](const MonomialIndex&) {
        if (!guard.tick()) return false;
        ++local;
        return true;
      });
      partial[t] = local;  // one write per task
    } catch (...) {
      guard.capture();
    }
  }
  guard.finish();

  BigInt total = 0;
  for (std::uint64_t c : partial) total += BigInt(static_cast<unsigned long>(c));
  return total;
}

Character character_count_parallel(const Weight& lambda, std::uint64_t cap) {
  if (!is_dominant(lambda)) throw std::invalid_argument("character requires a dominant weight");
  const std::vector<BasisPrefix> prefixes = enumerate_first_block(lambda, nullptr);

  struct alignas(64) ThreadTable {
    std::map<std::vector<std::int64_t>, BigInt> table;
  };
  std::vector<ThreadTable> per_thread(static_cast<std::size_t>(omp_get_max_threads()));
  TraversalGuard guard(cap);

#pragma omp parallel for schedule(dynamic)
  for (std::size_t t = 0; t < prefixes.size(); ++t) {
    if (guard.stopped()) continue;
    try {
      auto& mine = per_thread[static_cast<std::size_t>(omp_get_thread_num())].table;
      std::vector<std::int64_t> mu;
      enumerate_from_prefix(
          lambda, nullptr, prefixes[t],
          BasisContentVisitor([&](const MonomialIndex&, const std::vector<std::int64_t>& c) {
            if (!guard.tick()) return false;
            weight_minus_alpha_into(lambda, c, mu);
            auto it = mine.find(mu);
            if (it == mine.end())
              mine.emplace(mu, BigInt(1));
            else
              ++it->second;
            return true;
          }));
    } catch (...) {
      guard.capture();
    }
  }
  guard.finish();

  // Additive merge: the result does not depend on how tasks were assigned.
  Character ch;
  ch.rank = lambda.rank();
  for (auto& part : per_thread)
    for (auto& [mu, m] : part.table) {
      auto it = ch.table.find(mu);
      if (it == ch.table.end())
        ch.table.emplace(mu, m);
      else
        it->second += m;
    }
  return ch;
}

BigInt mult_count_parallel(const Weight& lambda, const Weight& mu, std::uint64_t cap) {
  if (!is_dominant(lambda)) throw std::invalid_argument("mult_count requires a dominant weight");
  if (mu.rank() != lambda.rank()) throw std::invalid_argument("weight rank mismatch");
  const auto a = weight_to_alpha(weight_diff(lambda, mu));
  if (!a) return 0;
  return count_basis_parallel(lambda, &*a, cap);
}

}  // namespace weylmult
