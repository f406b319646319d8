#include "doctest.h"

#include <map>
#include <set>

#include "weylmult/basis.hpp"
#include "weylmult/monomial.hpp"

using namespace weylmult;

namespace {

std::vector<std::int64_t> v(std::initializer_list<std::int64_t> l) { return {l}; }

std::vector<MonomialIndex> collect(const Weight& lambda, const AlphaVector* filter = nullptr) {
  std::vector<MonomialIndex> out;
  enumerate_basis(lambda, filter, [&](const MonomialIndex& K) {
    out.push_back(K);
    return true;
  });
  return out;
}

// Eigenvalue bookkeeping recomputed the long way: walk every entry that was
// applied before (i, j) and pair its content against the i-th coroot.
std::int64_t bound_via_cartan(const Weight& lambda, const MonomialIndex& K, int i, int j) {
  const TriLayout& L = TriLayout::get(K.rank);
  std::vector<std::int64_t> c(static_cast<std::size_t>(K.rank), 0);
  for (int q = 1; q <= j; ++q) {
    const int top = K.rank - q + 1;
    for (int m = 1; m <= top; ++m) {
      if (q == j && m >= i) break;
      c[static_cast<std::size_t>(m - 1)] += K.entries[static_cast<std::size_t>(L.pos(m, q))];
    }
  }
  std::int64_t val = lambda.coords[static_cast<std::size_t>(i - 1)];
  for (int m = 1; m <= K.rank; ++m)
    val -= cartan_entry(i, m) * c[static_cast<std::size_t>(m - 1)];
  return val;
}

}  // namespace

TEST_SUITE("basis") {

TEST_CASE("bound formulas at rank 2") {
  BoundContext ctx(Weight(v({2, 3})));
  CHECK(ctx.bound(1, 1) == 2);
  ctx.set(1, 1, 1);
  CHECK(ctx.bound(2, 1) == 4);  // 3 + k_1^1
  ctx.set(2, 1, 1);
  CHECK(ctx.bound(1, 2) == 1);  // 2 + k_2^1 - 2 k_1^1
}

TEST_CASE("bound at rank 4 reads only the previous subscript in block one") {
  BoundContext ctx(Weight(v({1, 2, 3, 4})));
  ctx.set(1, 1, 1);
  ctx.set(2, 1, 2);
  ctx.set(3, 1, 2);
  CHECK(ctx.bound(4, 1) == 6);  // lambda_4 + k_3^1
}

TEST_CASE("bound demands its inputs") {
  BoundContext ctx(Weight(v({2, 3})));
  CHECK_THROWS_AS(ctx.bound(2, 1), std::logic_error);  // k_1^1 unset
  CHECK_THROWS_AS(ctx.bound(1, 2), std::logic_error);
  CHECK_THROWS_AS(ctx.set(0, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(ctx.set(1, 1, -1), std::invalid_argument);
}

TEST_CASE("bound equals the from-scratch coroot pairing on every prefix") {
  for (const Weight lambda : {Weight(v({2, 3})), Weight(v({1, 2, 1}))}) {
    const TriLayout& L = TriLayout::get(lambda.rank());
    for (const MonomialIndex& K : collect(lambda)) {
      BoundContext ctx(lambda);
      for (int j = 1; j <= lambda.rank(); ++j) {
        const int top = lambda.rank() - j + 1;
        for (int i = 1; i <= top; ++i) {
          CHECK(ctx.bound(i, j) == bound_via_cartan(lambda, K, i, j));
          ctx.set(i, j, K.entries[static_cast<std::size_t>(L.pos(i, j))]);
        }
      }
    }
  }
}

TEST_CASE("rank one is the weight string") {
  for (std::int64_t m = 0; m <= 4; ++m) {
    const auto ks = collect(Weight(v({m})));
    REQUIRE(ks.size() == static_cast<std::size_t>(m + 1));
    for (std::int64_t t = 0; t <= m; ++t) CHECK(ks[static_cast<std::size_t>(t)].entries == std::vector<std::int64_t>{t});
  }
}

TEST_CASE("frozen cardinalities") {
  CHECK(count_basis(Weight(v({2, 3}))) == 42);
  const AlphaVector filter(v({2, 2}));
  CHECK(count_basis(Weight(v({2, 3})), &filter) == 3);
  CHECK_THROWS_AS(count_basis(Weight(v({-1, 3}))), std::invalid_argument);
}

TEST_CASE("every emitted index is a member and respects the last-block bound") {
  for (const Weight lambda : {Weight(v({2, 3})), Weight(v({1, 2, 1}))}) {
    for (const MonomialIndex& K : collect(lambda)) {
      CHECK(is_in_pi(K));
      CHECK(in_basis(lambda, K));
      for (int i = 1; i <= lambda.rank(); ++i) {
        const std::int64_t prev = (i >= 2) ? K.k(i - 1, 1) : 0;
        CHECK(K.k(i, 1) - prev <= lambda.coords[static_cast<std::size_t>(i - 1)]);
      }
    }
  }
}

TEST_CASE("filtered stream equals the content-matched subset") {
  const Weight lambda(v({2, 3}));
  const auto all = collect(lambda);
  std::map<std::vector<std::int64_t>, std::vector<MonomialIndex>> by_content;
  for (const MonomialIndex& K : all) by_content[content(K).coeffs].push_back(K);
  for (const auto& [c, subset] : by_content) {
    const AlphaVector filter{c};
    const auto filtered = collect(lambda, &filter);
    CHECK(filtered.size() == subset.size());
    for (std::size_t t = 0; t < filtered.size(); ++t) CHECK(filtered[t] == subset[t]);
  }
  // A content with no matches yields an empty stream.
  const AlphaVector none(v({9, 9}));
  CHECK(collect(lambda, &none).empty());
}

TEST_CASE("bounded last-block indices at rank 2, highest weight (2,3)") {
  const auto ps = enumerate_pi_prime(Weight(v({2, 3})));
  REQUIRE(ps.size() == 12);
  const std::vector<std::vector<std::int64_t>> expect = {
      {0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2},
      {1, 3}, {1, 4}, {2, 2}, {2, 3}, {2, 4}, {2, 5}};
  for (std::size_t t = 0; t < ps.size(); ++t) CHECK(ps[t].p == expect[t]);
  // ascending in the padded tuple order
  for (std::size_t t = 0; t + 1 < ps.size(); ++t)
    CHECK(compare(pad_pi_prime(ps[t]), pad_pi_prime(ps[t + 1])) == Ord::less);
}

TEST_CASE("bounded last-block indices at rank 4 and rank 1") {
  const auto ps = enumerate_pi_prime(Weight(v({1, 1, 1, 1})));
  REQUIRE(ps.size() == 16);
  CHECK(ps.back().p == v({1, 2, 3, 4}));

  const auto ps1 = enumerate_pi_prime(Weight(v({3})));
  REQUIRE(ps1.size() == 4);
  for (std::int64_t t = 0; t <= 3; ++t) CHECK(ps1[static_cast<std::size_t>(t)].p == std::vector<std::int64_t>{t});
}

TEST_CASE("padded last-block indices belong to the bounded basis set") {
  for (const Weight lambda : {Weight(v({2, 3})), Weight(v({1, 1, 1}))}) {
    for (const PiPrimeElement& P : enumerate_pi_prime(lambda))
      CHECK(in_basis(lambda, pad_pi_prime(P)));
  }
}

TEST_CASE("in_basis rejects out-of-bound indices") {
  const Weight lambda(v({2, 3}));
  MonomialIndex K = zero_index(2);
  K.entries = v({0, 0, 3});  // k_1^1 = 3 > lambda_1
  CHECK(!in_basis(lambda, K));
  K.entries = v({0, 1, 2});  // not in the index set
  CHECK(!in_basis(lambda, K));
}

TEST_CASE("stream grouped by its last block reproduces the filtration layers") {
  // Each group of basis indices sharing one last block is a layer of the
  // restriction filtration; its size must be the branch component dimension.
  const Weight lambda(v({2, 3}));
  std::map<std::vector<std::int64_t>, std::int64_t> layer;
  for (const MonomialIndex& K : collect(lambda))
    ++layer[{K.k(1, 1), K.k(2, 1)}];

  const std::vector<std::int64_t> expect_sizes = {3, 4, 5, 6, 2, 3, 4, 5, 1, 2, 3, 4};
  const auto ps = enumerate_pi_prime(lambda);
  REQUIRE(layer.size() == ps.size());
  for (std::size_t s = 0; s < ps.size(); ++s) {
    auto it = layer.find(ps[s].p);
    REQUIRE(it != layer.end());
    CHECK(it->second == expect_sizes[s]);
  }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(count_basis(Weight(v({2, 3})), nullptr, 10), resource_limit_error);
  CHECK(count_basis(Weight(v({2, 3})), nullptr, 42) == 42);
}

TEST_CASE("visitor can stop the stream") {
  int seen = 0;
  enumerate_basis(Weight(v({2, 3})), nullptr, [&](const MonomialIndex&) {
    return ++seen < 5;
  });
  CHECK(seen == 5);
}

TEST_CASE("prefix partition covers the stream exactly once") {
  const Weight lambda(v({1, 2, 1}));
  const auto whole = collect(lambda);
  std::vector<MonomialIndex> stitched;
  for (const BasisPrefix& pre : enumerate_first_block(lambda, nullptr))
    enumerate_from_prefix(lambda, nullptr, pre, [&](const MonomialIndex& K) {
      stitched.push_back(K);
      return true;
    });
  REQUIRE(stitched.size() == whole.size());
  for (std::size_t t = 0; t < whole.size(); ++t) CHECK(stitched[t] == whole[t]);
}

}  // TEST_SUITE
