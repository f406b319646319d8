#include "doctest.h"

#include "weylmult/mult.hpp"
#include "weylmult/oracle.hpp"
#include "weylmult/sweep.hpp"

using namespace weylmult;

namespace {

std::vector<std::int64_t> v(std::initializer_list<std::int64_t> l) { return {l}; }

}  // namespace

TEST_SUITE("mult") {

TEST_CASE("rank 2 worked value: three summands of one each") {
  MultMemo memo;
  const Weight lambda(v({2, 3})), mu(v({0, 1}));
  CHECK(mult_recursive(lambda, mu, memo) == 3);

  const auto sel = mult_selection(lambda, mu, memo);
  REQUIRE(sel.size() == 3);
  CHECK(sel[0].s == 3);
  CHECK(sel[1].s == 6);
  CHECK(sel[2].s == 9);
  CHECK(sel[0].P.p == v({0, 2}));
  CHECK(sel[1].P.p == v({1, 2}));
  CHECK(sel[2].P.p == v({2, 2}));
  CHECK(sel[0].highest_weight.coords == v({4}));
  CHECK(sel[1].highest_weight.coords == v({2}));
  CHECK(sel[2].highest_weight.coords == v({0}));
  for (const auto& sc : sel) CHECK(sc.summand == 1);
}

TEST_CASE("rank 4 worked value: 4+2+1+1") {
  MultMemo memo;
  const Weight lambda(v({1, 1, 1, 1})), mu(v({0, 1, 1, 0}));
  CHECK(mult_recursive(lambda, mu, memo) == 8);

  const auto sel = mult_selection(lambda, mu, memo);
  REQUIRE(sel.size() == 4);
  CHECK(sel[0].s == 2);
  CHECK(sel[1].s == 3);
  CHECK(sel[2].s == 5);
  CHECK(sel[3].s == 9);
  CHECK(sel[0].highest_weight.coords == v({1, 1, 2}));
  CHECK(sel[1].highest_weight.coords == v({1, 2, 0}));
  CHECK(sel[2].highest_weight.coords == v({2, 0, 1}));
  CHECK(sel[3].highest_weight.coords == v({0, 1, 1}));
  CHECK(sel[0].summand == 4);
  CHECK(sel[1].summand == 2);
  CHECK(sel[2].summand == 1);
  CHECK(sel[3].summand == 1);
}

TEST_CASE("highest weight and off-lattice weights") {
  MultMemo memo;
  CHECK(mult_recursive(Weight(v({2, 3})), Weight(v({2, 3})), memo) == 1);
  CHECK(mult_recursive(Weight(v({2, 3})), Weight(v({1, 3})), memo) == 0);
  CHECK(mult_count(Weight(v({2, 3})), Weight(v({1, 3}))) == 0);
  CHECK_THROWS_AS(mult_recursive(Weight(v({-1, 3})), Weight(v({0, 0})), memo),
                  std::invalid_argument);
}

TEST_CASE("count method matches the worked values") {
  CHECK(mult_count(Weight(v({2, 3})), Weight(v({0, 1}))) == 3);
  CHECK(mult_count(Weight(v({1, 1, 1, 1})), Weight(v({0, 1, 1, 0}))) == 8);
}

TEST_CASE("rank one character is the weight string") {
  const Character ch = character(Weight(v({2})), CharMethod::count);
  REQUIRE(ch.table.size() == 3);
  CHECK(ch.table.at(v({2})) == 1);
  CHECK(ch.table.at(v({0})) == 1);
  CHECK(ch.table.at(v({-2})) == 1);
}

TEST_CASE("adjoint character of rank two") {
  const Character ch = character(Weight(v({1, 1})), CharMethod::count);
  CHECK(ch.table.size() == 7);
  CHECK(ch.table.at(v({0, 0})) == 2);
  CHECK(ch.total_mass() == 8);
  // every key is below the highest weight in the root lattice
  for (const auto& [mu, m] : ch.table)
    CHECK(weight_to_alpha(weight_diff(Weight(v({1, 1})), Weight(mu))).has_value());
}

TEST_CASE("character methods agree") {
  for (const Weight& lambda :
       {Weight(v({2, 3})), Weight(v({1, 1})), Weight(v({2})), Weight(v({1, 0, 1}))}) {
    const Character a = character(lambda, CharMethod::count);
    const Character b = character(lambda, CharMethod::recursive);
    const Character c = character(lambda, CharMethod::freudenthal);
    CHECK(a.table == b.table);
    CHECK(a.table == c.table);
    CHECK(a.total_mass() == weyl_dim(lambda));
  }
}

TEST_CASE("dim methods agree") {
  CHECK(dim(Weight(v({2, 3})), DimMethod::enumerate) == 42);
  CHECK(dim(Weight(v({2, 3})), DimMethod::weyl) == 42);
  CHECK(dim(Weight(v({1, 1, 1, 1})), DimMethod::enumerate) == 1024);
  CHECK(dim(Weight(v({1, 1, 1, 1})), DimMethod::weyl) == 1024);
  CHECK(dim(Weight(v({0, 0, 0})), DimMethod::enumerate) == 1);
  CHECK(dim(Weight(v({0, 0, 0})), DimMethod::weyl) == 1);
  // an irregular rank-5 weight, seven-digit count
  CHECK(dim(Weight(v({4, 2, 0, 1, 3})), DimMethod::enumerate) == 1247400);
  CHECK(dim(Weight(v({4, 2, 0, 1, 3})), DimMethod::weyl) == 1247400);
}

TEST_CASE("weyl group invariance on the support") {
  const Weight lambda(v({2, 1}));
  const Character ch = character(lambda, CharMethod::count);
  for (const auto& [mu, m] : ch.table) {
    for (int i = 1; i <= lambda.rank(); ++i) {
      const Weight r = simple_reflection(Weight(mu), i);
      auto it = ch.table.find(r.coords);
      REQUIRE(it != ch.table.end());
      CHECK(it->second == m);
    }
  }
}

TEST_CASE("the recursion only memoizes lower ranks below the top key") {
  MultMemo memo;
  const Weight lambda(v({1, 1, 1})), mu(v({0, 1, 0}));
  mult_recursive(lambda, mu, memo);
  int top_keys = 0;
  for (const auto& [key, value] : memo.snapshot()) {
    CHECK(key.rank <= 3);
    if (key.rank == 3) {
      ++top_keys;
      CHECK(key.lambda == lambda.coords);
      CHECK(key.mu == mu.coords);
    }
  }
  CHECK(top_keys == 1);
}

TEST_CASE("memo reuse returns identical results") {
  MultMemo memo;
  const Weight lambda(v({2, 3})), mu(v({0, 1}));
  const BigInt first = mult_recursive(lambda, mu, memo);
  const std::size_t entries = memo.size();
  const BigInt second = mult_recursive(lambda, mu, memo);
  CHECK(first == second);
  CHECK(memo.size() == entries);
}

TEST_CASE("small sweep across all four methods") {
  for (int l = 1; l <= 2; ++l) {
    const PropertyResult r = sweep_mult_methods(l, 2);
    INFO(r.detail);
    CHECK(r.pass);
  }
}

}  // TEST_SUITE
