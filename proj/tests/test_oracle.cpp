#include "doctest.h"

#include "weylmult/mult.hpp"
#include "weylmult/oracle.hpp"
#include "weylmult/sweep.hpp"

using namespace weylmult;

namespace {

std::vector<std::int64_t> v(std::initializer_list<std::int64_t> l) { return {l}; }

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("freudenthal frozen values") {
  CHECK(freudenthal_mult(Weight(v({2, 3})), Weight(v({0, 1}))) == 3);
  CHECK(freudenthal_mult(Weight(v({1, 1})), Weight(v({0, 0}))) == 2);
  CHECK(freudenthal_mult(Weight(v({1, 1, 1, 1})), Weight(v({0, 1, 1, 0}))) == 8);
  CHECK(freudenthal_mult(Weight(v({2, 3})), Weight(v({2, 3}))) == 1);
  CHECK(freudenthal_mult(Weight(v({2, 3})), Weight(v({1, 3}))) == 0);  // off lattice
}

TEST_CASE("freudenthal table caches and preloads") {
  FreudenthalTable t(Weight(v({2, 3})));
  CHECK(t.mult(Weight(v({0, 1}))) == 3);
  CHECK(!t.snapshot().empty());

  FreudenthalTable warm(Weight(v({2, 3})));
  for (const auto& [a, value] : t.snapshot()) warm.preload(a, value);
  CHECK(warm.mult(Weight(v({0, 1}))) == 3);
}

TEST_CASE("top row accumulates the coordinates") {
  CHECK(gt_top_row(Weight(v({2, 3}))) == v({5, 3, 0}));
  CHECK(gt_top_row(Weight(v({1, 1, 1, 1}))) == v({4, 3, 2, 1, 0}));
  CHECK_THROWS_AS(gt_top_row(Weight(v({-1, 1}))), std::invalid_argument);
}

TEST_CASE("row sums translate the weight to the epsilon basis") {
  const auto sums = gt_row_sums(Weight(v({2, 3})), Weight(v({0, 1})));
  REQUIRE(sums.has_value());
  CHECK(*sums == v({3, 6, 8}));
  CHECK(!gt_row_sums(Weight(v({2, 3})), Weight(v({1, 3}))).has_value());
  // The highest weight forces the fully stacked pattern sums.
  const auto top = gt_row_sums(Weight(v({2, 3})), Weight(v({2, 3})));
  REQUIRE(top.has_value());
  CHECK(*top == v({5, 8, 8}));
}

TEST_CASE("pattern counts") {
  CHECK(gt_count(Weight(v({2, 3})), Weight(v({0, 1}))) == 3);
  CHECK(gt_count(Weight(v({1, 1, 1, 1})), Weight(v({0, 1, 1, 0}))) == 8);
  for (std::int64_t m = 0; m <= 5; ++m) CHECK(gt_total(Weight(v({m}))) == m + 1);
  CHECK(gt_total(Weight(v({1, 1}))) == 8);
}

TEST_CASE("emitted patterns interlace and have the requested sums") {
  const Weight lambda(v({2, 3}));
  const auto sums = gt_row_sums(lambda, Weight(v({0, 1})));
  int seen = 0;
  enumerate_gt(lambda, sums, [&](const GTPattern& pat) {
    ++seen;
    REQUIRE(pat.rows.size() == 3);
    for (std::size_t r = 0; r + 1 < pat.rows.size(); ++r) {
      const auto& upper = pat.rows[r];
      const auto& lower = pat.rows[r + 1];
      REQUIRE(lower.size() + 1 == upper.size());
      for (std::size_t t = 0; t < lower.size(); ++t) {
        CHECK(upper[t] >= lower[t]);
        CHECK(lower[t] >= upper[t + 1]);
      }
    }
    std::int64_t s = 0;
    for (std::int64_t x : pat.rows.back()) s += x;
    CHECK(s == (*sums)[0]);
    return true;
  });
  CHECK(seen == 3);
}

TEST_CASE("oracles agree with each other and count the dimension") {
  for (int l = 1; l <= 3; ++l) {
    for (const Weight& lambda : all_weights(l, 2)) {
      FreudenthalTable table(lambda);
      const Character support = character(lambda, CharMethod::count);
      BigInt total = 0;
      for (const auto& [mu, m] : support.table) {
        CHECK(table.mult(Weight(mu)) == m);
        CHECK(gt_count(lambda, Weight(mu)) == m);
        total += m;
      }
      CHECK(total == weyl_dim(lambda));
      CHECK(gt_total(lambda) == weyl_dim(lambda));
    }
  }
}

}  // TEST_SUITE
