// Acceptance suite: each criterion prints one PASS/FAIL line, with its case
// count, wall time and time budget.  Exit code is the number of failures.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "weylmult/basis.hpp"
#include "weylmult/branch.hpp"
#include "weylmult/monomial.hpp"
#include "weylmult/mult.hpp"
#include "weylmult/oracle.hpp"
#include "weylmult/pbw.hpp"
#include "weylmult/sweep.hpp"

using namespace weylmult;

namespace {

std::vector<std::int64_t> v(std::initializer_list<std::int64_t> l) { return {l}; }

struct Outcome {
  bool pass = true;
  long long cases = 0;
  std::string detail;

  void fail(const std::string& msg) {
    if (pass) detail = msg;
    pass = false;
  }
  void absorb(const PropertyResult& r) {
    cases += r.cases;
    if (!r.pass) fail(r.name + ": " + r.detail);
  }
};

Outcome criterion_a2_example() {
  Outcome o;
  const Weight lambda(v({2, 3}));
  o.cases = 1;

  if (dim(lambda, DimMethod::enumerate) != 42) o.fail("enumerated dimension != 42");
  if (dim(lambda, DimMethod::weyl) != 42) o.fail("Weyl dimension != 42");

  const auto comps = branch(lambda);
  const std::vector<std::vector<std::int64_t>> expect_hw = {
      {2}, {3}, {4}, {5}, {1}, {2}, {3}, {4}, {0}, {1}, {2}, {3}};
  if (comps.size() != 12) {
    o.fail("expected 12 branch components");
  } else {
    for (std::size_t t = 0; t < comps.size(); ++t)
      if (comps[t].highest_weight.coords != expect_hw[t])
        o.fail("branch component " + std::to_string(t + 1) + " has wrong highest weight");
  }

  const Weight mu(v({0, 1}));
  MultMemo memo;
  if (mult_recursive(lambda, mu, memo) != 3) o.fail("recursive multiplicity != 3");
  if (mult_count(lambda, mu) != 3) o.fail("counted multiplicity != 3");
  if (freudenthal_mult(lambda, mu) != 3) o.fail("freudenthal multiplicity != 3");

  const auto sel = mult_selection(lambda, mu, memo);
  std::vector<int> positions;
  for (const auto& sc : sel) positions.push_back(sc.s);
  if (positions != std::vector<int>{3, 6, 9}) o.fail("recursion must select exactly s = 3, 6, 9");
  for (const auto& sc : sel)
    if (sc.summand != 1) o.fail("each selected summand must be 1");
  return o;
}

Outcome criterion_a4_example() {
  Outcome o;
  const Weight lambda(v({1, 1, 1, 1}));
  o.cases = 1;

  if (dim(lambda, DimMethod::enumerate) != 1024) o.fail("enumerated dimension != 1024");
  if (dim(lambda, DimMethod::weyl) != 1024) o.fail("Weyl dimension != 1024");

  const auto comps = branch(lambda);
  const std::vector<std::vector<std::int64_t>> expect_hw = {
      {1, 1, 1}, {1, 1, 2}, {1, 2, 0}, {1, 2, 1}, {2, 0, 1}, {2, 0, 2}, {2, 1, 0}, {2, 1, 1},
      {0, 1, 1}, {0, 1, 2}, {0, 2, 0}, {0, 2, 1}, {1, 0, 1}, {1, 0, 2}, {1, 1, 0}, {1, 1, 1}};
  if (comps.size() != 16) {
    o.fail("expected 16 branch components");
  } else {
    for (std::size_t t = 0; t < comps.size(); ++t)
      if (comps[t].highest_weight.coords != expect_hw[t])
        o.fail("branch component " + std::to_string(t + 1) + " has wrong highest weight");
  }

  const Weight mu(v({0, 1, 1, 0}));
  MultMemo memo;
  if (mult_recursive(lambda, mu, memo) != 8) o.fail("recursive multiplicity != 8");
  if (mult_count(lambda, mu) != 8) o.fail("counted multiplicity != 8");
  if (freudenthal_mult(lambda, mu) != 8) o.fail("freudenthal multiplicity != 8");

  const auto sel = mult_selection(lambda, mu, memo);
  std::vector<int> positions;
  std::vector<std::string> summands;
  for (const auto& sc : sel) {
    positions.push_back(sc.s);
    summands.push_back(sc.summand.get_str());
  }
  if (positions != std::vector<int>{2, 3, 5, 9}) o.fail("recursion must select exactly s = 2, 3, 5, 9");
  if (summands != std::vector<std::string>{"4", "2", "1", "1"}) o.fail("summands must be 4+2+1+1");
  return o;
}

Outcome criterion_dim_sweep() {
  Outcome o;
  for (int l = 1; l <= 3; ++l) o.absorb(sweep_dim(l, 3));
  o.absorb(sweep_dim(4, 2));
  return o;
}

Outcome criterion_branch_sweep() {
  Outcome o;
  for (int l = 2; l <= 3; ++l) o.absorb(sweep_branch(l, 3));
  o.absorb(sweep_branch(4, 2));
  return o;
}

Outcome criterion_mult_sweep() {
  Outcome o;
  for (int l = 1; l <= 3; ++l) o.absorb(sweep_mult_methods(l, 3));
  o.absorb(sweep_mult_methods(4, 2));
  return o;
}

Outcome criterion_leading_sweep() {
  Outcome o;
  for (int l = 1; l <= 3; ++l) o.absorb(sweep_leading_term(l, 2));
  return o;
}

Outcome criterion_confluence() {
  Outcome o;
  o.absorb(sweep_confluence(1, 334, 6, 3, 1001));
  o.absorb(sweep_confluence(2, 333, 6, 3, 1002));
  o.absorb(sweep_confluence(3, 333, 6, 3, 1003));
  return o;
}

Outcome criterion_bijections() {
  Outcome o;
  for (int l = 1; l <= 3; ++l) o.absorb(sweep_bijections(l, 2));
  return o;
}

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "A2 highest weight (2,3) worked example", 1.0, criterion_a2_example},
      {2, "A4 highest weight (1,1,1,1) worked example", 5.0, criterion_a4_example},
      {3, "basis count equals Weyl dimension sweep", 60.0, criterion_dim_sweep},
      {4, "branching dimension sum sweep", 60.0, criterion_branch_sweep},
      {5, "multiplicity method agreement sweep", 300.0, criterion_mult_sweep},
      {6, "leading term sweep", 60.0, criterion_leading_sweep},
      {7, "straightening confluence", 60.0, criterion_confluence},
      {8, "index/exponent bijection roundtrips", 10.0, criterion_bijections},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_seconds)
      o.fail("time limit exceeded: " + std::to_string(secs) + "s");

    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name
         << " [cases=" << o.cases << ", " << std::fixed << std::setprecision(2) << secs
         << "s, limit " << std::setprecision(0) << c.limit_seconds << "s]";
    if (!o.pass) line << " -- " << o.detail;
    std::cout << line.str() << '\n';
    if (!o.pass) ++failures;
  }
  return failures;
}
