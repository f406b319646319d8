#include "weylmult/sweep.hpp"

#include <atomic>
#include <exception>
#include <random>
#include <set>
#include <sstream>

#include "weylmult/basis.hpp"
#include "weylmult/branch.hpp"
#include "weylmult/monomial.hpp"
#include "weylmult/mult.hpp"
#include "weylmult/oracle.hpp"
#include "weylmult/parallel.hpp"
#include "weylmult/pbw.hpp"

namespace weylmult {

namespace {

std::string render_tuple(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (t) os << ',';
    os << v[t];
  }
  os << ')';
  return os.str();
}

// Fans the cases out to an OpenMP pool.  Mismatches do not stop the loop, so
// the reported counterexample is the first case in input order; exceptions
// abort the sweep and are rethrown.
template <typename Check>
PropertyResult run_sweep(std::string name, std::size_t n, Check&& check) {
  PropertyResult r;
  r.name = std::move(name);
  std::vector<std::string> fail(n);
  std::vector<long long> counted(n, 0);
  std::atomic<bool> failed{false};
  std::exception_ptr error;

#pragma omp parallel for schedule(dynamic)
  for (std::size_t t = 0; t < n; ++t) {
    if (failed.load(std::memory_order_relaxed)) continue;
    try {
      fail[t] = check(t, counted[t]);
    } catch (...) {
#pragma omp critical(weylmult_sweep_error)
      {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  }
  if (failed.load()) std::rethrow_exception(error);

  for (long long c : counted) r.cases += c;
  for (const std::string& f : fail)
    if (!f.empty()) {
      r.pass = false;
      r.detail = f;
      break;
    }
  return r;
}

std::vector<MonomialIndex> all_pi_indices(int rank, int max_entry) {
  const TriLayout& L = TriLayout::get(rank);
  std::vector<MonomialIndex> out;
  MonomialIndex K = zero_index(rank);
  const std::function<void(int, int)> rec = [&](int b, int o) {
    if (b > rank) {
      out.push_back(K);
      return;
    }
    if (o < 0) {
      rec(b + 1, b);  // next block; its choice order starts at offset b
      return;
    }
    const int begin = L.block_begin(b);
    // Within a block, slot o holds a larger subscript than slot o+1, so the
    // value at o must dominate the one chosen at o+1.
    const std::int64_t lo = (o + 1 <= b - 1) ? K.entries[static_cast<std::size_t>(begin + o + 1)] : 0;
    for (std::int64_t v = lo; v <= max_entry; ++v) {
      K.entries[static_cast<std::size_t>(begin + o)] = v;
      rec(b, o - 1);
    }
    K.entries[static_cast<std::size_t>(begin + o)] = 0;
  };
  rec(1, 0);
  return out;
}

std::vector<std::vector<std::int64_t>> all_tuples(int len, int max_entry) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> v(static_cast<std::size_t>(len), 0);
  for (;;) {
    out.push_back(v);
    int t = 0;
    while (t < len && v[static_cast<std::size_t>(t)] == max_entry) v[static_cast<std::size_t>(t++)] = 0;
    if (t == len) break;
    ++v[static_cast<std::size_t>(t)];
  }
  return out;
}

}  // namespace

std::vector<Weight> all_weights(int rank, int max_coord) {
  std::vector<Weight> out;
  for (auto& v : all_tuples(rank, max_coord)) out.push_back(Weight(std::move(v)));
  return out;
}

PropertyResult sweep_dim(int rank, int max_coord) {
  std::ostringstream name;
  name << "basis count = Weyl dimension (rank " << rank << ", coords <= " << max_coord << ")";
  const std::vector<Weight> ws = all_weights(rank, max_coord);
  return run_sweep(name.str(), ws.size(), [&](std::size_t t, long long& counted) -> std::string {
    counted = 1;
    const BigInt got = count_basis(ws[t]);
    const BigInt want = weyl_dim(ws[t]);
    if (got != want) {
      return "lambda=" + render_weight(ws[t]) + ": count=" + got.get_str() +
             " weyl=" + want.get_str();
    }
    return {};
  });
}

PropertyResult sweep_branch(int rank, int max_coord) {
  std::ostringstream name;
  name << "branching dimension sum (rank " << rank << ", coords <= " << max_coord << ")";
  const std::vector<Weight> ws = all_weights(rank, max_coord);
  return run_sweep(name.str(), ws.size(), [&](std::size_t t, long long& counted) -> std::string {
    counted = 1;
    const Weight& lam = ws[t];
    const auto comps = branch(lam);
    BigInt sum = 0;
    const MonomialIndex* prev = nullptr;
    MonomialIndex prev_pad;
    for (const auto& c : comps) {
      if (!is_dominant(c.highest_weight))
        return "lambda=" + render_weight(lam) + ": non-dominant component " +
               render_weight(c.highest_weight);
      MonomialIndex pad = pad_pi_prime(c.P);
      if (prev && compare(*prev, pad) != Ord::less)
        return "lambda=" + render_weight(lam) + ": components not ascending at s=" +
               std::to_string(c.s);
      prev_pad = pad;
      prev = &prev_pad;
      sum += c.dim;
    }
    if (comps.front().highest_weight != restrict_weight(lam))
      return "lambda=" + render_weight(lam) + ": first component is not the restriction";
    if (sum != weyl_dim(lam))
      return "lambda=" + render_weight(lam) + ": dim sum=" + sum.get_str() + " weyl=" +
             weyl_dim(lam).get_str();
    if (!check_dim_sum(lam)) return "lambda=" + render_weight(lam) + ": check_dim_sum false";
    return {};
  });
}

PropertyResult sweep_mult_methods(int rank, int max_coord) {
  std::ostringstream name;
  name << "multiplicity methods agree (rank " << rank << ", coords <= " << max_coord << ")";
  const std::vector<Weight> ws = all_weights(rank, max_coord);
  return run_sweep(name.str(), ws.size(), [&](std::size_t t, long long& counted) -> std::string {
    const Weight& lam = ws[t];
    const Character cc = character(lam, CharMethod::count);
    if (cc.total_mass() != weyl_dim(lam))
      return "lambda=" + render_weight(lam) + ": character mass " + cc.total_mass().get_str() +
             " != " + weyl_dim(lam).get_str();
    FreudenthalTable ft(lam);
    MultMemo memo;
    for (const auto& [mu, m] : cc.table) {
      ++counted;
      const Weight muw{mu};
      const BigInt m_cnt = mult_count(lam, muw);
      const BigInt m_rec = mult_recursive(lam, muw, memo);
      const BigInt m_fr = ft.mult(muw);
      const BigInt m_gt = gt_count(lam, muw);
      if (m_cnt != m || m_rec != m || m_fr != m || m_gt != m)
        return "lambda=" + render_weight(lam) + " mu=" + render_tuple(mu) + ": count=" +
               m_cnt.get_str() + " recursive=" + m_rec.get_str() + " freudenthal=" +
               m_fr.get_str() + " gt=" + m_gt.get_str() + " table=" + m.get_str();
      for (int i = 1; i <= rank; ++i) {
        const Weight refl = simple_reflection(muw, i);
        auto it = cc.table.find(refl.coords);
        const BigInt mr = (it == cc.table.end()) ? BigInt(0) : it->second;
        if (mr != m)
          return "lambda=" + render_weight(lam) + " mu=" + render_tuple(mu) +
                 ": reflection s_" + std::to_string(i) + " breaks invariance";
      }
    }
    return {};
  });
}

PropertyResult sweep_leading_term(int rank, int max_entry) {
  std::ostringstream name;
  name << "leading term and injectivity (rank " << rank << ", entries <= " << max_entry << ")";
  const std::vector<MonomialIndex> ks = all_pi_indices(rank, max_entry);
  PropertyResult r = run_sweep(name.str(), ks.size(),
                               [&](std::size_t t, long long& counted) -> std::string {
                                 counted = 1;
                                 if (!verify_leading_term(ks[t]))
                                   return "K=" + render_index(ks[t]) + ": leading term mismatch";
                                 return {};
                               });
  if (!r.pass) return r;
  std::set<std::vector<std::int64_t>> leads;
  for (const MonomialIndex& K : ks) leads.insert(exponents_of(K).entries);
  if (leads.size() != ks.size()) {
    r.pass = false;
    r.detail = "leading exponent map is not injective on the sweep set";
  }
  return r;
}

PropertyResult sweep_bijections(int rank, int max_entry) {
  std::ostringstream name;
  name << "index/exponent bijection (rank " << rank << ", entries <= " << max_entry << ")";
  const std::vector<MonomialIndex> ks = all_pi_indices(rank, max_entry);
  const std::vector<std::vector<std::int64_t>> is = all_tuples(root_count(rank), max_entry);
  const std::size_t n = ks.size() + is.size();
  return run_sweep(name.str(), n, [&](std::size_t t, long long& counted) -> std::string {
    counted = 1;
    if (t < ks.size()) {
      const MonomialIndex& K = ks[t];
      if (!(index_of(exponents_of(K)) == K))
        return "K=" + render_index(K) + ": roundtrip through exponents failed";
    } else {
      const ExponentVector I{rank, is[t - ks.size()]};
      if (!(exponents_of(index_of(I)) == I))
        return "I=" + render_tuple(I.entries) + ": roundtrip through index failed";
    }
    return {};
  });
}

PropertyResult sweep_confluence(int rank, int words, int max_factors, int max_power,
                                unsigned seed) {
  std::ostringstream name;
  name << "straightening confluence (rank " << rank << ", " << words << " words)";
  std::mt19937 gen(seed);
  const auto& roots = positive_roots_ordered(rank);
  std::uniform_int_distribution<int> len_dist(1, max_factors);
  std::uniform_int_distribution<std::size_t> root_dist(0, roots.size() - 1);
  std::uniform_int_distribution<std::int64_t> pow_dist(1, max_power);
  std::vector<FactorWord> cases;
  cases.reserve(static_cast<std::size_t>(words));
  for (int w = 0; w < words; ++w) {
    FactorWord word;
    const int len = len_dist(gen);
    for (int f = 0; f < len; ++f) word.push_back(Factor{roots[root_dist(gen)], pow_dist(gen)});
    cases.push_back(std::move(word));
  }
  return run_sweep(name.str(), cases.size(), [&](std::size_t t, long long& counted) -> std::string {
    counted = 1;
    const PBWPolynomial a = straighten(rank, cases[t], Strategy::leftmost);
    const PBWPolynomial b = straighten(rank, cases[t], Strategy::rightmost);
    if (!(a == b)) return "word " + render_word(cases[t]) + ": strategies disagree";
    return {};
  });
}

PropertyResult sweep_parallel_agreement(int rank, int max_coord) {
  std::ostringstream name;
  name << "parallel kernels = serial (rank " << rank << ", coords <= " << max_coord << ")";
  const std::vector<Weight> ws = all_weights(rank, max_coord);
  return run_sweep(name.str(), ws.size(), [&](std::size_t t, long long& counted) -> std::string {
    counted = 1;
    const Weight& lam = ws[t];
    if (count_basis(lam) != count_basis_parallel(lam))
      return "lambda=" + render_weight(lam) + ": parallel count differs";
    const Character serial = character(lam, CharMethod::count);
    const Character par = character_count_parallel(lam);
    if (!(serial.table == par.table))
      return "lambda=" + render_weight(lam) + ": parallel character differs";
    std::vector<std::int64_t> half = support_box(lam);
    for (auto& v : half) v /= 2;
    const AlphaVector filter(half);
    if (count_basis(lam, &filter) != count_basis_parallel(lam, &filter))
      return "lambda=" + render_weight(lam) + ": parallel filtered count differs";
    return {};
  });
}

std::vector<PropertyResult> run_all_sweeps(int max_rank, int max_coord) {
  std::vector<PropertyResult> out;
  for (int l = 1; l <= max_rank; ++l) {
    out.push_back(sweep_dim(l, max_coord));
    if (l >= 2) out.push_back(sweep_branch(l, max_coord));
    out.push_back(sweep_mult_methods(l, max_coord));
    out.push_back(sweep_leading_term(l, max_coord));
    out.push_back(sweep_bijections(l, max_coord));
    out.push_back(sweep_confluence(l, 300, 6, 3, 91u + static_cast<unsigned>(l)));
    out.push_back(sweep_parallel_agreement(l, max_coord));
  }
  return out;
}

}  // namespace weylmult
