#include "weylmult/oracle.hpp"

#include <stdexcept>

namespace weylmult {

namespace {

// Fundamental-weight coordinates of sum a_i alpha_i at position t (1-based):
// 2 a_t - a_{t-1} - a_{t+1}.
std::int64_t alpha_coord(const std::vector<std::int64_t>& a, int t) {
  const int l = static_cast<int>(a.size());
  std::int64_t v = checked_mul(2, a[static_cast<std::size_t>(t - 1)]);
  if (t > 1) v = checked_sub(v, a[static_cast<std::size_t>(t - 2)]);
  if (t < l) v = checked_sub(v, a[static_cast<std::size_t>(t)]);
  return v;
}

}  // namespace

FreudenthalTable::FreudenthalTable(Weight lambda) : lambda_(std::move(lambda)) {
  if (!is_dominant(lambda_))
    throw std::invalid_argument("FreudenthalTable requires a dominant weight");
}

BigInt FreudenthalTable::mult(const Weight& mu) {
  if (mu.rank() != lambda_.rank()) throw std::invalid_argument("weight rank mismatch");
  const auto a = weight_to_alpha(weight_diff(lambda_, mu));
  if (!a) return 0;
  return mult_alpha(a->coeffs);
}

BigInt FreudenthalTable::mult_alpha(const std::vector<std::int64_t>& a) {
  if (a.size() != static_cast<std::size_t>(lambda_.rank()))
    throw std::invalid_argument("alpha vector rank mismatch");
  std::lock_guard<std::mutex> guard(lock_);
  return compute(a);
}

std::vector<std::pair<std::vector<std::int64_t>, BigInt>> FreudenthalTable::snapshot() const {
  std::lock_guard<std::mutex> guard(lock_);
  return {memo_.begin(), memo_.end()};
}

void FreudenthalTable::preload(const std::vector<std::int64_t>& a, const BigInt& value) {
  std::lock_guard<std::mutex> guard(lock_);
  memo_[a] = value;
}

// The recursion scales the multiplicity at mu = lambda - sum a_i alpha_i by
// |lambda+rho|^2 - |mu+rho|^2 and equates it with twice the sum over positive
// roots alpha and k >= 1 of mult(mu + k alpha) * <mu + k alpha, alpha>.
// With <omega_i, alpha_j> = delta_ij all the pairings below are integers:
// the scale factor is sum_i a_i (2 (lambda_i + 1) - d_i) where d = C a, and
// <nu, alpha_[lo,hi]> = sum_{t=lo..hi} nu_t in fundamental-weight coordinates.
BigInt FreudenthalTable::compute(const std::vector<std::int64_t>& a) {
  const int l = lambda_.rank();
  bool zero = true;
  for (std::int64_t v : a) {
    if (v < 0) return 0;
    if (v != 0) zero = false;
  }
  if (zero) return 1;
  if (auto it = memo_.find(a); it != memo_.end()) return it->second;

  BigInt den = 0;
  for (int t = 1; t <= l; ++t) {
    const std::int64_t li = lambda_.coords[static_cast<std::size_t>(t - 1)];
    const std::int64_t w = checked_sub(checked_mul(2, checked_add(li, 1)), alpha_coord(a, t));
    den += BigInt(static_cast<long>(a[static_cast<std::size_t>(t - 1)])) * BigInt(static_cast<long>(w));
  }

  BigInt num = 0;
  for (const RootInterval& r : positive_roots_ordered(l)) {
    std::vector<std::int64_t> a2 = a;
    for (std::int64_t k = 1;; ++k) {
      bool ok = true;
      for (int t = r.lo; t <= r.hi; ++t) {
        if (--a2[static_cast<std::size_t>(t - 1)] < 0) ok = false;
      }
      if (!ok) break;
      const BigInt m = compute(a2);
      if (m != 0) {
        std::int64_t pairing = 0;
        for (int t = r.lo; t <= r.hi; ++t)
          pairing = checked_add(pairing,
                                checked_sub(lambda_.coords[static_cast<std::size_t>(t - 1)],
                                            alpha_coord(a2, t)));
        num += m * BigInt(static_cast<long>(pairing));
      }
    }
  }
  num *= 2;

  BigInt result;
  if (den == 0) {
    if (num != 0) throw std::logic_error("freudenthal: zero scale with nonzero sum");
    result = 0;
  } else {
    BigInt q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0) throw std::logic_error("freudenthal: inexact division");
    if (q < 0) throw std::logic_error("freudenthal: negative multiplicity");
    result = q;
  }
  memo_[a] = result;
  return result;
}

BigInt freudenthal_mult(const Weight& lambda, const Weight& mu) {
  FreudenthalTable table(lambda);
  return table.mult(mu);
}

std::vector<std::int64_t> gt_top_row(const Weight& lambda) {
  if (!is_dominant(lambda)) throw std::invalid_argument("gt_top_row requires a dominant weight");
  const int l = lambda.rank();
  std::vector<std::int64_t> top(static_cast<std::size_t>(l + 1), 0);
  std::int64_t run = 0;
  for (int i = l; i >= 1; --i) {
    run = checked_add(run, lambda.coords[static_cast<std::size_t>(i - 1)]);
    top[static_cast<std::size_t>(i - 1)] = run;
  }
  return top;
}

std::optional<std::vector<std::int64_t>> gt_row_sums(const Weight& lambda, const Weight& mu) {
  const auto a = weight_to_alpha(weight_diff(lambda, mu));
  if (!a) return std::nullopt;
  const int l = lambda.rank();
  const std::vector<std::int64_t> top = gt_top_row(lambda);
  // Epsilon-basis coordinates of mu: top[i] - a_i + a_{i-1}; the required
  // sum of the length-m row is the sum of the first m of them.
  std::vector<std::int64_t> sums(static_cast<std::size_t>(l + 1), 0);
  std::int64_t run = 0;
  for (int i = 1; i <= l + 1; ++i) {
    std::int64_t eps = top[static_cast<std::size_t>(i - 1)];
    if (i <= l) eps = checked_sub(eps, a->coeffs[static_cast<std::size_t>(i - 1)]);
    if (i >= 2) eps = checked_add(eps, a->coeffs[static_cast<std::size_t>(i - 2)]);
    run = checked_add(run, eps);
    sums[static_cast<std::size_t>(i - 1)] = run;
  }
  return sums;
}

void enumerate_gt(const Weight& lambda, const std::optional<std::vector<std::int64_t>>& row_sums,
                  const std::function<bool(const GTPattern&)>& visit) {
  const int l = lambda.rank();
  GTPattern pat;
  pat.rows.push_back(gt_top_row(lambda));

  // Rows are generated top-down; with prescribed sums the last entry of each
  // row is forced, which prunes most branches immediately.
  const std::function<bool(int)> next_row = [&](int len) -> bool {
    if (len == 0) return visit(pat);
    const std::vector<std::int64_t> upper = pat.rows.back();  // copied: rows reallocates below
    std::vector<std::int64_t> row(static_cast<std::size_t>(len), 0);
    std::int64_t target = 0;
    if (row_sums) target = (*row_sums)[static_cast<std::size_t>(len - 1)];

    const std::function<bool(int, std::int64_t)> fill = [&](int t, std::int64_t partial) -> bool {
      if (row_sums && t == len - 1) {
        const std::int64_t forced = checked_sub(target, partial);
        if (forced < upper[static_cast<std::size_t>(t + 1)] ||
            forced > upper[static_cast<std::size_t>(t)])
          return true;
        row[static_cast<std::size_t>(t)] = forced;
        pat.rows.push_back(row);
        const bool keep_going = next_row(len - 1);
        pat.rows.pop_back();
        return keep_going;
      }
      if (t == len) {
        pat.rows.push_back(row);
        const bool keep_going = next_row(len - 1);
        pat.rows.pop_back();
        return keep_going;
      }
      const std::int64_t lo = upper[static_cast<std::size_t>(t + 1)];
      const std::int64_t hi = upper[static_cast<std::size_t>(t)];
      for (std::int64_t v = lo; v <= hi; ++v) {
        row[static_cast<std::size_t>(t)] = v;
        if (!fill(t + 1, checked_add(partial, v))) return false;
      }
      return true;
    };
    return fill(0, 0);
  };
  next_row(l);
}

BigInt gt_count(const Weight& lambda, const Weight& mu) {
  const auto sums = gt_row_sums(lambda, mu);
  if (!sums) return 0;
  BigInt n = 0;
  enumerate_gt(lambda, sums, [&n](const GTPattern&) {
    ++n;
    return true;
  });
  return n;
}

BigInt gt_total(const Weight& lambda) {
  BigInt n = 0;
  enumerate_gt(lambda, std::nullopt, [&n](const GTPattern&) {
    ++n;
    return true;
  });
  return n;
}

}  // namespace weylmult
