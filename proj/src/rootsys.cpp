#include "weylmult/rootsys.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace weylmult {

namespace {

void require_rank(int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
}

}  // namespace

std::vector<std::vector<std::int64_t>> cartan_matrix(int rank) {
  require_rank(rank);
  std::vector<std::vector<std::int64_t>> c(static_cast<std::size_t>(rank),
                                           std::vector<std::int64_t>(static_cast<std::size_t>(rank), 0));
  for (int i = 1; i <= rank; ++i)
    for (int j = 1; j <= rank; ++j)
      c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = cartan_entry(i, j);
  return c;
}

const std::vector<RootInterval>& positive_roots_ordered(int rank) {
  require_rank(rank);
  static std::mutex lock;
  static std::map<int, std::vector<RootInterval>> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto it = cache.find(rank);
  if (it == cache.end()) {
    std::vector<RootInterval> roots;
    roots.reserve(static_cast<std::size_t>(root_count(rank)));
    for (int b = 1; b <= rank; ++b)
      for (int i = b; i >= 1; --i) roots.push_back(RootInterval{i, b});
    it = cache.emplace(rank, std::move(roots)).first;
  }
  return it->second;
}

std::vector<std::int64_t> weight_diff(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("weight rank mismatch");
  std::vector<std::int64_t> d(a.coords.size());
  for (std::size_t t = 0; t < d.size(); ++t) d[t] = checked_sub(a.coords[t], b.coords[t]);
  return d;
}

std::optional<AlphaVector> weight_to_alpha(const std::vector<std::int64_t>& d) {
  const int l = static_cast<int>(d.size());
  require_rank(l);
  // Thomas elimination on the tridiagonal system (diag 2, off-diagonal -1),
  // exact over the rationals.
  std::vector<BigRat> cp(static_cast<std::size_t>(l));
  std::vector<BigRat> dp(static_cast<std::size_t>(l));
  BigRat m(2);
  cp[0] = BigRat(-1) / m;
  dp[0] = BigRat(static_cast<long>(d[0])) / m;
  for (int t = 1; t < l; ++t) {
    m = BigRat(2) + cp[static_cast<std::size_t>(t - 1)];
    cp[static_cast<std::size_t>(t)] = BigRat(-1) / m;
    dp[static_cast<std::size_t>(t)] =
        (BigRat(static_cast<long>(d[static_cast<std::size_t>(t)])) + dp[static_cast<std::size_t>(t - 1)]) / m;
  }
  std::vector<BigRat> x(static_cast<std::size_t>(l));
  x[static_cast<std::size_t>(l - 1)] = dp[static_cast<std::size_t>(l - 1)];
  for (int t = l - 2; t >= 0; --t)
    x[static_cast<std::size_t>(t)] =
        dp[static_cast<std::size_t>(t)] - cp[static_cast<std::size_t>(t)] * x[static_cast<std::size_t>(t + 1)];

  std::vector<std::int64_t> a(static_cast<std::size_t>(l));
  for (int t = 0; t < l; ++t) {
    BigRat v = x[static_cast<std::size_t>(t)];
    v.canonicalize();
    if (v.get_den() != 1 || v.get_num() < 0) return std::nullopt;
    if (!v.get_num().fits_slong_p()) throw std::overflow_error("alpha coefficient out of range");
    a[static_cast<std::size_t>(t)] = v.get_num().get_si();
  }
  return AlphaVector(std::move(a));
}

Weight alpha_to_weight(const AlphaVector& a) {
  const int l = a.rank();
  require_rank(l);
  std::vector<std::int64_t> w(static_cast<std::size_t>(l), 0);
  for (int i = 1; i <= l; ++i) {
    std::int64_t v = checked_mul(2, a.coeffs[static_cast<std::size_t>(i - 1)]);
    if (i > 1) v = checked_sub(v, a.coeffs[static_cast<std::size_t>(i - 2)]);
    if (i < l) v = checked_sub(v, a.coeffs[static_cast<std::size_t>(i)]);
    w[static_cast<std::size_t>(i - 1)] = v;
  }
  return Weight(std::move(w));
}

void weight_minus_alpha_into(const Weight& lambda, const std::vector<std::int64_t>& a,
                             std::vector<std::int64_t>& out) {
  const int l = lambda.rank();
  if (a.size() != static_cast<std::size_t>(l)) throw std::invalid_argument("alpha rank mismatch");
  out.resize(static_cast<std::size_t>(l));
  for (int i = 1; i <= l; ++i) {
    std::int64_t drop = checked_mul(2, a[static_cast<std::size_t>(i - 1)]);
    if (i > 1) drop = checked_sub(drop, a[static_cast<std::size_t>(i - 2)]);
    if (i < l) drop = checked_sub(drop, a[static_cast<std::size_t>(i)]);
    out[static_cast<std::size_t>(i - 1)] =
        checked_sub(lambda.coords[static_cast<std::size_t>(i - 1)], drop);
  }
}

Weight weight_minus_alpha(const Weight& lambda, const std::vector<std::int64_t>& a) {
  Weight mu;
  weight_minus_alpha_into(lambda, a, mu.coords);
  return mu;
}

bool is_dominant(const Weight& w) {
  for (std::int64_t c : w.coords)
    if (c < 0) return false;
  return true;
}

Weight restrict_weight(const Weight& w) {
  if (w.rank() < 2) throw std::invalid_argument("no subalgebra at rank 1");
  return Weight(std::vector<std::int64_t>(w.coords.begin(), w.coords.end() - 1));
}

BigInt weyl_dim(const Weight& w) {
  const int l = w.rank();
  require_rank(l);
  if (!is_dominant(w)) throw std::invalid_argument("weyl_dim requires a dominant weight");
  BigInt num = 1, den = 1;
  for (int i = 1; i <= l; ++i) {
    std::int64_t s = 0;
    for (int j = i; j <= l; ++j) {
      s = checked_add(s, checked_add(w.coords[static_cast<std::size_t>(j - 1)], 1));
      num *= BigInt(static_cast<long>(s));
      den *= BigInt(static_cast<long>(j - i + 1));
    }
  }
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("weyl_dim: inexact division");
  return q;
}

Weight simple_reflection(const Weight& mu, int i) {
  const int l = mu.rank();
  if (i < 1 || i > l) throw std::invalid_argument("reflection index out of range");
  std::vector<std::int64_t> out = mu.coords;
  const std::int64_t mi = mu.coords[static_cast<std::size_t>(i - 1)];
  for (int j = 1; j <= l; ++j)
    out[static_cast<std::size_t>(j - 1)] =
        checked_sub(out[static_cast<std::size_t>(j - 1)], checked_mul(mi, cartan_entry(i, j)));
  return Weight(std::move(out));
}

std::string render_weight(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (int t = 0; t < w.rank(); ++t) {
    if (t) os << ',';
    os << w.coords[static_cast<std::size_t>(t)];
  }
  os << ')';
  return os.str();
}

}  // namespace weylmult
