#include "weylmult/mult.hpp"

#include <stdexcept>

#include "weylmult/monomial.hpp"
#include "weylmult/oracle.hpp"

namespace weylmult {

std::optional<BigInt> MultMemo::find(const MemoKey& k) const {
  std::lock_guard<std::mutex> guard(lock_);
  auto it = table_.find(k);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void MultMemo::store(const MemoKey& k, const BigInt& v) {
  std::lock_guard<std::mutex> guard(lock_);
  table_[k] = v;
}

std::size_t MultMemo::size() const {
  std::lock_guard<std::mutex> guard(lock_);
  return table_.size();
}

std::vector<std::pair<MemoKey, BigInt>> MultMemo::snapshot() const {
  std::lock_guard<std::mutex> guard(lock_);
  return {table_.begin(), table_.end()};
}

namespace {

bool selects(const PiPrimeElement& P, const AlphaVector& a) {
  const int l = a.rank();
  if (P.p[static_cast<std::size_t>(l - 1)] != a.coeffs[static_cast<std::size_t>(l - 1)])
    return false;
  for (int i = 1; i < l; ++i)
    if (P.p[static_cast<std::size_t>(i - 1)] > a.coeffs[static_cast<std::size_t>(i - 1)])
      return false;
  return true;
}

}  // namespace

BigInt mult_recursive(const Weight& lambda, const Weight& mu, MultMemo& memo) {
  if (!is_dominant(lambda)) throw std::invalid_argument("mult_recursive requires a dominant weight");
  if (mu.rank() != lambda.rank()) throw std::invalid_argument("weight rank mismatch");
  const auto a = weight_to_alpha(weight_diff(lambda, mu));
  if (!a) return 0;
  const int l = lambda.rank();
  if (l == 1) return a->coeffs[0] <= lambda.coords[0] ? 1 : 0;

  const MemoKey key{l, lambda.coords, mu.coords};
  if (auto hit = memo.find(key)) return *hit;

  BigInt total = 0;
  const Weight mu_rest = restrict_weight(mu);
  for (const PiPrimeElement& P : enumerate_pi_prime(lambda)) {
    if (!selects(P, *a)) continue;
    total += mult_recursive(branch_weight(lambda, P), mu_rest, memo);
  }
  memo.store(key, total);
  return total;
}

std::vector<SelectedComponent> mult_selection(const Weight& lambda, const Weight& mu,
                                              MultMemo& memo) {
  if (!is_dominant(lambda)) throw std::invalid_argument("mult_selection requires a dominant weight");
  if (mu.rank() != lambda.rank()) throw std::invalid_argument("weight rank mismatch");
  std::vector<SelectedComponent> out;
  const auto a = weight_to_alpha(weight_diff(lambda, mu));
  if (!a) return out;
  const int l = lambda.rank();
  if (l == 1) {
    if (a->coeffs[0] <= lambda.coords[0])
      out.push_back(SelectedComponent{1, PiPrimeElement{a->coeffs}, Weight{}, BigInt(1)});
    return out;
  }
  const Weight mu_rest = restrict_weight(mu);
  int s = 0;
  for (const PiPrimeElement& P : enumerate_pi_prime(lambda)) {
    ++s;
    if (!selects(P, *a)) continue;
    SelectedComponent sc;
    sc.s = s;
    sc.P = P;
    sc.highest_weight = branch_weight(lambda, P);
    sc.summand = mult_recursive(sc.highest_weight, mu_rest, memo);
    out.push_back(std::move(sc));
  }
  return out;
}

BigInt mult_count(const Weight& lambda, const Weight& mu, std::uint64_t cap) {
  if (!is_dominant(lambda)) throw std::invalid_argument("mult_count requires a dominant weight");
  if (mu.rank() != lambda.rank()) throw std::invalid_argument("weight rank mismatch");
  const auto a = weight_to_alpha(weight_diff(lambda, mu));
  if (!a) return 0;
  return count_basis(lambda, &*a, cap);
}

BigInt Character::total_mass() const {
  BigInt sum = 0;
  for (const auto& [mu, m] : table) sum += m;
  return sum;
}

std::vector<std::int64_t> support_box(const Weight& lambda) {
  const int l = lambda.rank();
  std::vector<std::int64_t> d(static_cast<std::size_t>(l));
  for (int i = 1; i <= l; ++i)
    d[static_cast<std::size_t>(i - 1)] =
        checked_add(lambda.coords[static_cast<std::size_t>(i - 1)],
                    lambda.coords[static_cast<std::size_t>(l - i)]);
  const auto a = weight_to_alpha(d);
  if (!a) throw std::logic_error("support_box: lambda - w0(lambda) not in the root lattice");
  return a->coeffs;
}

namespace {

// Walks the candidate box and records nonzero multiplicities.
template <typename MultFn>
Character character_from_box(const Weight& lambda, std::uint64_t cap, MultFn&& mult_at) {
  Character ch;
  ch.rank = lambda.rank();
  const std::vector<std::int64_t> box = support_box(lambda);
  std::vector<std::int64_t> a(box.size(), 0);
  std::uint64_t cells = 0;
  for (;;) {
    if (cap != 0 && ++cells > cap) throw resource_limit_error("character cell cap exceeded");
    BigInt m = mult_at(a);
    if (m != 0) ch.table.emplace(weight_minus_alpha(lambda, a).coords, std::move(m));
    std::size_t t = 0;
    while (t < a.size() && a[t] == box[t]) a[t++] = 0;
    if (t == a.size()) break;
    ++a[t];
  }
  return ch;
}

}  // namespace

Character character(const Weight& lambda, CharMethod method, std::uint64_t cap, MultMemo* memo,
                    FreudenthalTable* table) {
  if (!is_dominant(lambda)) throw std::invalid_argument("character requires a dominant weight");
  switch (method) {
    case CharMethod::count: {
      Character ch;
      ch.rank = lambda.rank();
      std::vector<std::int64_t> mu;
      enumerate_basis(
          lambda, nullptr,
          BasisContentVisitor([&](const MonomialIndex&, const std::vector<std::int64_t>& c) {
            weight_minus_alpha_into(lambda, c, mu);
            auto it = ch.table.find(mu);
            if (it == ch.table.end())
              ch.table.emplace(mu, BigInt(1));
            else
              ++it->second;
            return true;
          }),
          cap);
      return ch;
    }
    case CharMethod::recursive: {
      MultMemo local;
      MultMemo& m = memo ? *memo : local;
      return character_from_box(lambda, cap, [&](const std::vector<std::int64_t>& a) {
        return mult_recursive(lambda, weight_minus_alpha(lambda, a), m);
      });
    }
    case CharMethod::freudenthal: {
      FreudenthalTable local(lambda);
      FreudenthalTable& t = table ? *table : local;
      return character_from_box(lambda, cap,
                                [&](const std::vector<std::int64_t>& a) { return t.mult_alpha(a); });
    }
  }
  throw std::logic_error("unreachable");
}

BigInt dim(const Weight& lambda, DimMethod method, std::uint64_t cap) {
  if (!is_dominant(lambda)) throw std::invalid_argument("dim requires a dominant weight");
  switch (method) {
    case DimMethod::enumerate:
      return count_basis(lambda, nullptr, cap);
    case DimMethod::weyl:
      return weyl_dim(lambda);
  }
  throw std::logic_error("unreachable");
}

}  // namespace weylmult
