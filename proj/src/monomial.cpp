#include "weylmult/monomial.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace weylmult {

Ord tuple_compare(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("tuple length mismatch");
  for (std::size_t t = a.size(); t-- > 0;) {
    if (a[t] < b[t]) return Ord::less;
    if (a[t] > b[t]) return Ord::greater;
  }
  return Ord::equal;  // trichotomy: no differing position means equal tuples
}

TriLayout::TriLayout(int rank) : rank_(rank) {
  sub_.resize(static_cast<std::size_t>(size()));
  sup_.resize(static_cast<std::size_t>(size()));
  for (int b = 1; b <= rank; ++b)
    for (int o = 0; o < b; ++o) {
      const int flat = block_begin(b) + o;
      sub_[static_cast<std::size_t>(flat)] = b - o;
      sup_[static_cast<std::size_t>(flat)] = superscript(b);
    }
}

const TriLayout& TriLayout::get(int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  static std::mutex lock;
  static std::map<int, TriLayout> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto it = cache.find(rank);
  if (it == cache.end()) it = cache.emplace(rank, TriLayout(rank)).first;
  return it->second;
}

namespace {

void require_shape(int rank, std::size_t len, const char* what) {
  if (rank < 1 || len != static_cast<std::size_t>(rank * (rank + 1) / 2))
    throw std::invalid_argument(std::string(what) + ": bad tuple length for rank");
}

}  // namespace

Ord compare(const ExponentVector& a, const ExponentVector& b) {
  return tuple_compare(a.entries, b.entries);
}

Ord compare(const MonomialIndex& a, const MonomialIndex& b) {
  return tuple_compare(a.entries, b.entries);
}

bool is_in_pi(const MonomialIndex& K) {
  require_shape(K.rank, K.entries.size(), "is_in_pi");
  const TriLayout& L = TriLayout::get(K.rank);
  for (int b = 1; b <= K.rank; ++b) {
    const int begin = L.block_begin(b);
    if (K.entries[static_cast<std::size_t>(begin + b - 1)] < 0) return false;
    for (int o = 0; o + 1 < b; ++o)
      if (K.entries[static_cast<std::size_t>(begin + o)] <
          K.entries[static_cast<std::size_t>(begin + o + 1)])
        return false;
  }
  return true;
}

ExponentVector exponents_of(const MonomialIndex& K) {
  require_shape(K.rank, K.entries.size(), "exponents_of");
  if (!is_in_pi(K)) throw std::invalid_argument("exponents_of: index not in the index set");
  const TriLayout& L = TriLayout::get(K.rank);
  ExponentVector I;
  I.rank = K.rank;
  I.entries.resize(K.entries.size());
  for (int b = 1; b <= K.rank; ++b) {
    const int begin = L.block_begin(b);
    for (int o = 0; o + 1 < b; ++o)
      I.entries[static_cast<std::size_t>(begin + o)] =
          checked_sub(K.entries[static_cast<std::size_t>(begin + o)],
                      K.entries[static_cast<std::size_t>(begin + o + 1)]);
    I.entries[static_cast<std::size_t>(begin + b - 1)] =
        K.entries[static_cast<std::size_t>(begin + b - 1)];
  }
  return I;
}

MonomialIndex index_of(const ExponentVector& I) {
  require_shape(I.rank, I.entries.size(), "index_of");
  const TriLayout& L = TriLayout::get(I.rank);
  MonomialIndex K;
  K.rank = I.rank;
  K.entries.resize(I.entries.size());
  for (int b = 1; b <= I.rank; ++b) {
    const int begin = L.block_begin(b);
    std::int64_t run = 0;
    for (int o = b - 1; o >= 0; --o) {
      run = checked_add(run, I.entries[static_cast<std::size_t>(begin + o)]);
      K.entries[static_cast<std::size_t>(begin + o)] = run;
    }
  }
  return K;
}

AlphaVector content(const MonomialIndex& K) {
  require_shape(K.rank, K.entries.size(), "content");
  const TriLayout& L = TriLayout::get(K.rank);
  std::vector<std::int64_t> c(static_cast<std::size_t>(K.rank), 0);
  for (int flat = 0; flat < L.size(); ++flat) {
    const int i = L.subscript_at(flat);
    c[static_cast<std::size_t>(i - 1)] =
        checked_add(c[static_cast<std::size_t>(i - 1)], K.entries[static_cast<std::size_t>(flat)]);
  }
  return AlphaVector(std::move(c));
}

std::pair<MonomialIndex, MonomialIndex> split(const MonomialIndex& K) {
  require_shape(K.rank, K.entries.size(), "split");
  const TriLayout& L = TriLayout::get(K.rank);
  MonomialIndex head = K, last = zero_index(K.rank);
  const int begin = L.block_begin(K.rank);
  for (int o = 0; o < K.rank; ++o) {
    last.entries[static_cast<std::size_t>(begin + o)] = K.entries[static_cast<std::size_t>(begin + o)];
    head.entries[static_cast<std::size_t>(begin + o)] = 0;
  }
  return {head, last};
}

MonomialIndex add(const MonomialIndex& a, const MonomialIndex& b) {
  if (a.rank != b.rank) throw std::invalid_argument("add: rank mismatch");
  MonomialIndex out = a;
  for (std::size_t t = 0; t < out.entries.size(); ++t)
    out.entries[t] = checked_add(out.entries[t], b.entries[t]);
  return out;
}

MonomialIndex zero_index(int rank) {
  MonomialIndex K;
  K.rank = rank;
  K.entries.assign(static_cast<std::size_t>(rank * (rank + 1) / 2), 0);
  return K;
}

std::string render_theta(const MonomialIndex& K) {
  require_shape(K.rank, K.entries.size(), "render_theta");
  const TriLayout& L = TriLayout::get(K.rank);
  std::ostringstream os;
  bool first = true;
  for (int flat = 0; flat < L.size(); ++flat) {
    const std::int64_t e = K.entries[static_cast<std::size_t>(flat)];
    if (e == 0) continue;
    if (!first) os << ' ';
    os << 'f' << L.subscript_at(flat) << "^(" << e << ')';
    first = false;
  }
  if (first) return "1";
  return os.str();
}

std::string render_index(const MonomialIndex& K) {
  require_shape(K.rank, K.entries.size(), "render_index");
  const TriLayout& L = TriLayout::get(K.rank);
  std::ostringstream os;
  os << '(';
  for (int b = 1; b <= K.rank; ++b) {
    if (b > 1) os << "; ";
    const int begin = L.block_begin(b);
    for (int o = 0; o < b; ++o) {
      if (o) os << ',';
      os << K.entries[static_cast<std::size_t>(begin + o)];
    }
  }
  os << ')';
  return os.str();
}

}  // namespace weylmult
