#include "weylmult/pbw.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace weylmult {

namespace {

struct PendingWord {
  FactorWord word;
  BigInt coeff;
};

void require_root(int rank, const RootInterval& r) {
  if (r.lo < 1 || r.lo > r.hi || r.hi > rank)
    throw std::invalid_argument("root interval out of range for rank");
}

// Signed structure constants for all interval pairs, one table per rank:
// [f_x, f_y] = sign * f_bracket, with bracket = -1 when the vectors commute.
// Only intervals that concatenate bracket to the union; the sign is +1 when
// x starts right after y ends.
struct PairRel {
  int bracket = -1;
  int sign = 0;
};

class RelationTable {
 public:
  static const RelationTable& get(int rank) {
    static std::mutex lock;
    static std::map<int, RelationTable> cache;
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(rank);
    if (it == cache.end()) it = cache.emplace(rank, RelationTable(rank)).first;
    return it->second;
  }

  const PairRel& rel(int x, int y) const {
    return table_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(y)];
  }

 private:
  explicit RelationTable(int rank) : n_(root_count(rank)) {
    const auto& roots = positive_roots_ordered(rank);
    table_.resize(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        const RootInterval& rx = roots[static_cast<std::size_t>(x)];
        const RootInterval& ry = roots[static_cast<std::size_t>(y)];
        PairRel& r = table_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) +
                            static_cast<std::size_t>(y)];
        if (ry.hi + 1 == rx.lo) {
          r.bracket = root_position(ry.lo, rx.hi);
          r.sign = 1;
        } else if (rx.hi + 1 == ry.lo) {
          r.bracket = root_position(rx.lo, ry.hi);
          r.sign = -1;
        }
      }
  }

  int n_;
  std::vector<PairRel> table_;
};

BigInt binom(std::int64_t n, std::int64_t k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// A pair (t, t+1) is reducible when the roots are equal (merge) or the left
// root comes later in the fixed order (swap or bracket expansion).
int find_reducible(const FactorWord& w, Strategy strategy) {
  const int n = static_cast<int>(w.size());
  if (strategy == Strategy::leftmost) {
    for (int t = 0; t + 1 < n; ++t) {
      const int px = root_position(w[t].root.lo, w[t].root.hi);
      const int py = root_position(w[t + 1].root.lo, w[t + 1].root.hi);
      if (px >= py) return t;
    }
  } else {
    for (int t = n - 2; t >= 0; --t) {
      const int px = root_position(w[t].root.lo, w[t].root.hi);
      const int py = root_position(w[t + 1].root.lo, w[t + 1].root.hi);
      if (px >= py) return t;
    }
  }
  return -1;
}

FactorWord splice(const FactorWord& w, int t, std::initializer_list<Factor> repl) {
  FactorWord out;
  out.reserve(w.size() + repl.size());
  out.insert(out.end(), w.begin(), w.begin() + t);
  for (const Factor& f : repl)
    if (f.power > 0) out.push_back(f);
  out.insert(out.end(), w.begin() + t + 2, w.end());
  return out;
}

}  // namespace

PBWPolynomial straighten(int rank, const FactorWord& word, Strategy strategy,
                         std::size_t term_cap) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  FactorWord start;
  start.reserve(word.size());
  for (const Factor& f : word) {
    require_root(rank, f.root);
    if (f.power < 1) throw std::invalid_argument("factor powers must be >= 1");
    start.push_back(f);
  }

  const RelationTable& relations = RelationTable::get(rank);
  const auto& roots = positive_roots_ordered(rank);

  PBWPolynomial result;
  result.rank = rank;
  std::vector<PendingWord> stack;
  stack.push_back(PendingWord{std::move(start), BigInt(1)});

  // Termination: each step strictly lowers (total divided-power degree,
  // inverted factor pairs, word length) lexicographically -- the bracket
  // terms with m >= 1 drop the degree, a commuting swap or the m = 0 term
  // keeps the degree and removes an inversion, and a merge keeps both and
  // shortens the word.
  while (!stack.empty()) {
    if (stack.size() + result.terms.size() > term_cap)
      throw resource_limit_error("straighten: term cap exceeded");
    PendingWord cur = std::move(stack.back());
    stack.pop_back();

    const int t = find_reducible(cur.word, strategy);
    if (t < 0) {
      std::vector<std::int64_t> exps(static_cast<std::size_t>(root_count(rank)), 0);
      for (const Factor& f : cur.word)
        exps[static_cast<std::size_t>(root_position(f.root.lo, f.root.hi))] = f.power;
      auto [it, inserted] = result.terms.emplace(std::move(exps), cur.coeff);
      if (!inserted) {
        it->second += cur.coeff;
        if (it->second == 0) result.terms.erase(it);
      }
      continue;
    }

    const Factor left = cur.word[static_cast<std::size_t>(t)];
    const Factor right = cur.word[static_cast<std::size_t>(t + 1)];
    if (left.root == right.root) {
      const std::int64_t total = checked_add(left.power, right.power);
      cur.coeff *= binom(total, left.power);
      stack.push_back(PendingWord{splice(cur.word, t, {Factor{left.root, total}}), std::move(cur.coeff)});
      continue;
    }
    const PairRel& rel = relations.rel(root_position(left.root.lo, left.root.hi),
                                       root_position(right.root.lo, right.root.hi));
    if (rel.bracket >= 0) {
      // An out-of-order concatenating pair always has the later interval on
      // the left, so only the positive orientation can appear here.
      const RootInterval joined = roots[static_cast<std::size_t>(rel.bracket)];
      const std::int64_t mmax = std::min(left.power, right.power);
      for (std::int64_t m = 0; m <= mmax; ++m)
        stack.push_back(PendingWord{splice(cur.word, t,
                                           {Factor{joined, m}, Factor{right.root, right.power - m},
                                            Factor{left.root, left.power - m}}),
                                    cur.coeff});
    } else {
      stack.push_back(PendingWord{splice(cur.word, t, {right, left}), std::move(cur.coeff)});
    }
  }
  return result;
}

FactorWord theta_word(const MonomialIndex& K) {
  const TriLayout& L = TriLayout::get(K.rank);
  FactorWord w;
  for (int flat = 0; flat < L.size(); ++flat) {
    const std::int64_t e = K.entries[static_cast<std::size_t>(flat)];
    if (e > 0) {
      const int i = L.subscript_at(flat);
      w.push_back(Factor{RootInterval{i, i}, e});
    }
  }
  return w;
}

PBWPolynomial theta_expand(const MonomialIndex& K, std::size_t term_cap) {
  if (!is_in_pi(K)) throw std::invalid_argument("theta_expand: index not in the index set");
  return straighten(K.rank, theta_word(K), Strategy::leftmost, term_cap);
}

std::pair<ExponentVector, BigInt> leading(const PBWPolynomial& p) {
  if (p.terms.empty()) throw std::invalid_argument("leading: zero polynomial");
  const auto& [exps, coeff] = *p.terms.rbegin();
  return {ExponentVector{p.rank, exps}, coeff};
}

bool verify_leading_term(const MonomialIndex& K, std::size_t term_cap) {
  const auto [lead, coeff] = leading(theta_expand(K, term_cap));
  return coeff == 1 && lead == exponents_of(K);
}

FactorWord word_of(const ExponentVector& I) {
  const auto& roots = positive_roots_ordered(I.rank);
  FactorWord w;
  for (std::size_t t = 0; t < I.entries.size(); ++t)
    if (I.entries[t] > 0) w.push_back(Factor{roots[t], I.entries[t]});
  return w;
}

PBWPolynomial multiply(const PBWPolynomial& p, const PBWPolynomial& q, std::size_t term_cap) {
  if (p.rank != q.rank) throw std::invalid_argument("multiply: rank mismatch");
  PBWPolynomial out;
  out.rank = p.rank;
  for (const auto& [pi, pc] : p.terms) {
    for (const auto& [qi, qc] : q.terms) {
      FactorWord w = word_of(ExponentVector{p.rank, pi});
      const FactorWord w2 = word_of(ExponentVector{q.rank, qi});
      w.insert(w.end(), w2.begin(), w2.end());
      PBWPolynomial part = straighten(p.rank, w, Strategy::leftmost, term_cap);
      const BigInt scale = pc * qc;
      for (const auto& [i, c] : part.terms) {
        auto [it, inserted] = out.terms.emplace(i, c * scale);
        if (!inserted) {
          it->second += c * scale;
          if (it->second == 0) out.terms.erase(it);
        }
        if (out.terms.size() > term_cap) throw resource_limit_error("multiply: term cap exceeded");
      }
    }
  }
  return out;
}

std::string render_root(const RootInterval& r) {
  std::ostringstream os;
  os << 'f' << r.lo;
  if (r.hi != r.lo) os << '~' << r.hi;
  return os.str();
}

std::string render_word(const FactorWord& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t) os << ' ';
    os << render_root(w[t].root) << "^(" << w[t].power << ')';
  }
  return os.str();
}

std::string render_exponents(const ExponentVector& I) { return render_word(word_of(I)); }

std::string render(const PBWPolynomial& p) {
  if (p.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Leading term first.
  for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
    const BigInt& c = it->second;
    if (first) {
      if (c < 0) os << "- ";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const BigInt a = abs(c);
    const std::string mono = render_exponents(ExponentVector{p.rank, it->first});
    if (a != 1 || mono == "1") {
      os << a.get_str();
      if (mono != "1") os << ' ' << mono;
    } else {
      os << mono;
    }
    first = false;
  }
  return os.str();
}

}  // namespace weylmult
