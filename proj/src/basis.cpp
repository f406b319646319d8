#include "weylmult/basis.hpp"

#include <stdexcept>

namespace weylmult {

namespace {

// Shared traversal state.  Blocks are visited in application order
// (superscript j = 1 first); within a block subscripts ascend, so the bound
// for (i, j) only reads entries already chosen.  done_[m-1] accumulates
// k_m^q over completed blocks, which makes each bound O(1).
class Dfs {
 public:
  Dfs(const Weight& lambda, const AlphaVector* filter)
      : lambda_(lambda),
        filter_(filter),
        layout_(TriLayout::get(lambda.rank())),
        l_(lambda.rank()),
        k_(static_cast<std::size_t>(layout_.size()), 0),
        done_(static_cast<std::size_t>(l_), 0),
        cont_(static_cast<std::size_t>(l_), 0) {
    scratch_.rank = l_;
    scratch_.entries.assign(k_.size(), 0);
  }

  using Leaf = std::function<bool(Dfs&)>;

  // Enumerates blocks j..stop_j; calls leaf once all of them are filled.
  bool run_blocks(int j, int stop_j, const Leaf& leaf) {
    if (j > stop_j) return leaf(*this);
    return entry(j, 1, stop_j, leaf);
  }

  void install_first_block(const std::vector<std::int64_t>& values) {
    for (int i = 1; i <= l_; ++i) {
      const std::int64_t v = values[static_cast<std::size_t>(i - 1)];
      k_[static_cast<std::size_t>(layout_.pos(i, 1))] = v;
      done_[static_cast<std::size_t>(i - 1)] = v;
      cont_[static_cast<std::size_t>(i - 1)] = v;
    }
  }

  const std::vector<std::int64_t>& flat() const { return k_; }
  const std::vector<std::int64_t>& content_so_far() const { return cont_; }
  bool content_matches_filter() const { return !filter_ || cont_ == filter_->coeffs; }

  // The current leaf as an index value; entries are refreshed in place, so
  // no allocation happens per emitted element.
  const MonomialIndex& current() {
    scratch_.entries = k_;
    return scratch_;
  }

  std::int64_t first_block_value(int i) const {
    return k_[static_cast<std::size_t>(layout_.pos(i, 1))];
  }

 private:
  std::int64_t bound(int i, int j) const {
    std::int64_t b = lambda_.coords[static_cast<std::size_t>(i - 1)];
    if (i >= 2)
      b = checked_add(b, checked_add(done_[static_cast<std::size_t>(i - 2)],
                                     k_[static_cast<std::size_t>(layout_.pos(i - 1, j))]));
    if (j >= 2) {
      if (i < l_) b = checked_add(b, done_[static_cast<std::size_t>(i)]);
      b = checked_sub(b, checked_mul(2, done_[static_cast<std::size_t>(i - 1)]));
    }
    return b;
  }

  bool entry(int j, int i, int stop_j, const Leaf& leaf) {
    const int top = l_ - j + 1;
    if (i > top) {
      for (int m = 1; m <= top; ++m)
        done_[static_cast<std::size_t>(m - 1)] =
            checked_add(done_[static_cast<std::size_t>(m - 1)],
                        k_[static_cast<std::size_t>(layout_.pos(m, j))]);
      const bool keep_going = run_blocks(j + 1, stop_j, leaf);
      for (int m = 1; m <= top; ++m)
        done_[static_cast<std::size_t>(m - 1)] -=
            k_[static_cast<std::size_t>(layout_.pos(m, j))];
      return keep_going;
    }

    const std::size_t slot = static_cast<std::size_t>(layout_.pos(i, j));
    const std::int64_t lower =
        (i >= 2) ? k_[static_cast<std::size_t>(layout_.pos(i - 1, j))] : 0;
    std::int64_t upper = bound(i, j);
    if (filter_) {
      const std::int64_t rem = checked_sub(filter_->coeffs[static_cast<std::size_t>(i - 1)],
                                           cont_[static_cast<std::size_t>(i - 1)]);
      if (rem < upper) upper = rem;
    }
    for (std::int64_t v = lower; v <= upper; ++v) {
      k_[slot] = v;
      cont_[static_cast<std::size_t>(i - 1)] += v;
      const bool keep_going = entry(j, i + 1, stop_j, leaf);
      cont_[static_cast<std::size_t>(i - 1)] -= v;
      if (!keep_going) {
        k_[slot] = 0;
        return false;
      }
    }
    k_[slot] = 0;
    return true;
  }

  const Weight& lambda_;
  const AlphaVector* filter_;
  const TriLayout& layout_;
  const int l_;
  std::vector<std::int64_t> k_;
  std::vector<std::int64_t> done_;
  std::vector<std::int64_t> cont_;
  MonomialIndex scratch_;
};

void require_inputs(const Weight& lambda, const AlphaVector* filter) {
  if (lambda.rank() < 1) throw std::invalid_argument("rank must be >= 1");
  if (!is_dominant(lambda)) throw std::invalid_argument("enumeration requires a dominant weight");
  if (filter && filter->rank() != lambda.rank())
    throw std::invalid_argument("content filter rank mismatch");
}

}  // namespace

BoundContext::BoundContext(Weight lambda)
    : lambda_(std::move(lambda)),
      entries_(static_cast<std::size_t>(TriLayout::get(lambda_.rank()).size()), 0),
      set_(entries_.size(), false) {
  if (!is_dominant(lambda_)) throw std::invalid_argument("BoundContext requires a dominant weight");
}

void BoundContext::set(int i, int j, std::int64_t value) {
  const TriLayout& L = TriLayout::get(rank());
  if (!L.valid(i, j)) throw std::invalid_argument("BoundContext::set: bad entry position");
  if (value < 0) throw std::invalid_argument("BoundContext::set: negative entry");
  entries_[static_cast<std::size_t>(L.pos(i, j))] = value;
  set_[static_cast<std::size_t>(L.pos(i, j))] = true;
}

bool BoundContext::is_set(int i, int j) const {
  const TriLayout& L = TriLayout::get(rank());
  return L.valid(i, j) && set_[static_cast<std::size_t>(L.pos(i, j))];
}

std::int64_t BoundContext::get(int i, int j) const {
  const TriLayout& L = TriLayout::get(rank());
  if (!is_set(i, j)) throw std::logic_error("BoundContext::get: entry not set");
  return entries_[static_cast<std::size_t>(L.pos(i, j))];
}

std::int64_t BoundContext::read(int i, int j) const {
  if (i == 0) return 0;
  if (!is_set(i, j)) throw std::logic_error("bound: required entry not set");
  return entries_[static_cast<std::size_t>(TriLayout::get(rank()).pos(i, j))];
}

std::int64_t BoundContext::bound(int i, int j) const {
  const TriLayout& L = TriLayout::get(rank());
  if (!L.valid(i, j)) throw std::invalid_argument("bound: bad entry position");
  std::int64_t b = lambda_.coords[static_cast<std::size_t>(i - 1)];
  for (int q = 1; q <= j; ++q) b = checked_add(b, read(i - 1, q));
  for (int q = 1; q < j; ++q) b = checked_add(b, read(i + 1, q));
  for (int q = 1; q < j; ++q) b = checked_sub(b, checked_mul(2, read(i, q)));
  return b;
}

namespace {

template <typename LeafBody>
void run_full(const Weight& lambda, const AlphaVector* filter, std::uint64_t cap,
              LeafBody&& body) {
  require_inputs(lambda, filter);
  Dfs dfs(lambda, filter);
  std::uint64_t emitted = 0;
  dfs.run_blocks(1, lambda.rank(), [&](Dfs& d) {
    if (!d.content_matches_filter()) return true;
    if (cap != 0 && ++emitted > cap)
      throw resource_limit_error("basis enumeration cap exceeded");
    return body(d);
  });
}

}  // namespace

void enumerate_basis(const Weight& lambda, const AlphaVector* filter, const BasisVisitor& visit,
                     std::uint64_t cap) {
  run_full(lambda, filter, cap, [&](Dfs& d) { return visit(d.current()); });
}

void enumerate_basis(const Weight& lambda, const AlphaVector* filter,
                     const BasisContentVisitor& visit, std::uint64_t cap) {
  run_full(lambda, filter, cap, [&](Dfs& d) { return visit(d.current(), d.content_so_far()); });
}

BigInt count_basis(const Weight& lambda, const AlphaVector* filter, std::uint64_t cap) {
  BigInt n = 0;
  enumerate_basis(
      lambda, filter,
      [&n](const MonomialIndex&) {
        ++n;
        return true;
      },
      cap);
  return n;
}

bool in_basis(const Weight& lambda, const MonomialIndex& K) {
  if (K.rank != lambda.rank()) return false;
  if (!is_in_pi(K)) return false;
  const TriLayout& L = TriLayout::get(K.rank);
  const int l = K.rank;
  std::vector<std::int64_t> done(static_cast<std::size_t>(l), 0);
  for (int j = 1; j <= l; ++j) {
    const int top = l - j + 1;
    for (int i = 1; i <= top; ++i) {
      std::int64_t b = lambda.coords[static_cast<std::size_t>(i - 1)];
      if (i >= 2)
        b = checked_add(b, checked_add(done[static_cast<std::size_t>(i - 2)],
                                       K.entries[static_cast<std::size_t>(L.pos(i - 1, j))]));
      if (j >= 2) {
        if (i < l) b = checked_add(b, done[static_cast<std::size_t>(i)]);
        b = checked_sub(b, checked_mul(2, done[static_cast<std::size_t>(i - 1)]));
      }
      const std::int64_t v = K.entries[static_cast<std::size_t>(L.pos(i, j))];
      if (v < 0 || v > b) return false;
    }
    for (int m = 1; m <= top; ++m)
      done[static_cast<std::size_t>(m - 1)] =
          checked_add(done[static_cast<std::size_t>(m - 1)],
                      K.entries[static_cast<std::size_t>(L.pos(m, j))]);
  }
  return true;
}

std::vector<PiPrimeElement> enumerate_pi_prime(const Weight& lambda) {
  if (!is_dominant(lambda)) throw std::invalid_argument("enumerate_pi_prime requires a dominant weight");
  const int l = lambda.rank();
  std::vector<PiPrimeElement> out;
  std::vector<std::int64_t> p(static_cast<std::size_t>(l), 0);
  // Emitted in lexicographic order on (p_1, ..., p_l), which is exactly the
  // right-to-left tuple order on the padded indices.
  const std::function<void(int)> rec = [&](int i) {
    if (i > l) {
      out.push_back(PiPrimeElement{p});
      return;
    }
    const std::int64_t prev = (i >= 2) ? p[static_cast<std::size_t>(i - 2)] : 0;
    const std::int64_t hi = checked_add(prev, lambda.coords[static_cast<std::size_t>(i - 1)]);
    for (std::int64_t v = prev; v <= hi; ++v) {
      p[static_cast<std::size_t>(i - 1)] = v;
      rec(i + 1);
    }
    p[static_cast<std::size_t>(i - 1)] = 0;
  };
  rec(1);
  return out;
}

MonomialIndex pad_pi_prime(const PiPrimeElement& P) {
  const int l = P.rank();
  MonomialIndex K = zero_index(l);
  const TriLayout& L = TriLayout::get(l);
  for (int i = 1; i <= l; ++i)
    K.entries[static_cast<std::size_t>(L.pos(i, 1))] = P.p[static_cast<std::size_t>(i - 1)];
  return K;
}

std::vector<BasisPrefix> enumerate_first_block(const Weight& lambda, const AlphaVector* filter) {
  require_inputs(lambda, filter);
  const int l = lambda.rank();
  std::vector<BasisPrefix> prefixes;
  Dfs dfs(lambda, filter);
  dfs.run_blocks(1, 1, [&](Dfs& d) {
    BasisPrefix p;
    p.first_block.resize(static_cast<std::size_t>(l));
    for (int i = 1; i <= l; ++i)
      p.first_block[static_cast<std::size_t>(i - 1)] = d.first_block_value(i);
    prefixes.push_back(std::move(p));
    return true;
  });
  return prefixes;
}

namespace {

template <typename LeafBody>
bool run_prefix(const Weight& lambda, const AlphaVector* filter, const BasisPrefix& prefix,
                LeafBody&& body) {
  require_inputs(lambda, filter);
  if (prefix.first_block.size() != static_cast<std::size_t>(lambda.rank()))
    throw std::invalid_argument("prefix rank mismatch");
  Dfs dfs(lambda, filter);
  dfs.install_first_block(prefix.first_block);
  return dfs.run_blocks(2, lambda.rank(), [&](Dfs& d) {
    if (!d.content_matches_filter()) return true;
    return body(d);
  });
}

}  // namespace

bool enumerate_from_prefix(const Weight& lambda, const AlphaVector* filter,
                           const BasisPrefix& prefix, const BasisVisitor& visit) {
  return run_prefix(lambda, filter, prefix, [&](Dfs& d) { return visit(d.current()); });
}

bool enumerate_from_prefix(const Weight& lambda, const AlphaVector* filter,
                           const BasisPrefix& prefix, const BasisContentVisitor& visit) {
  return run_prefix(lambda, filter, prefix,
                    [&](Dfs& d) { return visit(d.current(), d.content_so_far()); });
}

}  // namespace weylmult
