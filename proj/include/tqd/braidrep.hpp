#pragma once

// The braid action on tensor powers of the regular module, as monomial
// operators on the label basis (x_1,g_1),...,(x_n,g_n): the raw two-strand
// flip, the bracket-change (associator) diagonals, the relation-checked
// braid generators, pure-braid band generators, and braid-word evaluation.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tqd/cocycle.hpp"
#include "tqd/double_algebra.hpp"
#include "tqd/monomial.hpp"
#include "tqd/paren_tree.hpp"

namespace tqd {

// Mixed-radix codec between label indices in [0, |G|^(2n)) and sequences of
// n pairs (x_k, g_k); digits in order x_1, g_1, ..., x_n, g_n, the first
// being most significant.
class LabelCodec {
 public:
  LabelCodec(int group_order, int n) : q_(group_order), n_(n) {
    if (group_order < 1 || n < 1)
      throw std::invalid_argument("LabelCodec: need group order >= 1 and n >= 1");
    dim_ = 1;
    for (int k = 0; k < 2 * n; ++k) {
      dim_ *= q_;
      if (dim_ > kMaxMonomialDim)
        throw std::invalid_argument("LabelCodec: |G|^(2n) exceeds operator dim cap " +
                                    std::to_string(kMaxMonomialDim));
    }
  }

  int group_order() const { return q_; }
  int n() const { return n_; }
  std::int64_t dim() const { return dim_; }

  std::int64_t encode(const std::vector<std::pair<int, int>>& pairs) const {
    std::int64_t idx = 0;
    for (const auto& [x, g] : pairs) idx = (idx * q_ + x) * q_ + g;
    return idx;
  }

  void decode(std::int64_t idx, std::vector<std::pair<int, int>>& pairs) const {
    pairs.resize(static_cast<std::size_t>(n_));
    for (int k = n_ - 1; k >= 0; --k) {
      int g = static_cast<int>(idx % q_);
      idx /= q_;
      int x = static_cast<int>(idx % q_);
      idx /= q_;
      pairs[static_cast<std::size_t>(k)] = {x, g};
    }
  }

 private:
  int q_, n_;
  std::int64_t dim_;
};

// Raw flip at positions i, i+1 (no bracket bookkeeping):
//   (x,a)@i, (y,b)@(i+1)  |->  (x y x^-1, x b)@i, (x,a)@(i+1)
// with scalar exponent theta_{x y x^-1}(x, b); other positions fixed.
inline MonomialOp r_check_raw(const Cocycle3& w, int n, int i, const DoubleOptions& opt = {}) {
  if (n < 2 || i < 1 || i > n - 1)
    throw std::invalid_argument("r_check_raw: need n >= 2 and 1 <= i <= n-1");
  const FiniteGroup& G = w.group();
  LabelCodec codec(G.order(), n);
  MonomialOp op;
  op.r = w.r();
  op.perm.resize(static_cast<std::size_t>(codec.dim()));
  op.scal.resize(static_cast<std::size_t>(codec.dim()));
  std::vector<std::pair<int, int>> pairs;
  for (std::int64_t idx = 0; idx < codec.dim(); ++idx) {
    codec.decode(idx, pairs);
    auto [x, a] = pairs[static_cast<std::size_t>(i - 1)];
    auto [y, b] = pairs[static_cast<std::size_t>(i)];
    int xyx = G.conj(x, y);
    pairs[static_cast<std::size_t>(i - 1)] = {xyx, G.mul(x, b)};
    pairs[static_cast<std::size_t>(i)] = {x, a};
    op.perm[static_cast<std::size_t>(idx)] = static_cast<int>(codec.encode(pairs));
    op.scal[static_cast<std::size_t>(idx)] = theta_hat(w, xyx, x, b, opt.theta);
  }
  return op;
}

// Diagonal operator accumulating the associator scalar of each elementary
// move in `path` over all labels of the n-fold product.  The scalar of a
// move depends only on the x-products of its three leaf segments.
inline MonomialOp rebracket_along(const Cocycle3& w, int n, const std::vector<AssocMove>& path,
                                  const DoubleOptions& opt = {}) {
  if (n < 1) throw std::invalid_argument("rebracket_along: need n >= 1");
  const FiniteGroup& G = w.group();
  LabelCodec codec(G.order(), n);
  MonomialOp op = monomial_identity(static_cast<int>(codec.dim()), w.r());
  if (path.empty()) return op;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> prefix(static_cast<std::size_t>(n) + 1);  // prefix[k] = x_1 ... x_k
  for (std::int64_t idx = 0; idx < codec.dim(); ++idx) {
    codec.decode(idx, pairs);
    prefix[0] = 0;
    for (int k = 1; k <= n; ++k)
      prefix[static_cast<std::size_t>(k)] =
          G.mul(prefix[static_cast<std::size_t>(k) - 1], pairs[static_cast<std::size_t>(k) - 1].first);
    auto segment = [&](int lo, int hi) {  // x-product over leaf positions [lo, hi)
      return G.mul(G.inv(prefix[static_cast<std::size_t>(lo) - 1]),
                   prefix[static_cast<std::size_t>(hi) - 1]);
    };
    long long e = 0;
    for (const AssocMove& m : path)
      e += static_cast<long long>(m.dir) *
           associator_exponent(w, segment(m.a, m.b), segment(m.b, m.c), segment(m.c, m.d), opt).e;
    op.scal[static_cast<std::size_t>(idx)] = detail::mod_r(e, w.r());
  }
  return op;
}

// Diagonal operator translating between two bracketings of the n-fold tensor
// product, along the canonical route through the right comb.  The cocycle
// identity makes the result independent of the route; the coherence tests
// compare against the left-comb route rather than assume it.
inline MonomialOp rebracket(const Cocycle3& w, const ParenTree& from, const ParenTree& to,
                            const DoubleOptions& opt = {}) {
  if (from.lo() != 1 || to.lo() != 1 || from.hi() != to.hi())
    throw std::invalid_argument("rebracket: trees must share the leaf range 1..n");
  return rebracket_along(w, from.leaves(), moves_between(from, to), opt);
}

// Braid generator at position i on the canonical (left-comb) bracketing:
// move to a bracketing where strands i, i+1 form a factor, apply the raw
// flip there, and move back.  For a trivial cocycle this is the raw flip.
inline MonomialOp braid_generator(const Cocycle3& w, int n, int i, const DoubleOptions& opt = {}) {
  if (n < 2 || i < 1 || i > n - 1)
    throw std::invalid_argument("braid_generator: need n >= 2 and 1 <= i <= n-1");
  ParenTree comb = ParenTree::left_comb(n);
  ParenTree sib = ParenTree::sibling_pair(n, i);
  MonomialOp to_sib = rebracket(w, comb, sib, opt);
  MonomialOp back = rebracket(w, sib, comb, opt);
  return back * (r_check_raw(w, n, i, opt) * to_sib);
}

// Signed generator indices: +i for beta_i, -i for its inverse.
using BraidWord = std::vector<int>;

// Left-to-right product beta_{w1} * beta_{w2} * ... as operator composition.
inline MonomialOp apply_word(const Cocycle3& w, int n, const BraidWord& word,
                             const DoubleOptions& opt = {}) {
  LabelCodec codec(w.group().order(), n);
  std::vector<MonomialOp> gen(static_cast<std::size_t>(n > 1 ? n - 1 : 0));
  std::vector<char> built(gen.size(), 0);
  auto generator = [&](int i) -> const MonomialOp& {
    if (i < 1 || i > n - 1)
      throw std::invalid_argument("apply_word: generator index " + std::to_string(i) +
                                  " out of range for n = " + std::to_string(n));
    if (!built[static_cast<std::size_t>(i - 1)]) {
      gen[static_cast<std::size_t>(i - 1)] = braid_generator(w, n, i, opt);
      built[static_cast<std::size_t>(i - 1)] = 1;
    }
    return gen[static_cast<std::size_t>(i - 1)];
  };
  MonomialOp acc = monomial_identity(static_cast<int>(codec.dim()), w.r());
  for (int e : word) {
    if (e == 0) throw std::invalid_argument("apply_word: zero is not a generator index");
    acc = acc * (e > 0 ? generator(e) : inverse(generator(-e)));
  }
  return acc;
}

// Band generator A_{ij} = (beta_{j-1} ... beta_{i+1}) beta_i^2 (beta_{i+1}^-1 ... beta_{j-1}^-1);
// the A_{ij}, 1 <= i < j <= n, generate the pure braid group.
inline BraidWord band_word(int n, int i, int j) {
  if (i < 1 || j <= i || j > n)
    throw std::invalid_argument("band_word: need 1 <= i < j <= n");
  BraidWord word;
  for (int k = j - 1; k > i; --k) word.push_back(k);
  word.push_back(i);
  word.push_back(i);
  for (int k = i + 1; k <= j - 1; ++k) word.push_back(-k);
  return word;
}

inline MonomialOp pure_braid_generator(const Cocycle3& w, int n, int i, int j,
                                       const DoubleOptions& opt = {}) {
  return apply_word(w, n, band_word(n, i, j), opt);
}

// (B1) beta_i beta_{i+1} beta_i = beta_{i+1} beta_i beta_{i+1} and
// (B2) beta_i beta_j = beta_j beta_i for |i-j| >= 2, checked by exact
// composition on a family ops[0..n-2] of equal dim and r.
inline CheckFailure check_braid_relations(const std::vector<MonomialOp>& ops) {
  int n = static_cast<int>(ops.size()) + 1;
  for (const MonomialOp& op : ops)
    if (op.dim() != ops[0].dim() || op.r != ops[0].r)
      return std::string("operator family has mismatched dim or r");
  for (int i = 0; i + 1 < n - 1; ++i)
    if (ops[static_cast<std::size_t>(i)] * ops[static_cast<std::size_t>(i) + 1] *
            ops[static_cast<std::size_t>(i)] !=
        ops[static_cast<std::size_t>(i) + 1] * ops[static_cast<std::size_t>(i)] *
            ops[static_cast<std::size_t>(i) + 1])
      return "braid relation (B1) fails at i = " + std::to_string(i + 1);
  for (int i = 0; i < n - 1; ++i)
    for (int j = i + 2; j < n - 1; ++j)
      if (ops[static_cast<std::size_t>(i)] * ops[static_cast<std::size_t>(j)] !=
          ops[static_cast<std::size_t>(j)] * ops[static_cast<std::size_t>(i)])
        return "commutation (B2) fails at i = " + std::to_string(i + 1) +
               ", j = " + std::to_string(j + 1);
  return std::nullopt;
}

}  // namespace tqd
