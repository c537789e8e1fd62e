#pragma once

// Parenthesizations of an ordered tensor product: full binary trees with
// leaves 1..n left-to-right, and elementary-move paths between them.  An
// elementary forward move turns ((A B) C) into (A (B C)); a path to the
// right-comb normal form gives a canonical route between any two trees.
// Trees are immutable and share subtrees.

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace tqd {

class ParenTree {
 public:
  static ParenTree leaf(int i) {
    if (i < 1) throw std::invalid_argument("ParenTree::leaf: leaves are numbered from 1");
    return ParenTree(i, i + 1, nullptr, nullptr);
  }
  static ParenTree join(const ParenTree& l, const ParenTree& r) {
    if (l.hi_ != r.lo_)
      throw std::invalid_argument("ParenTree::join: children must cover adjacent leaf ranges");
    return ParenTree(l.lo_, r.hi_, std::make_shared<ParenTree>(l), std::make_shared<ParenTree>(r));
  }

  // (((1 2) 3) ... n)
  static ParenTree left_comb(int n) {
    if (n < 1) throw std::invalid_argument("ParenTree: need at least one leaf");
    ParenTree t = leaf(1);
    for (int i = 2; i <= n; ++i) t = join(t, leaf(i));
    return t;
  }

  // (1 (2 (... n)))
  static ParenTree right_comb(int n) {
    if (n < 1) throw std::invalid_argument("ParenTree: need at least one leaf");
    ParenTree t = leaf(n);
    for (int i = n - 1; i >= 1; --i) t = join(leaf(i), t);
    return t;
  }

  // Left comb whose blocks are 1, ..., i-1, (i i+1), i+2, ..., n — the
  // bracketing in which positions i and i+1 form a tensor factor.
  static ParenTree sibling_pair(int n, int i) {
    if (n < 2 || i < 1 || i + 1 > n)
      throw std::invalid_argument("ParenTree::sibling_pair: need 1 <= i <= n-1");
    ParenTree t = i == 1 ? join(leaf(1), leaf(2)) : leaf(1);
    for (int k = 2; k <= n; ++k) {
      if (k == i) t = join(t, join(leaf(i), leaf(i + 1)));
      else if (k == i + 1) continue;  // consumed by the glued block
      else t = join(t, leaf(k));
    }
    return t;
  }

  bool is_leaf() const { return !left_; }
  int lo() const { return lo_; }          // leaf range [lo, hi)
  int hi() const { return hi_; }
  int leaves() const { return hi_ - lo_; }
  const ParenTree& left() const { return *left_; }
  const ParenTree& right() const { return *right_; }

  bool operator==(const ParenTree& o) const {
    if (lo_ != o.lo_ || hi_ != o.hi_ || is_leaf() != o.is_leaf()) return false;
    if (is_leaf()) return true;
    return left() == o.left() && right() == o.right();
  }

  std::string to_string() const {
    if (is_leaf()) return std::to_string(lo_);
    return "(" + left().to_string() + " " + right().to_string() + ")";
  }

 private:
  ParenTree(int lo, int hi, std::shared_ptr<const ParenTree> l, std::shared_ptr<const ParenTree> r)
      : lo_(lo), hi_(hi), left_(std::move(l)), right_(std::move(r)) {}

  int lo_, hi_;
  std::shared_ptr<const ParenTree> left_, right_;
};

// One elementary move on segments [a,b), [b,c), [c,d) of leaf positions:
// dir=+1 is the forward move ((A B) C) -> (A (B C)), dir=-1 its reverse.
struct AssocMove {
  int a, b, c, d;
  int dir;
};

// The canonical rotation path from t to the right comb, as forward moves.
inline void append_moves_to_right_comb(const ParenTree& t, std::vector<AssocMove>& out) {
  if (t.is_leaf()) return;
  ParenTree cur = t;
  while (!cur.left().is_leaf()) {
    const ParenTree& A = cur.left().left();
    const ParenTree& B = cur.left().right();
    const ParenTree& C = cur.right();
    out.push_back({A.lo(), B.lo(), C.lo(), C.hi(), +1});
    cur = ParenTree::join(A, ParenTree::join(B, C));
  }
  append_moves_to_right_comb(cur.right(), out);
}

// Rotation path from t to the left comb; reverse moves (dir = -1).
inline void append_moves_to_left_comb(const ParenTree& t, std::vector<AssocMove>& out) {
  if (t.is_leaf()) return;
  ParenTree cur = t;
  while (!cur.right().is_leaf()) {
    const ParenTree& A = cur.left();
    const ParenTree& B = cur.right().left();
    const ParenTree& C = cur.right().right();
    out.push_back({A.lo(), B.lo(), C.lo(), C.hi(), -1});
    cur = ParenTree::join(ParenTree::join(A, B), C);
  }
  append_moves_to_left_comb(cur.left(), out);
}

namespace detail {
inline std::vector<AssocMove> reversed_path(std::vector<AssocMove> path) {
  std::vector<AssocMove> out;
  out.reserve(path.size());
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    AssocMove m = *it;
    m.dir = -m.dir;
    out.push_back(m);
  }
  return out;
}
}  // namespace detail

// Move sequence carrying `from` to `to` through a comb normal form; the two
// routes exist so coherence (path independence of the resulting operators)
// can be tested rather than assumed.
inline std::vector<AssocMove> moves_between(const ParenTree& from, const ParenTree& to) {
  if (from.lo() != to.lo() || from.hi() != to.hi())
    throw std::invalid_argument("moves_between: trees have different leaf ranges");
  std::vector<AssocMove> path;
  append_moves_to_right_comb(from, path);
  std::vector<AssocMove> back;
  append_moves_to_right_comb(to, back);
  for (const AssocMove& m : detail::reversed_path(std::move(back))) path.push_back(m);
  return path;
}

inline std::vector<AssocMove> moves_between_via_left_comb(const ParenTree& from,
                                                          const ParenTree& to) {
  if (from.lo() != to.lo() || from.hi() != to.hi())
    throw std::invalid_argument("moves_between_via_left_comb: trees have different leaf ranges");
  std::vector<AssocMove> path;
  append_moves_to_left_comb(from, path);
  std::vector<AssocMove> back;
  append_moves_to_left_comb(to, back);
  for (const AssocMove& m : detail::reversed_path(std::move(back))) path.push_back(m);
  return path;
}

// All full binary trees over leaves [lo, lo + count); Catalan-many.
inline std::vector<ParenTree> all_trees(int count, int lo = 1) {
  if (count < 1) throw std::invalid_argument("all_trees: need at least one leaf");
  if (count == 1) return {ParenTree::leaf(lo)};
  std::vector<ParenTree> out;
  for (int k = 1; k < count; ++k)
    for (const ParenTree& l : all_trees(k, lo))
      for (const ParenTree& r : all_trees(count - k, lo + k)) out.push_back(ParenTree::join(l, r));
  return out;
}

}  // namespace tqd
