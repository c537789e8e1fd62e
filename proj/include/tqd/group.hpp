#pragma once

// Finite groups as explicit Cayley tables.  Element 0 is always the identity.
// Constructors fix deterministic element orderings (documented per builder) so
// cocycle files and reports are stable across runs.  All groups here are desk
// scale; subgroup machinery works on explicit element-index sets.

#include <algorithm>
#include <array>
#include <cstddef>
#include <fstream>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tqd {

class FiniteGroup {
 public:
  // mul is row-major order x order; identity must sit at index 0.
  FiniteGroup(int order, std::vector<int> table, std::string name)
      : order_(order), mul_(std::move(table)), name_(std::move(name)) {
    if (order_ < 1) throw std::invalid_argument("FiniteGroup: order must be positive");
    if (mul_.size() != static_cast<std::size_t>(order_) * order_)
      throw std::invalid_argument("FiniteGroup: multiplication table has wrong size");
    for (int v : mul_)
      if (v < 0 || v >= order_)
        throw std::invalid_argument("FiniteGroup: table entry out of range");
    for (int g = 0; g < order_; ++g)
      if (mul(0, g) != g || mul(g, 0) != g)
        throw std::invalid_argument("FiniteGroup: element 0 is not an identity");
    inv_.assign(order_, -1);
    for (int g = 0; g < order_; ++g) {
      for (int h = 0; h < order_; ++h)
        if (mul(g, h) == 0 && mul(h, g) == 0) { inv_[g] = h; break; }
      if (inv_[g] < 0)
        throw std::invalid_argument("FiniteGroup: element " + std::to_string(g) + " has no inverse");
    }
  }

  int order() const { return order_; }
  int identity() const { return 0; }
  const std::string& name() const { return name_; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }

  // g x g^-1
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  // [a,b] = a b a^-1 b^-1, so that g x g^-1 g' = [g,x] x g'.
  int comm(int a, int b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }

  bool is_abelian() const {
    for (int a = 0; a < order_; ++a)
      for (int b = a + 1; b < order_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  // Exhaustive associativity check; O(order^3).  Throws with the violating
  // triple.  Identity and inverses were already checked in the constructor.
  void validate() const {
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        for (int c = 0; c < order_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw std::runtime_error("FiniteGroup '" + name_ + "': associativity fails at (" +
                                     std::to_string(a) + "," + std::to_string(b) + "," +
                                     std::to_string(c) + ")");
  }

 private:
  int order_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::string name_;
};

// --- builders --------------------------------------------------------------

// Z/m, elements are residues 0..m-1.
inline FiniteGroup make_cyclic(int m) {
  if (m < 1) throw std::invalid_argument("make_cyclic: m must be >= 1");
  std::vector<int> mul(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) mul[static_cast<std::size_t>(a) * m + b] = (a + b) % m;
  return FiniteGroup(m, std::move(mul), "cyclic:" + std::to_string(m));
}

inline FiniteGroup make_trivial() { return make_cyclic(1); }

// Dihedral group of order 2m.  Element f*m + k encodes rot^k * refl^f,
// with rot of order m and refl the reflection; identity is (k,f) = (0,0).
inline FiniteGroup make_dihedral(int m) {
  if (m < 1) throw std::invalid_argument("make_dihedral: m must be >= 1");
  int n = 2 * m;
  auto enc = [m](int k, int f) { return f * m + k; };
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int f1 = 0; f1 < 2; ++f1)
    for (int k1 = 0; k1 < m; ++k1)
      for (int f2 = 0; f2 < 2; ++f2)
        for (int k2 = 0; k2 < m; ++k2) {
          // rot^k1 refl^f1 rot^k2 refl^f2 = rot^(k1 + (-1)^f1 k2) refl^(f1+f2)
          int k = ((k1 + (f1 ? m - k2 : k2)) % m + m) % m;
          int f = (f1 + f2) % 2;
          mul[static_cast<std::size_t>(enc(k1, f1)) * n + enc(k2, f2)] = enc(k, f);
        }
  return FiniteGroup(n, std::move(mul), "dihedral:" + std::to_string(m));
}

// Quaternion group {1, i, j, k, -1, -i, -j, -k} in that element order.
inline FiniteGroup make_quaternion8() {
  // unit part u in {1,i,j,k} = {0,1,2,3}; element index = sign*4 + u
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  // sign[u1][u2]=1 means u1*u2 = -unit[u1][u2]; e.g. i*i=-1, i*j=+k, j*i=-k.
  std::vector<int> mul(64);
  for (int s1 = 0; s1 < 2; ++s1)
    for (int u1 = 0; u1 < 4; ++u1)
      for (int s2 = 0; s2 < 2; ++s2)
        for (int u2 = 0; u2 < 4; ++u2) {
          int u = unit[u1][u2];
          int s = (s1 + s2 + sign[u1][u2]) % 2;
          mul[static_cast<std::size_t>(s1 * 4 + u1) * 8 + (s2 * 4 + u2)] = s * 4 + u;
        }
  return FiniteGroup(8, std::move(mul), "quaternion");
}

// S_m for m <= 5; elements are the permutations of {0..m-1} in lexicographic
// one-line order, so the identity is element 0.  mul(a,b) applies b first.
inline FiniteGroup make_symmetric(int m) {
  if (m < 1 || m > 5) throw std::invalid_argument("make_symmetric: m must be in [1,5]");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int n = static_cast<int>(perms.size());
  auto rank = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  std::vector<int> comp(m);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int x = 0; x < m; ++x) comp[x] = perms[a][perms[b][x]];
      mul[static_cast<std::size_t>(a) * n + b] = rank(comp);
    }
  return FiniteGroup(n, std::move(mul), "symmetric:" + std::to_string(m));
}

// Direct product; element g*|H| + h encodes the pair (g,h), lexicographic.
inline FiniteGroup make_product(const FiniteGroup& G, const FiniteGroup& H) {
  int n = G.order() * H.order();
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  auto enc = [&](int g, int h) { return g * H.order() + h; };
  for (int g1 = 0; g1 < G.order(); ++g1)
    for (int h1 = 0; h1 < H.order(); ++h1)
      for (int g2 = 0; g2 < G.order(); ++g2)
        for (int h2 = 0; h2 < H.order(); ++h2)
          mul[static_cast<std::size_t>(enc(g1, h1)) * n + enc(g2, h2)] =
              enc(G.mul(g1, g2), H.mul(h1, h2));
  return FiniteGroup(n, std::move(mul), "product:" + G.name() + "," + H.name());
}

// --- Cayley file format ----------------------------------------------------
// line 1: `order N`; then N lines of N integers in [0,N); entry at row g,
// column h is g∘h; element 0 must be the identity; `#` starts a comment line.

inline FiniteGroup from_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open Cayley file: " + path);
  std::string line;
  int lineno = 0;
  auto next_content_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      std::size_t pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_content_line())
    throw std::runtime_error(path + ": empty file, expected `order N` header");
  std::istringstream head(line);
  std::string kw;
  int n = 0;
  if (!(head >> kw >> n) || kw != "order" || n < 1)
    throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected `order N` with N >= 1");
  std::vector<int> mul;
  mul.reserve(static_cast<std::size_t>(n) * n);
  for (int row = 0; row < n; ++row) {
    if (!next_content_line())
      throw std::runtime_error(path + ": unexpected end of file, expected row " + std::to_string(row));
    std::istringstream ls(line);
    for (int col = 0; col < n; ++col) {
      int v;
      if (!(ls >> v))
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": row " + std::to_string(row) +
                                 " has fewer than " + std::to_string(n) + " entries");
      if (v < 0 || v >= n)
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": entry " + std::to_string(v) +
                                 " out of range at row " + std::to_string(row) + ", column " +
                                 std::to_string(col));
      mul.push_back(v);
    }
    int extra;
    if (ls >> extra)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": row " + std::to_string(row) +
                               " has more than " + std::to_string(n) + " entries");
  }
  for (int g = 0; g < n; ++g)
    if (mul[static_cast<std::size_t>(0) * n + g] != g || mul[static_cast<std::size_t>(g) * n + 0] != g)
      throw std::runtime_error(path + ": element 0 is not an identity (fails at element " +
                               std::to_string(g) + ")");
  FiniteGroup G(n, std::move(mul), "file:" + path);
  G.validate();  // throws with the violating triple
  return G;
}

// --- element / subgroup utilities ------------------------------------------

inline int element_order(const FiniteGroup& G, int g) {
  int x = g, k = 1;
  while (x != 0) {
    x = G.mul(x, g);
    ++k;
  }
  return k;
}

// (p, k) with |G| = p^k, if the order is a prime power.
inline std::optional<std::pair<long long, int>> prime_power(long long n) {
  if (n < 2) return std::nullopt;
  long long p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;  // n prime
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return std::make_pair(p, k);
}

// p-group status; the trivial group is flagged rather than assigned a prime.
struct PGroupStatus {
  bool trivial = false;
  std::optional<std::pair<long long, int>> pk;
};

inline PGroupStatus is_p_group(const FiniteGroup& G) {
  PGroupStatus s;
  if (G.order() == 1) {
    s.trivial = true;
    return s;
  }
  s.pk = prime_power(G.order());
  return s;
}

// The index-based group interface used below (FiniteGroup satisfies it, and
// so does the closure adapter in closure.hpp): order(), identity(), mul(), inv().

// Subgroup generated by gens, as a sorted element-index set.  BFS under right
// multiplication by the generators; finiteness makes inverses automatic.
template <class Grp>
std::vector<int> subgroup_closure(const Grp& G, const std::vector<int>& gens) {
  std::vector<char> seen(static_cast<std::size_t>(G.order()), 0);
  int e = G.identity();
  std::vector<int> out{e}, queue{e};
  seen[static_cast<std::size_t>(e)] = 1;
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    for (int s : gens) {
      int y = G.mul(x, s);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        out.push_back(y);
        queue.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Normal closure of <seeds> inside <ambient_gens>: iterate subgroup closure
// and conjugation by the ambient generators until stable.
template <class Grp>
std::vector<int> normal_closure(const Grp& G, const std::vector<int>& ambient_gens,
                                const std::vector<int>& seeds) {
  std::vector<int> current = seeds;
  for (;;) {
    std::vector<int> H = subgroup_closure(G, current);
    std::set<int> next(H.begin(), H.end());
    for (int g : ambient_gens)
      for (int h : H) next.insert(G.mul(G.mul(g, h), G.inv(g)));
    if (next.size() == H.size()) return H;
    current.assign(next.begin(), next.end());
  }
}

// Lower central series of <gens>: L_1 = <gens>, L_{k+1} = normal closure in
// L_1 of [L_k, L_1].  Commutators are taken on generating sets, which
// generate the same normal closure.  Series is returned up to and including
// the first repeated term.
template <class Grp>
std::vector<std::vector<int>> lower_central_series(const Grp& G, const std::vector<int>& gens) {
  std::vector<std::vector<int>> series;
  std::vector<int> l1_gens = gens;
  if (l1_gens.empty()) l1_gens.push_back(G.identity());
  series.push_back(subgroup_closure(G, l1_gens));
  if (series.back().size() == 1) return series;  // trivial group, class 0
  std::vector<int> level_gens = l1_gens;
  for (;;) {
    std::set<int> comms;
    for (int a : level_gens)
      for (int b : l1_gens) comms.insert(G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b))));
    comms.erase(G.identity());
    std::vector<int> seeds(comms.begin(), comms.end());
    if (seeds.empty()) seeds.push_back(G.identity());
    std::vector<int> next = normal_closure(G, l1_gens, seeds);
    if (next == series.back()) {
      series.push_back(std::move(next));  // stable; record the repeat and stop
      return series;
    }
    series.push_back(next);
    if (next.size() == 1) return series;
    level_gens = std::move(next);
  }
}

// Nilpotency class of the subgroup generated by gens: smallest c with
// L_{c+1} trivial, or nullopt if the series stabilizes above the identity.
template <class Grp>
std::optional<int> nilpotency_class_of(const Grp& G, const std::vector<int>& gens) {
  auto series = lower_central_series(G, gens);
  if (series.back().size() != 1) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

inline std::optional<int> nilpotency_class(const FiniteGroup& G) {
  std::vector<int> all(static_cast<std::size_t>(G.order()));
  std::iota(all.begin(), all.end(), 0);
  return nilpotency_class_of(G, all);
}

}  // namespace tqd
