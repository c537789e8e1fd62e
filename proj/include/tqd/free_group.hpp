#pragma once

// Reduced words over the free group on 2n letters g_1..g_n, x_1..x_n, the
// braid-induced automorphisms psi(beta_i), and their evaluation on tuples
// over a finite group.  Letters are coded 1..n for g_j and n+1..2n for x_j;
// a negative code is the inverse letter.

#include <stdexcept>
#include <string>
#include <vector>

#include "tqd/group.hpp"

namespace tqd {

using FreeWord = std::vector<int>;

inline void free_append(FreeWord& w, int letter) {
  if (!w.empty() && w.back() == -letter) w.pop_back();
  else w.push_back(letter);
}

inline FreeWord free_reduce(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (int l : w) {
    if (l == 0) throw std::invalid_argument("free word letters are nonzero signed codes");
    free_append(out, l);
  }
  return out;
}

inline FreeWord word_mul(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  for (int l : b) free_append(out, l);
  return out;
}

inline FreeWord word_inv(const FreeWord& a) {
  FreeWord out;
  out.reserve(a.size());
  for (auto it = a.rbegin(); it != a.rend(); ++it) out.push_back(-*it);
  return out;
}

// Endomorphism of the free group given by generator images, with an explicit
// inverse witness so being an automorphism is checkable, not assumed.
struct FreeAutomorphism {
  int n = 1;                              // 2n letters
  std::vector<FreeWord> images;           // images[k-1] = image of letter k
  std::vector<FreeWord> inverse_images;

  FreeWord apply(const FreeWord& w) const {
    FreeWord out;
    for (int l : w) {
      const FreeWord& img = images[static_cast<std::size_t>(l > 0 ? l : -l) - 1];
      if (l > 0)
        for (int m : img) free_append(out, m);
      else
        for (auto it = img.rbegin(); it != img.rend(); ++it) free_append(out, -*it);
    }
    return out;
  }

  FreeWord apply_inverse(const FreeWord& w) const {
    FreeAutomorphism tmp{n, inverse_images, images};
    return tmp.apply(w);
  }

  bool is_identity() const {
    for (std::size_t k = 0; k < images.size(); ++k)
      if (images[k] != FreeWord{static_cast<int>(k) + 1}) return false;
    return true;
  }
};

inline FreeAutomorphism identity_automorphism(int n) {
  if (n < 1) throw std::invalid_argument("identity_automorphism: need n >= 1");
  FreeAutomorphism f;
  f.n = n;
  f.images.resize(static_cast<std::size_t>(2) * n);
  for (int k = 1; k <= 2 * n; ++k) f.images[static_cast<std::size_t>(k) - 1] = {k};
  f.inverse_images = f.images;
  return f;
}

// (F o G): apply G first, then F; inverse witness composes the other way.
inline FreeAutomorphism compose(const FreeAutomorphism& F, const FreeAutomorphism& G) {
  if (F.n != G.n) throw std::invalid_argument("compose: rank mismatch");
  FreeAutomorphism out;
  out.n = F.n;
  out.images.resize(F.images.size());
  out.inverse_images.resize(F.images.size());
  FreeAutomorphism Ginv{G.n, G.inverse_images, G.images};
  FreeAutomorphism Finv{F.n, F.inverse_images, F.images};
  for (std::size_t k = 0; k < F.images.size(); ++k) {
    out.images[k] = F.apply(G.images[k]);
    out.inverse_images[k] = Ginv.apply(F.inverse_images[k]);
  }
  return out;
}

// Whether the stored inverse witness really inverts: both compositions fix
// every generator.
inline bool check_automorphism(const FreeAutomorphism& f) {
  FreeAutomorphism inv{f.n, f.inverse_images, f.images};
  return compose(f, inv).is_identity() && compose(inv, f).is_identity();
}

// psi(beta_i):  x_i <-> x_{i+1},  g_i |-> g_i x_i g_i^-1 g_{i+1}  (the
// reduced form of [g_i, x_i] x_i g_{i+1}),  g_{i+1} |-> g_i, rest fixed.
inline FreeAutomorphism psi_generator(int n, int i) {
  if (n < 2 || i < 1 || i > n - 1)
    throw std::invalid_argument("psi_generator: need n >= 2 and 1 <= i <= n-1");
  FreeAutomorphism f = identity_automorphism(n);
  int gi = i, gi1 = i + 1, xi = n + i, xi1 = n + i + 1;
  f.images[static_cast<std::size_t>(xi) - 1] = {xi1};
  f.images[static_cast<std::size_t>(xi1) - 1] = {xi};
  f.images[static_cast<std::size_t>(gi) - 1] = {gi, xi, -gi, gi1};
  f.images[static_cast<std::size_t>(gi1) - 1] = {gi};
  // inverse: x_i <-> x_{i+1}, g_i |-> g_{i+1}, g_{i+1} |-> g_{i+1} x_{i+1}^-1 g_{i+1}^-1 g_i
  f.inverse_images[static_cast<std::size_t>(xi) - 1] = {xi1};
  f.inverse_images[static_cast<std::size_t>(xi1) - 1] = {xi};
  f.inverse_images[static_cast<std::size_t>(gi) - 1] = {gi1};
  f.inverse_images[static_cast<std::size_t>(gi1) - 1] = {gi1, -xi1, -gi1, gi};
  return f;
}

// Evaluate a reduced word at a tuple (g_1..g_n, x_1..x_n) of group elements.
inline int evaluate_word(const FiniteGroup& G, const FreeWord& w, const std::vector<int>& tuple) {
  int acc = 0;
  for (int l : w) {
    int k = l > 0 ? l : -l;
    if (k < 1 || static_cast<std::size_t>(k) > tuple.size())
      throw std::invalid_argument("evaluate_word: letter out of range for tuple");
    int v = tuple[static_cast<std::size_t>(k) - 1];
    acc = G.mul(acc, l > 0 ? v : G.inv(v));
  }
  return acc;
}

// The induced action of beta_i on G^{2n}: substitute the tuple into the
// generator images of psi(beta_i).
inline std::vector<int> psi_tuple_action(const FiniteGroup& G, int n, int i,
                                         const std::vector<int>& tuple) {
  if (tuple.size() != static_cast<std::size_t>(2) * n)
    throw std::invalid_argument("psi_tuple_action: tuple must have 2n entries");
  FreeAutomorphism f = psi_generator(n, i);
  std::vector<int> out(tuple.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = evaluate_word(G, f.images[k], tuple);
  return out;
}

}  // namespace tqd
