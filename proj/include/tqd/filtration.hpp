#pragma once

// Empirical checker for the filtration nilpotency bound: given a group H
// with a chain of normal subgroups H = H_0 > H_1 > ... > H_N = 1 whose
// quotients are abelian and with [H_i, H_j] inside H_{i+j}, any group of
// automorphisms preserving the chain and acting trivially on each quotient
// is nilpotent of class at most N-1.  All hypotheses are verified
// exhaustively and violations are reported with witnesses, never assumed.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "tqd/closure.hpp"
#include "tqd/group.hpp"
#include "tqd/monomial.hpp"

namespace tqd {

struct FiltrationSpec {
  FiniteGroup H;
  std::vector<std::vector<int>> chain;  // element-index sets H_0, ..., H_N
};

struct FiltrationReport {
  bool hypotheses_ok = false;
  std::vector<std::string> violations;     // witnesses for every failed hypothesis
  long long aut_group_order = 0;           // order of the closure of the given auts
  bool aut_closure_complete = false;
  std::optional<int> aut_class;            // nilpotency class of that closure
  int bound = 0;                           // N - 1
  bool class_within_bound = false;
};

// auts are permutations of the element indices of H (images per index).
inline FiltrationReport check_filtration_lemma(const FiltrationSpec& f,
                                               const std::vector<std::vector<int>>& auts,
                                               std::size_t max_elements = 1000000) {
  const FiniteGroup& H = f.H;
  int order = H.order();
  FiltrationReport rep;
  auto violate = [&](const std::string& msg) { rep.violations.push_back(msg); };
  auto elt = [](int i) { return std::to_string(i); };

  if (f.chain.size() < 2) {
    violate("chain must have at least two levels H_0 and H_N");
    return rep;
  }
  int N = static_cast<int>(f.chain.size()) - 1;
  rep.bound = N - 1;

  // membership masks per level
  std::vector<std::vector<char>> in(f.chain.size(),
                                    std::vector<char>(static_cast<std::size_t>(order), 0));
  for (std::size_t k = 0; k < f.chain.size(); ++k)
    for (int e : f.chain[k]) {
      if (e < 0 || e >= order) {
        violate("level " + std::to_string(k) + " lists element " + elt(e) + " outside the group");
        return rep;
      }
      in[k][static_cast<std::size_t>(e)] = 1;
    }
  auto member = [&](int level, int g) {
    return in[static_cast<std::size_t>(level)][static_cast<std::size_t>(g)] != 0;
  };

  if (f.chain.front().size() != static_cast<std::size_t>(order)) violate("level 0 must be all of H");
  if (f.chain.back() != std::vector<int>{H.identity()})
    violate("last level must be exactly the identity");

  for (int k = 0; k <= N; ++k) {
    const std::vector<int>& level = f.chain[static_cast<std::size_t>(k)];
    if (!member(k, H.identity()))
      violate("level " + std::to_string(k) + " does not contain the identity");
    [&] {  // one witness per failed hypothesis is enough
      for (int a : level)
        for (int b : level)
          if (!member(k, H.mul(a, b)))
            return violate("level " + std::to_string(k) + " is not a subgroup: " + elt(a) + "*" +
                           elt(b) + " escapes");
    }();
    [&] {
      if (k == 0) return;
      for (int a : level)
        if (!member(k - 1, a))
          return violate("level " + std::to_string(k) + " is not contained in level " +
                         std::to_string(k - 1) + ": element " + elt(a));
    }();
    [&] {
      for (int g = 0; g < order; ++g)
        for (int a : level)
          if (!member(k, H.conj(g, a)))
            return violate("level " + std::to_string(k) + " is not normal: " + elt(g) +
                           " conjugates " + elt(a) + " out");
    }();
  }

  // abelian quotients: [H_k, H_k] inside H_{k+1}
  for (int k = 0; k < N; ++k)
    [&] {
      for (int a : f.chain[static_cast<std::size_t>(k)])
        for (int b : f.chain[static_cast<std::size_t>(k)])
          if (!member(k + 1, H.comm(a, b)))
            return violate("quotient at level " + std::to_string(k) + " is not abelian: [" +
                           elt(a) + "," + elt(b) + "] escapes level " + std::to_string(k + 1));
    }();

  // [H_i, H_j] inside H_{min(i+j, N)}
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= N; ++j)
      [&] {
        int target = std::min(i + j, N);
        for (int a : f.chain[static_cast<std::size_t>(i)])
          for (int b : f.chain[static_cast<std::size_t>(j)])
            if (!member(target, H.comm(a, b)))
              return violate("[level " + std::to_string(i) + ", level " + std::to_string(j) +
                             "] escapes level " + std::to_string(target) + ": witness [" + elt(a) +
                             "," + elt(b) + "]");
      }();

  // each aut: bijective homomorphism, preserves the chain, trivial on quotients
  for (std::size_t ai = 0; ai < auts.size(); ++ai) {
    const std::vector<int>& p = auts[ai];
    std::string who = "aut " + std::to_string(ai);
    if (p.size() != static_cast<std::size_t>(order)) {
      violate(who + " has wrong length");
      continue;
    }
    std::vector<char> hit(static_cast<std::size_t>(order), 0);
    bool bij = true;
    for (int v : p) {
      if (v < 0 || v >= order || hit[static_cast<std::size_t>(v)]) {
        bij = false;
        break;
      }
      hit[static_cast<std::size_t>(v)] = 1;
    }
    if (!bij) {
      violate(who + " is not a permutation of the elements");
      continue;
    }
    auto img = [&](int g) { return p[static_cast<std::size_t>(g)]; };
    [&] {
      for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
          if (img(H.mul(a, b)) != H.mul(img(a), img(b)))
            return violate(who + " is not a homomorphism: fails at (" + elt(a) + "," + elt(b) +
                           ")");
      for (int k = 0; k <= N; ++k)
        for (int a : f.chain[static_cast<std::size_t>(k)])
          if (!member(k, img(a)))
            return violate(who + " does not preserve level " + std::to_string(k) + ": moves " +
                           elt(a) + " out");
      for (int k = 0; k < N; ++k)
        for (int a : f.chain[static_cast<std::size_t>(k)])
          if (!member(k + 1, H.mul(img(a), H.inv(a))))
            return violate(who + " acts nontrivially on the quotient at level " +
                           std::to_string(k) + ": witness " + elt(a));
    }();
  }

  rep.hypotheses_ok = rep.violations.empty();

  // close the generated automorphism group (permutations as r=1 operators)
  std::vector<MonomialOp> gens;
  for (const std::vector<int>& p : auts) {
    if (p.size() != static_cast<std::size_t>(order)) continue;
    MonomialOp op;
    op.r = 1;
    op.perm = p;
    op.scal.assign(p.size(), 0);
    try {
      validate_monomial(op);
    } catch (const std::invalid_argument&) {
      continue;  // already reported above
    }
    gens.push_back(std::move(op));
  }
  if (gens.empty()) gens.push_back(monomial_identity(order, 1));
  GroupClosure c = close(gens, max_elements);
  rep.aut_group_order = c.order();
  rep.aut_closure_complete = c.complete;
  if (c.complete) {
    rep.aut_class = nilpotency_class_closure(c, static_cast<long long>(max_elements));
    rep.class_within_bound = rep.aut_class.has_value() && *rep.aut_class <= rep.bound;
  }
  return rep;
}

}  // namespace tqd
