#pragma once

// Structural analysis of the finite monomial image groups: orders of the
// braid and pure-braid images, diagonal/permutation decomposition, prime-power
// detection, nilpotency class, and the Coxeter finiteness criterion.

#include <optional>
#include <string>
#include <vector>

#include "tqd/braidrep.hpp"
#include "tqd/closure.hpp"
#include "tqd/cocycle.hpp"
#include "tqd/group.hpp"

namespace tqd {

// Finiteness of the Coxeter-type quotient on n strands whose generators have
// order k: finite exactly when 1/n + 1/k > 1/2, evaluated exactly over the
// integers as 2(n+k) > nk.
inline bool coxeter_finite(long long n, long long k) {
  if (n < 2) throw std::invalid_argument("coxeter_finite: n must be >= 2");
  if (k < 1) throw std::invalid_argument("coxeter_finite: k must be >= 1");
  return 2 * (n + k) > n * k;
}

struct AnalysisOptions {
  DoubleOptions algebra;
  std::size_t max_elements = 1000000;  // closure budget
  long long order_cap = 1000000;       // element-order search cap
  bool want_braid = true;              // close the full braid image
  bool want_pure = true;               // close the pure-braid image
};

struct ImageReport {
  std::string group_name;
  std::string cocycle_name;
  int n = 0;
  long long dim = 0;  // |G|^(2n)
  int r = 0;          // scalar root order

  std::optional<long long> braid_order;  // |image of B_n|, if closure completed
  bool braid_complete = false;
  std::optional<long long> pure_order;  // |image of P_n| via band generators
  bool pure_complete = false;

  std::optional<long long> diagonal_order;     // diagonal part of the braid image
  std::optional<long long> permutation_order;  // distinct permutation parts

  std::optional<long long> generator_order;     // order of the image of a braid generator
  std::optional<long long> generator_sq_order;  // order of the image of its square

  std::optional<int> group_prime;  // p when |G| is a p-power (and |G| > 1)
  std::optional<bool> pure_order_p_power;
  std::optional<bool> generator_sq_order_p_power;

  std::optional<int> pure_class;   // nilpotency class of the pure-braid image
  std::optional<int> group_class;  // nilpotency class of G itself; the two are
                                   // reported side by side with no claimed relation
  std::optional<bool> coxeter_verdict;  // criterion at (n, generator_order)
};

inline ImageReport analyze(const Cocycle3& w, int n, const AnalysisOptions& opts = {}) {
  const FiniteGroup& G = w.group();
  ImageReport rep;
  rep.group_name = G.name();
  rep.cocycle_name = w.name();
  rep.n = n;
  LabelCodec codec(G.order(), n);
  rep.dim = codec.dim();
  rep.r = w.r();

  std::vector<MonomialOp> braid_gens;
  for (int i = 1; i < n; ++i) braid_gens.push_back(braid_generator(w, n, i, opts.algebra));
  if (braid_gens.empty()) braid_gens.push_back(monomial_identity(rep.dim, w.r()));

  rep.generator_order = element_order(braid_gens.front(), opts.order_cap);
  MonomialOp sq = braid_gens.front() * braid_gens.front();
  rep.generator_sq_order = element_order(sq, opts.order_cap);

  if (opts.want_braid) {
    GroupClosure braid = close(braid_gens, opts.max_elements);
    rep.braid_complete = braid.complete;
    if (braid.complete) {
      rep.braid_order = braid.order();
      rep.diagonal_order = diagonal_subgroup_order(braid);
      rep.permutation_order = permutation_quotient_order(braid);
    }
  }

  if (opts.want_pure) {
    std::vector<MonomialOp> pure_gens;
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j)
        pure_gens.push_back(pure_braid_generator(w, n, i, j, opts.algebra));
    if (pure_gens.empty()) pure_gens.push_back(monomial_identity(rep.dim, w.r()));

    GroupClosure pure = close(pure_gens, opts.max_elements);
    rep.pure_complete = pure.complete;
    if (pure.complete) {
      rep.pure_order = pure.order();
      try {
        rep.pure_class = nilpotency_class_closure(pure, opts.order_cap);
      } catch (const BudgetError&) {
        // leave pure_class unset; the order itself is still reported
      }
    }
  }

  PGroupStatus ps = is_p_group(G);
  if (!ps.trivial && ps.pk) rep.group_prime = static_cast<int>(ps.pk->first);
  if (rep.group_prime) {
    auto p_power = [&](long long v) {
      if (v == 1) return true;
      auto f = prime_power(v);
      return f.has_value() && f->first == *rep.group_prime;
    };
    if (rep.pure_order) rep.pure_order_p_power = p_power(*rep.pure_order);
    if (rep.generator_sq_order) rep.generator_sq_order_p_power = p_power(*rep.generator_sq_order);
  }

  rep.group_class = nilpotency_class(G);
  if (rep.generator_order && n >= 2) rep.coxeter_verdict = coxeter_finite(n, *rep.generator_order);
  return rep;
}

}  // namespace tqd
