#pragma once

// Finite-group closure of a set of monomial operators under composition and
// inversion, plus structural readings of the closed set: diagonal subgroup,
// permutation quotient, abstract-group nilpotency.  Budgets convert the
// nontermination risk of an unexpectedly large image into reported
// incompleteness instead of a hang.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tqd/group.hpp"
#include "tqd/monomial.hpp"

namespace tqd {

// Thrown where a partial answer would be silently wrong; the CLI maps it to
// its own exit code.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

struct GroupClosure {
  std::vector<MonomialOp> elements;   // sorted by (r, perm, scal); closed iff complete
  std::vector<int> generator_indices; // positions of the generators in elements
  int identity_index = -1;
  bool complete = false;

  long long order() const { return static_cast<long long>(elements.size()); }
};

// Breadth-first closure under right-multiplication by the generators and
// their inverses.  The element set and ordering are deterministic: the
// frontier is expanded in sorted order and the final set is sorted.
inline GroupClosure close(const std::vector<MonomialOp>& gens, std::size_t max_elements = 1000000) {
  if (gens.empty()) throw std::invalid_argument("close: need at least one generator");
  if (max_elements < 1) throw std::invalid_argument("close: max_elements must be >= 1");
  for (const MonomialOp& g : gens)
    if (g.dim() != gens[0].dim() || g.r != gens[0].r)
      throw std::invalid_argument("close: generators have mismatched dim or r");

  std::vector<MonomialOp> multipliers = gens;
  for (const MonomialOp& g : gens) multipliers.push_back(inverse(g));
  std::sort(multipliers.begin(), multipliers.end());
  multipliers.erase(std::unique(multipliers.begin(), multipliers.end()), multipliers.end());

  std::set<MonomialOp> seen;
  MonomialOp id = monomial_identity(gens[0].dim(), gens[0].r);
  seen.insert(id);
  std::vector<MonomialOp> frontier{id};
  bool complete = true;
  while (!frontier.empty()) {
    std::vector<MonomialOp> next;
    for (const MonomialOp& x : frontier) {
      for (const MonomialOp& m : multipliers) {
        MonomialOp y = x * m;
        if (seen.size() >= max_elements && !seen.count(y)) {
          complete = false;
          continue;
        }
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
      if (!complete) break;
    }
    if (!complete) break;
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }

  GroupClosure out;
  out.elements.assign(seen.begin(), seen.end());  // std::set iterates sorted
  out.complete = complete;
  auto locate = [&](const MonomialOp& op) {
    auto it = std::lower_bound(out.elements.begin(), out.elements.end(), op);
    return it != out.elements.end() && *it == op ? static_cast<int>(it - out.elements.begin()) : -1;
  };
  out.identity_index = locate(id);
  for (const MonomialOp& g : gens) {
    int idx = locate(g);
    if (idx >= 0) out.generator_indices.push_back(idx);
  }
  return out;
}

inline void require_complete(const GroupClosure& c, const std::string& what) {
  if (!c.complete)
    throw BudgetError(what + ": closure incomplete at " + std::to_string(c.order()) +
                      " elements; rerun with a larger --max-elements budget");
}

// Count of elements whose permutation part is the identity.
inline long long diagonal_subgroup_order(const GroupClosure& c) {
  require_complete(c, "diagonal_subgroup_order");
  long long count = 0;
  for (const MonomialOp& op : c.elements) {
    bool diag = true;
    for (int i = 0; i < op.dim() && diag; ++i)
      diag = op.perm[static_cast<std::size_t>(i)] == i;
    if (diag) ++count;
  }
  return count;
}

// Order of the image in the plain permutation group (forget scalars).
inline long long permutation_quotient_order(const GroupClosure& c) {
  require_complete(c, "permutation_quotient_order");
  std::set<std::vector<int>> perms;
  for (const MonomialOp& op : c.elements) perms.insert(op.perm);
  return static_cast<long long>(perms.size());
}

// Index-based group view of a complete closure, satisfying the same
// interface as FiniteGroup (order / identity / mul / inv), so the subgroup
// and lower-central-series machinery applies unchanged.
class ClosureGroup {
 public:
  explicit ClosureGroup(const GroupClosure& c) : c_(&c) {
    require_complete(c, "ClosureGroup");
    for (std::size_t i = 0; i < c.elements.size(); ++i)
      index_.emplace(&c.elements[i], static_cast<int>(i));
  }

  int order() const { return static_cast<int>(c_->elements.size()); }
  int identity() const { return c_->identity_index; }
  int mul(int a, int b) const {
    return find(c_->elements[static_cast<std::size_t>(a)] * c_->elements[static_cast<std::size_t>(b)]);
  }
  int inv(int a) const { return find(inverse(c_->elements[static_cast<std::size_t>(a)])); }

 private:
  struct DerefLess {
    bool operator()(const MonomialOp* a, const MonomialOp* b) const { return *a < *b; }
  };
  int find(const MonomialOp& op) const {
    auto it = index_.find(&op);
    if (it == index_.end())
      throw std::logic_error("ClosureGroup: product left the element set (closure not closed?)");
    return it->second;
  }
  const GroupClosure* c_;
  std::map<const MonomialOp*, int, DerefLess> index_;
};

// Nilpotency class of the abstract group underlying a complete closure.
inline std::optional<int> nilpotency_class_closure(const GroupClosure& c,
                                                   long long cap = 100000) {
  require_complete(c, "nilpotency_class_closure");
  if (c.order() > cap)
    throw BudgetError("nilpotency_class_closure: order " + std::to_string(c.order()) +
                      " exceeds cap " + std::to_string(cap));
  ClosureGroup G(c);
  std::vector<int> gens = c.generator_indices;
  if (gens.empty()) gens.push_back(G.identity());
  return nilpotency_class_of(G, gens);
}

// Exhaustively confirm a complete closure is really closed (identity,
// inverses, all pairwise products inside); used by tests and self-checks.
// Orders above `exhaustive_cap` spot-check a deterministic sample instead.
inline bool verify_closed(const GroupClosure& c, long long exhaustive_cap = 10000) {
  require_complete(c, "verify_closed");
  std::set<MonomialOp> all(c.elements.begin(), c.elements.end());
  if (c.identity_index < 0) return false;
  long long n = c.order();
  long long stride = n > exhaustive_cap ? n / exhaustive_cap + 1 : 1;
  for (long long a = 0; a < n; a += stride) {
    const MonomialOp& A = c.elements[static_cast<std::size_t>(a)];
    if (!all.count(inverse(A))) return false;
    for (long long b = 0; b < n; b += stride)
      if (!all.count(A * c.elements[static_cast<std::size_t>(b)])) return false;
  }
  return true;
}

}  // namespace tqd
