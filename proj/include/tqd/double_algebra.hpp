#pragma once

// The twisted double algebra of (G, omega): basis delta_x * gbar over G x G,
// theta-twisted multiplication, gamma-twisted coproduct, R-matrix and its
// inverse, associator scalars, and the exhaustive structure self-tests the
// CLI and the acceptance suite share.
//
// Elements are sparse maps basis -> CycInt kept in canonical form (no stored
// zero coefficients), so exact equality is map equality.

#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>

#include "tqd/cocycle.hpp"
#include "tqd/cyclotomic.hpp"
#include "tqd/group.hpp"

namespace tqd {

// delta_x * gbar
struct DoubleBasis {
  int x = 0;
  int g = 0;
  friend auto operator<=>(const DoubleBasis&, const DoubleBasis&) = default;
};

using AlgElement = std::map<DoubleBasis, CycInt>;
using TensorBasis = std::pair<DoubleBasis, DoubleBasis>;
using TensorElement = std::map<TensorBasis, CycInt>;

// The printed coproduct's second tensor factor reads delta_x where the sum
// over factorizations yz = x suggests delta_z; both readings are available
// and the multiplicativity check Delta(ab) = Delta(a)Delta(b) selects
// `standard` (= delta_z), frozen as the default.
enum class CoproductVariant { printed, standard };
inline constexpr CoproductVariant kDefaultCoproductVariant = CoproductVariant::standard;

// Sign with which the associator exponent w(u,v,t) enters a forward
// rebracketing move ((AB)C) -> (A(BC)); fixed by the braid-relation arbiter
// in the braid representation module and frozen here.
inline constexpr int kDefaultAssociatorSign = -1;

struct DoubleOptions {
  ThetaVariant theta = kDefaultThetaVariant;
  CoproductVariant coproduct = kDefaultCoproductVariant;
  int assoc_sign = kDefaultAssociatorSign;
};

// (delta_x gbar)(delta_y hbar) = theta_x(g,h) [x == g y g^-1] delta_x (gh)bar
inline std::optional<std::pair<RootExponent, DoubleBasis>> basis_mul(
    const Cocycle3& w, DoubleBasis b1, DoubleBasis b2, const DoubleOptions& opt = {}) {
  const FiniteGroup& G = w.group();
  if (b1.x != G.conj(b1.g, b2.x)) return std::nullopt;
  return std::make_pair(theta(w, b1.x, b1.g, b2.g, opt.theta),
                        DoubleBasis{b1.x, G.mul(b1.g, b2.g)});
}

inline void add_term(AlgElement& a, const DoubleBasis& b, CycInt c) {
  auto it = a.find(b);
  if (it == a.end()) {
    if (!c.is_zero()) a.emplace(b, std::move(c));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) a.erase(it);
}

inline void add_term(TensorElement& a, const TensorBasis& b, CycInt c) {
  auto it = a.find(b);
  if (it == a.end()) {
    if (!c.is_zero()) a.emplace(b, std::move(c));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) a.erase(it);
}

inline AlgElement alg_unit(const Cocycle3& w) {
  AlgElement u;
  for (int g = 0; g < w.group().order(); ++g)
    u.emplace(DoubleBasis{g, 0}, CycInt::one(w.r()));
  return u;
}

inline AlgElement alg_mul(const Cocycle3& w, const AlgElement& a, const AlgElement& b,
                          const DoubleOptions& opt = {}) {
  AlgElement out;
  for (const auto& [ba, ca] : a)
    for (const auto& [bb, cb] : b) {
      auto prod = basis_mul(w, ba, bb, opt);
      if (!prod) continue;
      CycInt c = ca * cb;
      c *= prod->first;
      add_term(out, prod->second, std::move(c));
    }
  return out;
}

// Delta(delta_x gbar) = sum over factorizations yz = x of
// gamma_g(y,z) * (delta_y gbar (x) delta_z gbar); |G| terms.
inline TensorElement coproduct(const Cocycle3& w, DoubleBasis b, const DoubleOptions& opt = {}) {
  const FiniteGroup& G = w.group();
  TensorElement out;
  for (int y = 0; y < G.order(); ++y) {
    int z = G.mul(G.inv(y), b.x);  // unique z with yz = x
    int second_x = opt.coproduct == CoproductVariant::printed ? b.x : z;
    CycInt c = CycInt::one(w.r());
    c *= gamma(w, b.g, y, z);
    add_term(out, {DoubleBasis{y, b.g}, DoubleBasis{second_x, b.g}}, std::move(c));
  }
  return out;
}

inline TensorElement coproduct(const Cocycle3& w, const AlgElement& a,
                               const DoubleOptions& opt = {}) {
  TensorElement out;
  for (const auto& [b, c] : a)
    for (auto& [tb, tc] : coproduct(w, b, opt)) add_term(out, tb, c * tc);
  return out;
}

// componentwise product (a (x) b)(c (x) d) = ac (x) bd; no sign rule
inline TensorElement tensor_mul(const Cocycle3& w, const TensorElement& a,
                                const TensorElement& b, const DoubleOptions& opt = {}) {
  TensorElement out;
  for (const auto& [ba, ca] : a)
    for (const auto& [bb, cb] : b) {
      auto left = basis_mul(w, ba.first, bb.first, opt);
      if (!left) continue;
      auto right = basis_mul(w, ba.second, bb.second, opt);
      if (!right) continue;
      CycInt c = ca * cb;
      c *= left->first;
      c *= right->first;
      add_term(out, {left->second, right->second}, std::move(c));
    }
  return out;
}

inline TensorElement unit_tensor(const Cocycle3& w) {
  TensorElement out;
  for (int g = 0; g < w.group().order(); ++g)
    for (int h = 0; h < w.group().order(); ++h)
      out.emplace(TensorBasis{DoubleBasis{g, 0}, DoubleBasis{h, 0}}, CycInt::one(w.r()));
  return out;
}

// R = sum_g delta_g (x) gbar, expanded in the basis: sum_{g,y} delta_g ebar (x) delta_y gbar
inline TensorElement r_matrix(const Cocycle3& w) {
  TensorElement out;
  for (int g = 0; g < w.group().order(); ++g)
    for (int y = 0; y < w.group().order(); ++y)
      out.emplace(TensorBasis{DoubleBasis{g, 0}, DoubleBasis{y, g}}, CycInt::one(w.r()));
  return out;
}

// R^-1 = sum_{g,h} theta_{g h g^-1}(g, g^-1)^-1 delta_g ebar (x) delta_h (g^-1)bar
inline TensorElement r_matrix_inv(const Cocycle3& w, const DoubleOptions& opt = {}) {
  const FiniteGroup& G = w.group();
  TensorElement out;
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h) {
      int e = theta_hat(w, G.conj(g, h), g, G.inv(g), opt.theta);
      CycInt c = CycInt::from_root(RootExponent(w.r(), -e));
      out.emplace(TensorBasis{DoubleBasis{g, 0}, DoubleBasis{h, G.inv(g)}}, std::move(c));
    }
  return out;
}

// Scalar exponent of the associativity isomorphism on a grouped label whose
// three segments have x-products u, v, t (forward move ((AB)C) -> (A(BC))).
inline RootExponent associator_exponent(const Cocycle3& w, int u, int v, int t,
                                        const DoubleOptions& opt = {}) {
  return RootExponent(w.r(), detail::mod_r(opt.assoc_sign * w.what(u, v, t), w.r()));
}

// --- structure self-tests ---------------------------------------------------
// Each check returns nullopt on success or a witness description on failure.

using CheckFailure = std::optional<std::string>;

namespace detail {
inline std::string basis_str(DoubleBasis b) {
  return "(x=" + std::to_string(b.x) + ",g=" + std::to_string(b.g) + ")";
}

// Compare (b1 b2) b3 with b1 (b2 b3) purely in exponent arithmetic: each side
// is zero or a single scaled basis element.
inline bool assoc_triple_ok(const Cocycle3& w, DoubleBasis b1, DoubleBasis b2, DoubleBasis b3,
                            const DoubleOptions& opt) {
  std::optional<std::pair<int, DoubleBasis>> lhs, rhs;
  if (auto p = basis_mul(w, b1, b2, opt)) {
    if (auto q = basis_mul(w, p->second, b3, opt))
      lhs = {p->first.e + q->first.e, q->second};
  }
  if (auto p = basis_mul(w, b2, b3, opt)) {
    if (auto q = basis_mul(w, b1, p->second, opt))
      rhs = {p->first.e + q->first.e, q->second};
  }
  if (lhs.has_value() != rhs.has_value()) return false;
  if (!lhs) return true;
  return lhs->second == rhs->second && (lhs->first - rhs->first) % w.r() == 0;
}
}  // namespace detail

inline CheckFailure check_associativity_exhaustive(const Cocycle3& w,
                                                   const DoubleOptions& opt = {}) {
  int n = w.group().order();
  for (int x1 = 0; x1 < n; ++x1)
    for (int g1 = 0; g1 < n; ++g1)
      for (int x2 = 0; x2 < n; ++x2)
        for (int g2 = 0; g2 < n; ++g2)
          for (int x3 = 0; x3 < n; ++x3)
            for (int g3 = 0; g3 < n; ++g3) {
              DoubleBasis b1{x1, g1}, b2{x2, g2}, b3{x3, g3};
              if (!detail::assoc_triple_ok(w, b1, b2, b3, opt))
                return "associativity fails at " + detail::basis_str(b1) + " " +
                       detail::basis_str(b2) + " " + detail::basis_str(b3);
            }
  return std::nullopt;
}

inline CheckFailure check_associativity_sampled(const Cocycle3& w, int samples,
                                                unsigned seed = 20260822,
                                                const DoubleOptions& opt = {}) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, w.group().order() - 1);
  for (int s = 0; s < samples; ++s) {
    DoubleBasis b1{pick(rng), pick(rng)}, b2{pick(rng), pick(rng)}, b3{pick(rng), pick(rng)};
    if (!detail::assoc_triple_ok(w, b1, b2, b3, opt))
      return "associativity fails at " + detail::basis_str(b1) + " " + detail::basis_str(b2) +
             " " + detail::basis_str(b3);
  }
  return std::nullopt;
}

inline CheckFailure check_unit_law(const Cocycle3& w, const DoubleOptions& opt = {}) {
  AlgElement u = alg_unit(w);
  int n = w.group().order();
  for (int x = 0; x < n; ++x)
    for (int g = 0; g < n; ++g) {
      AlgElement a{{DoubleBasis{x, g}, CycInt::one(w.r())}};
      if (alg_mul(w, u, a, opt) != a)
        return "left unit law fails at " + detail::basis_str({x, g});
      if (alg_mul(w, a, u, opt) != a)
        return "right unit law fails at " + detail::basis_str({x, g});
    }
  return std::nullopt;
}

// Delta(a b) = Delta(a) Delta(b) over all basis pairs.
inline CheckFailure check_coproduct_multiplicative(const Cocycle3& w,
                                                   const DoubleOptions& opt = {}) {
  int n = w.group().order();
  for (int x1 = 0; x1 < n; ++x1)
    for (int g1 = 0; g1 < n; ++g1)
      for (int x2 = 0; x2 < n; ++x2)
        for (int g2 = 0; g2 < n; ++g2) {
          DoubleBasis b1{x1, g1}, b2{x2, g2};
          AlgElement prod;
          if (auto p = basis_mul(w, b1, b2, opt)) {
            CycInt c = CycInt::from_root(p->first);
            prod.emplace(p->second, std::move(c));
          }
          TensorElement lhs = coproduct(w, prod, opt);
          TensorElement rhs =
              tensor_mul(w, coproduct(w, b1, opt), coproduct(w, b2, opt), opt);
          if (lhs != rhs)
            return "coproduct multiplicativity fails at " + detail::basis_str(b1) + " " +
                   detail::basis_str(b2);
        }
  return std::nullopt;
}

inline CheckFailure check_r_inverse(const Cocycle3& w, const DoubleOptions& opt = {}) {
  TensorElement R = r_matrix(w), Rinv = r_matrix_inv(w, opt), unit2 = unit_tensor(w);
  if (tensor_mul(w, R, Rinv, opt) != unit2) return std::string("R * R^-1 != unit (x) unit");
  if (tensor_mul(w, Rinv, R, opt) != unit2) return std::string("R^-1 * R != unit (x) unit");
  return std::nullopt;
}

// R Delta(a) R^-1 = flip(Delta(a)) for all basis a; exact on small groups.
inline CheckFailure check_r_commutation(const Cocycle3& w, const DoubleOptions& opt = {}) {
  TensorElement R = r_matrix(w), Rinv = r_matrix_inv(w, opt);
  int n = w.group().order();
  for (int x = 0; x < n; ++x)
    for (int g = 0; g < n; ++g) {
      TensorElement d = coproduct(w, DoubleBasis{x, g}, opt);
      TensorElement lhs = tensor_mul(w, tensor_mul(w, R, d, opt), Rinv, opt);
      TensorElement flipped;
      for (const auto& [tb, c] : d) add_term(flipped, {tb.second, tb.first}, c);
      if (lhs != flipped)
        return "R-commutation fails at " + detail::basis_str({x, g});
    }
  return std::nullopt;
}

// counit eps(delta_x gbar) = [x == e]: (eps (x) id) Delta = id = (id (x) eps) Delta
inline CheckFailure check_counit(const Cocycle3& w, const DoubleOptions& opt = {}) {
  int n = w.group().order();
  for (int x = 0; x < n; ++x)
    for (int g = 0; g < n; ++g) {
      DoubleBasis b{x, g};
      AlgElement expect{{b, CycInt::one(w.r())}};
      AlgElement left, right;
      for (const auto& [tb, c] : coproduct(w, b, opt)) {
        if (tb.first.x == 0) add_term(left, tb.second, c);
        if (tb.second.x == 0) add_term(right, tb.first, c);
      }
      if (left != expect || right != expect)
        return "counit law fails at " + detail::basis_str(b);
    }
  return std::nullopt;
}

}  // namespace tqd
