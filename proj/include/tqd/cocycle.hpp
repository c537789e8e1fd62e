#pragma once

// Normalized 3-cocycles on a finite group with values in the roots of unity
// mu_r, stored as exponent tables mod r.  Also the derived 2-cochains theta
// and gamma that twist the double's multiplication and coproduct.

#include <array>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tqd/cyclotomic.hpp"
#include "tqd/group.hpp"

namespace tqd {

namespace detail {
inline int mod_r(long long v, int r) {
  long long m = v % r;
  if (m < 0) m += r;
  return static_cast<int>(m);
}
}  // namespace detail

// Normalized 2-cochain G x G -> Z/r (exponents); input to coboundary().
class Cochain2 {
 public:
  Cochain2(FiniteGroup G, int r, std::vector<int> table)
      : G_(std::move(G)), r_(r), t_(std::move(table)) {
    if (r_ < 1) throw std::invalid_argument("Cochain2: r must be >= 1");
    std::size_t n = static_cast<std::size_t>(G_.order());
    if (t_.size() != n * n) throw std::invalid_argument("Cochain2: table has wrong size");
    for (int& v : t_) v = detail::mod_r(v, r_);
    for (int g = 0; g < G_.order(); ++g)
      if (at(0, g) != 0 || at(g, 0) != 0)
        throw std::invalid_argument("Cochain2: not normalized (nonzero at identity)");
  }

  const FiniteGroup& group() const { return G_; }
  int r() const { return r_; }
  int at(int a, int b) const { return t_[static_cast<std::size_t>(a) * G_.order() + b]; }

 private:
  FiniteGroup G_;
  int r_;
  std::vector<int> t_;
};

// Normalized 3-cocycle, exponent table over G^3.  Construction enforces
// normalization; the cocycle condition itself is checked by check_cocycle so
// that deliberately broken tables can be loaded and diagnosed.
class Cocycle3 {
 public:
  Cocycle3(FiniteGroup G, int r, std::vector<int> table, std::string name)
      : G_(std::move(G)), r_(r), t_(std::move(table)), name_(std::move(name)) {
    if (r_ < 1) throw std::invalid_argument("Cocycle3: r must be >= 1");
    std::size_t n = static_cast<std::size_t>(G_.order());
    if (t_.size() != n * n * n) throw std::invalid_argument("Cocycle3: table has wrong size");
    for (int& v : t_) v = detail::mod_r(v, r_);
    for (int a = 0; a < G_.order(); ++a)
      for (int b = 0; b < G_.order(); ++b)
        if (what(0, a, b) != 0 || what(a, 0, b) != 0 || what(a, b, 0) != 0)
          throw std::invalid_argument("Cocycle3 '" + name_ +
                                      "': not normalized (nonzero exponent with identity slot)");
  }

  const FiniteGroup& group() const { return G_; }
  int r() const { return r_; }
  const std::string& name() const { return name_; }

  // exponent of omega(a,b,c) as an integer in [0, r)
  int what(int a, int b, int c) const {
    int n = G_.order();
    return t_[(static_cast<std::size_t>(a) * n + b) * n + c];
  }
  RootExponent w(int a, int b, int c) const { return RootExponent(r_, what(a, b, c)); }

 private:
  FiniteGroup G_;
  int r_;
  std::vector<int> t_;
  std::string name_;
};

inline Cocycle3 trivial_cocycle(const FiniteGroup& G, int r = 1) {
  std::size_t n = static_cast<std::size_t>(G.order());
  return Cocycle3(G, r, std::vector<int>(n * n * n, 0), "trivial");
}

// The standard representative of the degree-3 class on Z/m with parameter q:
// exponent q * a * floor((b+c)/m) mod m, residues a,b,c in [0,m).
inline Cocycle3 cyclic_cocycle(int m, int q) {
  if (m < 1) throw std::invalid_argument("cyclic_cocycle: m must be >= 1");
  if (q < 0 || q >= m) throw std::invalid_argument("cyclic_cocycle: q must be in [0,m)");
  FiniteGroup G = make_cyclic(m);
  std::vector<int> t(static_cast<std::size_t>(m) * m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        t[(static_cast<std::size_t>(a) * m + b) * m + c] =
            detail::mod_r(static_cast<long long>(q) * a * ((b + c) / m), m);
  return Cocycle3(std::move(G), m, std::move(t), "cyclic:" + std::to_string(q));
}

// Exhaustive check of the cocycle identity
//   w(a,b,c) + w(a,bc,d) + w(b,c,d) == w(ab,c,d) + w(a,b,cd)  (mod r)
// over all quadruples; reports the first violation.
struct CocycleCheck {
  bool ok = true;
  std::array<int, 4> violation{-1, -1, -1, -1};
};

inline CocycleCheck check_cocycle(const Cocycle3& w) {
  const FiniteGroup& G = w.group();
  int n = G.order(), r = w.r();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = G.mul(a, b);
      for (int c = 0; c < n; ++c) {
        int bc = G.mul(b, c);
        for (int d = 0; d < n; ++d) {
          int lhs = w.what(a, b, c) + w.what(a, bc, d) + w.what(b, c, d);
          int rhs = w.what(ab, c, d) + w.what(a, b, G.mul(c, d));
          if ((lhs - rhs) % r != 0) return {false, {a, b, c, d}};
        }
      }
    }
  return {};
}

// (d mu)(a,b,c) = mu(b,c) - mu(ab,c) + mu(a,bc) - mu(a,b); always a cocycle.
inline Cocycle3 coboundary(const Cochain2& mu) {
  const FiniteGroup& G = mu.group();
  int n = G.order(), r = mu.r();
  std::vector<int> t(static_cast<std::size_t>(n) * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        t[(static_cast<std::size_t>(a) * n + b) * n + c] = detail::mod_r(
            static_cast<long long>(mu.at(b, c)) - mu.at(G.mul(a, b), c) + mu.at(a, G.mul(b, c)) -
                mu.at(a, b),
            r);
  return Cocycle3(G, r, std::move(t), "coboundary");
}

// Pointwise product (exponent addition); both factors must share group and r.
inline Cocycle3 cocycle_product(const Cocycle3& u, const Cocycle3& v) {
  if (u.group().order() != v.group().order() || u.r() != v.r())
    throw std::invalid_argument("cocycle_product: mismatched group or root order");
  const FiniteGroup& G = u.group();
  int n = G.order();
  std::vector<int> t(static_cast<std::size_t>(n) * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        t[(static_cast<std::size_t>(a) * n + b) * n + c] =
            detail::mod_r(u.what(a, b, c) + v.what(a, b, c), u.r());
  return Cocycle3(G, u.r(), std::move(t), u.name() + "*" + v.name());
}

// --- derived 2-cochains -----------------------------------------------------

// Two candidate conventions exist in the literature for the middle factor of
// theta; `printed` uses omega(h,h,·), `standard` uses omega(g,h,·).  The
// associativity suite over Z/2 and Z/4 with nontrivial omega distinguishes
// them; `standard` is the variant under which the double is associative and
// is the frozen default everywhere.
enum class ThetaVariant { printed, standard };
inline constexpr ThetaVariant kDefaultThetaVariant = ThetaVariant::standard;

// Exponent of theta_x(g,h), the twist on delta_x coming from multiplying the
// group parts g and h.
inline int theta_hat(const Cocycle3& w, int x, int g, int h,
                     ThetaVariant variant = kDefaultThetaVariant) {
  const FiniteGroup& G = w.group();
  int gh = G.mul(g, h);
  int mid = G.conj(G.inv(gh), x);  // (gh)^-1 x (gh) = h^-1 g^-1 x g h
  int first = w.what(x, g, h);
  int second = variant == ThetaVariant::printed ? w.what(h, h, mid) : w.what(g, h, mid);
  int third = w.what(g, G.conj(G.inv(g), x), h);
  return detail::mod_r(first + second - third, w.r());
}

inline RootExponent theta(const Cocycle3& w, int x, int g, int h,
                          ThetaVariant variant = kDefaultThetaVariant) {
  return RootExponent(w.r(), theta_hat(w, x, g, h, variant));
}

// Exponent of gamma_g(y,z), the twist on the coproduct term delta_y (x) delta_z.
inline int gamma_hat(const Cocycle3& w, int g, int y, int z) {
  const FiniteGroup& G = w.group();
  int gi = G.inv(g);
  int val = w.what(y, z, g) + w.what(g, G.conj(gi, y), G.conj(gi, z)) -
            w.what(y, g, G.conj(gi, z));
  return detail::mod_r(val, w.r());
}

inline RootExponent gamma(const Cocycle3& w, int g, int y, int z) {
  return RootExponent(w.r(), gamma_hat(w, g, y, z));
}

// --- file format ------------------------------------------------------------
// line 1: `r R`; then lines `a b c e` giving the exponent of omega(a,b,c);
// omitted triples default to exponent 0; `#` starts a comment line.
// The group is supplied by the caller; element indices refer to its ordering.

inline Cocycle3 from_cocycle_file(const FiniteGroup& G, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open cocycle file: " + path);
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
  if (!next_content_line()) throw std::runtime_error(path + ": empty file, expected `r R` header");
  std::istringstream head(line);
  std::string kw;
  int r = 0;
  if (!(head >> kw >> r) || kw != "r" || r < 1)
    throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected `r R` with R >= 1");
  int n = G.order();
  std::vector<int> t(static_cast<std::size_t>(n) * n * n, 0);
  std::vector<char> set_flag(t.size(), 0);
  while (next_content_line()) {
    std::istringstream ls(line);
    int a, b, c;
    long long e;
    if (!(ls >> a >> b >> c >> e))
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected `a b c e`");
    if (a < 0 || a >= n || b < 0 || b >= n || c < 0 || c >= n)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": element index out of range for group of order " +
                               std::to_string(n));
    std::size_t idx = (static_cast<std::size_t>(a) * n + b) * n + c;
    if (set_flag[idx])
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": duplicate entry for (" +
                               std::to_string(a) + "," + std::to_string(b) + "," +
                               std::to_string(c) + ")");
    set_flag[idx] = 1;
    t[idx] = detail::mod_r(e, r);
  }
  return Cocycle3(G, r, std::move(t), "file:" + path);  // ctor rejects non-normalized input
}

}  // namespace tqd
