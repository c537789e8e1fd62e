#pragma once

// Exact arithmetic with roots of unity and integer linear combinations of
// them (cyclotomic integers).  Scalar convention throughout the library:
// zeta_r = exp(2*pi*i/r), and every scalar is a power of zeta_r stored as an
// exponent mod r.  Zero/equality of sums is decided by reduction modulo the
// r-th cyclotomic polynomial; floating point appears only as a sanity oracle.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tqd {

using BigInt = boost::multiprecision::cpp_int;

// zeta_r^e with 0 <= e < r.  Multiplication adds exponents mod r.
struct RootExponent {
  int r = 1;
  int e = 0;

  RootExponent() = default;
  RootExponent(int r_, long long e_) : r(r_) {
    if (r_ < 1) throw std::invalid_argument("RootExponent: r must be positive");
    e = static_cast<int>(((e_ % r_) + r_) % r_);
  }

  bool is_one() const { return e == 0; }
  RootExponent inverse() const { return RootExponent(r, -static_cast<long long>(e)); }

  friend RootExponent operator*(const RootExponent& a, const RootExponent& b) {
    if (a.r != b.r)
      throw std::invalid_argument("RootExponent: incompatible scalar domains (r mismatch)");
    return RootExponent(a.r, static_cast<long long>(a.e) + b.e);
  }
  friend bool operator==(const RootExponent& a, const RootExponent& b) = default;
};

namespace detail {

// Little-endian integer polynomials, only what cyclotomic reduction needs.
using Poly = std::vector<BigInt>;

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  poly_trim(out);
  return out;
}

// Quotient of a by monic b; throws if the division is not exact.
inline Poly poly_divexact(Poly a, const Poly& b) {
  poly_trim(a);
  if (b.empty() || b.back() != 1)
    throw std::logic_error("poly_divexact: divisor must be monic");
  if (a.empty()) return {};
  if (a.size() < b.size()) throw std::logic_error("poly_divexact: not divisible");
  Poly q(a.size() - b.size() + 1);
  for (std::size_t i = q.size(); i-- > 0;) {
    BigInt c = a[i + b.size() - 1];
    q[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
  }
  poly_trim(a);
  if (!a.empty()) throw std::logic_error("poly_divexact: nonzero remainder");
  return q;
}

// In-place remainder of a modulo monic b.
inline void poly_mod(Poly& a, const Poly& b) {
  poly_trim(a);
  while (a.size() >= b.size()) {
    BigInt c = a.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    poly_trim(a);
  }
}

}  // namespace detail

// Phi_r as little-endian integer coefficients, computed by dividing x^r - 1
// by Phi_d over all proper divisors d of r.  Exact integer arithmetic.
inline std::vector<BigInt> cyclotomic_poly(int r) {
  if (r < 1) throw std::invalid_argument("cyclotomic_poly: r must be positive");
  detail::Poly num(static_cast<std::size_t>(r) + 1);
  num[0] = -1;
  num[static_cast<std::size_t>(r)] = 1;
  for (int d = 1; d < r; ++d) {
    if (r % d != 0) continue;
    num = detail::poly_divexact(std::move(num), cyclotomic_poly(d));
  }
  return num;
}

// An integer linear combination sum_k coeffs[k] * zeta_r^k.
class CycInt {
 public:
  explicit CycInt(int r) : r_(check_r(r)), c_(static_cast<std::size_t>(r)) {}

  CycInt(int r, std::vector<BigInt> coeffs) : r_(check_r(r)), c_(std::move(coeffs)) {
    if (c_.size() != static_cast<std::size_t>(r_))
      throw std::invalid_argument("CycInt: coefficient vector must have length r");
  }

  static CycInt from_root(const RootExponent& z) {
    CycInt out(z.r);
    out.c_[static_cast<std::size_t>(z.e)] = 1;
    return out;
  }

  static CycInt one(int r) { return from_root(RootExponent(r, 0)); }

  int r() const { return r_; }
  const std::vector<BigInt>& coeffs() const { return c_; }

  CycInt& operator+=(const CycInt& o) {
    require_same_r(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  CycInt& operator-=(const CycInt& o) {
    require_same_r(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }

  // Cyclic convolution: exponent indices add mod r.
  friend CycInt operator*(const CycInt& a, const CycInt& b) {
    a.require_same_r(b);
    CycInt out(a.r_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j] == 0) continue;
        std::size_t k = i + j;
        if (k >= static_cast<std::size_t>(a.r_)) k -= static_cast<std::size_t>(a.r_);
        out.c_[k] += a.c_[i] * b.c_[j];
      }
    }
    return out;
  }

  // Multiplication by a single root is an index rotation.
  CycInt& operator*=(const RootExponent& z) {
    if (z.r != r_)
      throw std::invalid_argument("CycInt: incompatible scalar domains (r mismatch)");
    if (z.e == 0) return *this;
    std::vector<BigInt> out(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) {
      std::size_t j = k + static_cast<std::size_t>(z.e);
      if (j >= c_.size()) j -= c_.size();
      out[j] = std::move(c_[k]);
    }
    c_ = std::move(out);
    return *this;
  }

  // True iff the value is 0, i.e. the coefficient polynomial is divisible by
  // Phi_r after reduction mod x^r - 1 (the vector is already reduced).
  bool is_zero() const {
    bool all_zero = true;
    for (const auto& v : c_)
      if (v != 0) { all_zero = false; break; }
    if (all_zero) return true;
    detail::Poly rem = c_;
    detail::poly_mod(rem, cyclotomic_poly(r_));
    return rem.empty();
  }

  friend bool operator==(const CycInt& a, const CycInt& b) { return (a - b).is_zero(); }

  // Floating-point evaluation at zeta_r = exp(2*pi*i/r); sanity oracle only,
  // never used for equality decisions.
  std::complex<double> eval() const {
    const double two_pi = 6.283185307179586476925286766559;
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      double a = two_pi * static_cast<double>(k) / static_cast<double>(r_);
      acc += c_[k].convert_to<double>() * std::complex<double>(std::cos(a), std::sin(a));
    }
    return acc;
  }

 private:
  static int check_r(int r) {
    if (r < 1) throw std::invalid_argument("CycInt: r must be positive");
    return r;
  }
  void require_same_r(const CycInt& o) const {
    if (r_ != o.r_)
      throw std::invalid_argument("CycInt: incompatible scalar domains (r mismatch)");
  }

  int r_;
  std::vector<BigInt> c_;
};

}  // namespace tqd
