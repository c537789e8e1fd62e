#include <catch2/catch_amalgamated.hpp>
#include <complex>

#include "tqd/cyclotomic.hpp"

using namespace tqd;

TEST_CASE("root exponents normalize and compose") {
  RootExponent z(4, 1);
  REQUIRE(z.r == 4);
  REQUIRE(z.e == 1);
  REQUIRE(RootExponent(4, 5).e == 1);
  REQUIRE(RootExponent(4, -1).e == 3);
  REQUIRE((z * z).e == 2);
  REQUIRE((z * z.inverse()).e == 0);
  REQUIRE_THROWS_AS(RootExponent(0, 0), std::invalid_argument);
  RootExponent a(6, 4), b(6, 5);
  REQUIRE((a * b) == RootExponent(6, 3));
  CHECK_THROWS_AS(a * RootExponent(4, 1), std::invalid_argument);
}

TEST_CASE("fourth root of unity squares to minus one") {
  CycInt i = CycInt::from_root(RootExponent(4, 1));
  CycInt minus_one = CycInt(4) - CycInt::one(4);
  REQUIRE(i * i == minus_one);
  // the reduced coefficient vector (1,0,1,0) represents 1 + i^2 = 0
  REQUIRE(CycInt(4, {BigInt(1), BigInt(0), BigInt(1), BigInt(0)}).is_zero());
}

TEST_CASE("difference of squares over the gaussian integers") {
  CycInt i = CycInt::from_root(RootExponent(4, 1));
  CycInt one = CycInt::one(4);
  CycInt two = one + one;
  REQUIRE((one + i) * (one - i) == two);
}

TEST_CASE("all r-th roots of unity sum to zero") {
  for (int r = 2; r <= 9; ++r) {
    CycInt sum(r);
    for (int e = 0; e < r; ++e) sum += CycInt::from_root(RootExponent(r, e));
    INFO("r = " << r);
    REQUIRE(sum.is_zero());
  }
}

TEST_CASE("rotation by a root exponent matches multiplication") {
  CycInt v = CycInt::one(6) + CycInt::from_root(RootExponent(6, 2));
  CycInt w = v;
  w *= RootExponent(6, 5);
  REQUIRE(w == v * CycInt::from_root(RootExponent(6, 5)));
}

TEST_CASE("numeric evaluation tracks the exact value") {
  // (1 + z_8)(1 - z_8) evaluated numerically equals 1 - i/sqrt(2) stuff; just
  // compare exact product against the numeric product of the factors.
  CycInt a = CycInt::one(8) + CycInt::from_root(RootExponent(8, 1));
  CycInt b = CycInt::one(8) - CycInt::from_root(RootExponent(8, 3));
  std::complex<double> lhs = (a * b).eval();
  std::complex<double> rhs = a.eval() * b.eval();
  REQUIRE(std::abs(lhs - rhs) < 1e-9);
}

TEST_CASE("zero detection respects the minimal polynomial") {
  // 1 + z_3 + z_3^2 = 0 although no coefficient is zero
  CycInt s(3);
  for (int e = 0; e < 3; ++e) s += CycInt::from_root(RootExponent(3, e));
  REQUIRE(s.is_zero());
  // but 1 + z_3 alone is not zero
  REQUIRE_FALSE((CycInt::one(3) + CycInt::from_root(RootExponent(3, 1))).is_zero());
}

TEST_CASE("mixed root orders refuse to combine") {
  CycInt a = CycInt::one(3);
  CycInt b = CycInt::one(4);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}
