#include <boost/multiprecision/cpp_int.hpp>
#include <catch2/catch_amalgamated.hpp>

#include "tqd/analysis.hpp"

using namespace tqd;

TEST_CASE("finiteness criterion against exact rational arithmetic") {
  using boost::multiprecision::cpp_rational;
  for (long long n = 2; n <= 10; ++n)
    for (long long k = 1; k <= 10; ++k) {
      bool expected = cpp_rational(1, n) + cpp_rational(1, k) > cpp_rational(1, 2);
      INFO("n=" << n << " k=" << k);
      REQUIRE(coxeter_finite(n, k) == expected);
    }
  // boundary cases sit exactly at 1/2 and are infinite
  REQUIRE_FALSE(coxeter_finite(3, 6));
  REQUIRE_FALSE(coxeter_finite(4, 4));
  REQUIRE_FALSE(coxeter_finite(6, 3));
  REQUIRE(coxeter_finite(2, 1000));
  REQUIRE(coxeter_finite(1000, 2));
  REQUIRE(coxeter_finite(3, 5));
  REQUIRE_FALSE(coxeter_finite(5, 5));
}

TEST_CASE("finiteness criterion validates its arguments") {
  REQUIRE_THROWS_AS(coxeter_finite(1, 3), std::invalid_argument);
  REQUIRE_THROWS_AS(coxeter_finite(2, 0), std::invalid_argument);
}

TEST_CASE("two-strand analysis over the group of order two") {
  ImageReport rep = analyze(trivial_cocycle(make_cyclic(2)), 2);
  REQUIRE(rep.group_name == "cyclic:2");
  REQUIRE(rep.cocycle_name == "trivial");
  REQUIRE(rep.n == 2);
  REQUIRE(rep.dim == 16);
  REQUIRE(rep.r == 1);
  REQUIRE(rep.braid_complete);
  REQUIRE(rep.braid_order == 4);
  REQUIRE(rep.pure_complete);
  REQUIRE(rep.pure_order == 2);
  REQUIRE(rep.diagonal_order == 1);
  REQUIRE(rep.permutation_order == 4);
  REQUIRE(rep.generator_order == 4);
  REQUIRE(rep.generator_sq_order == 2);
  REQUIRE(rep.group_prime == 2);
  REQUIRE(rep.pure_order_p_power == true);
  REQUIRE(rep.generator_sq_order_p_power == true);
  REQUIRE(rep.pure_class == 1);
  REQUIRE(rep.group_class == 1);
  REQUIRE(rep.coxeter_verdict == coxeter_finite(2, 4));
}

TEST_CASE("analysis of the trivial group is degenerate but defined") {
  ImageReport rep = analyze(trivial_cocycle(make_trivial()), 2);
  REQUIRE(rep.dim == 1);
  REQUIRE(rep.braid_order == 1);
  REQUIRE(rep.pure_order == 1);
  REQUIRE(rep.generator_order == 1);
  REQUIRE_FALSE(rep.group_prime.has_value());
  REQUIRE_FALSE(rep.pure_order_p_power.has_value());
  REQUIRE(rep.group_class == 0);
  REQUIRE(rep.pure_class == 0);
  REQUIRE(rep.coxeter_verdict == true);
}

TEST_CASE("pure image over an odd prime is a p-group") {
  ImageReport rep = analyze(trivial_cocycle(make_cyclic(3)), 2);
  REQUIRE(rep.braid_order == 6);
  REQUIRE(rep.pure_order == 3);
  REQUIRE(rep.group_prime == 3);
  REQUIRE(rep.pure_order_p_power == true);
  REQUIRE(rep.generator_sq_order == 3);
  REQUIRE(rep.generator_sq_order_p_power == true);
  REQUIRE(rep.pure_class == 1);
}

TEST_CASE("twisted two-strand analysis doubles the scalar orders") {
  ImageReport rep = analyze(cyclic_cocycle(4, 1), 2);
  REQUIRE(rep.dim == 256);
  REQUIRE(rep.r == 4);
  REQUIRE(rep.generator_order == 16);
  REQUIRE(rep.generator_sq_order == 8);
  REQUIRE(rep.braid_order == 16);
  REQUIRE(rep.pure_order_p_power == true);
  REQUIRE(rep.generator_sq_order_p_power == true);
}

TEST_CASE("analysis stages can be switched off") {
  AnalysisOptions opts;
  opts.want_braid = false;
  ImageReport rep = analyze(trivial_cocycle(make_cyclic(2)), 2, opts);
  REQUIRE_FALSE(rep.braid_order.has_value());
  REQUIRE_FALSE(rep.braid_complete);
  REQUIRE_FALSE(rep.diagonal_order.has_value());
  REQUIRE(rep.pure_order == 2);
  REQUIRE(rep.generator_order == 4);

  opts = AnalysisOptions{};
  opts.want_pure = false;
  rep = analyze(trivial_cocycle(make_cyclic(2)), 2, opts);
  REQUIRE_FALSE(rep.pure_order.has_value());
  REQUIRE_FALSE(rep.pure_class.has_value());
  REQUIRE_FALSE(rep.pure_order_p_power.has_value());
  REQUIRE(rep.braid_order == 4);
}

TEST_CASE("analysis reports exhausted budgets instead of crashing") {
  AnalysisOptions opts;
  opts.max_elements = 3;
  ImageReport rep = analyze(trivial_cocycle(make_cyclic(2)), 2, opts);
  REQUIRE_FALSE(rep.braid_complete);  // the braid image has 4 elements, over budget
  REQUIRE_FALSE(rep.braid_order.has_value());
  REQUIRE(rep.pure_complete);  // the pure image has only 2, still within it
  REQUIRE(rep.pure_order == 2);
  REQUIRE(rep.generator_order == 4);  // element orders do not use the closure budget
}

TEST_CASE("order cap limits the element-order search") {
  AnalysisOptions opts;
  opts.order_cap = 2;
  ImageReport rep = analyze(trivial_cocycle(make_cyclic(2)), 2, opts);
  REQUIRE_FALSE(rep.generator_order.has_value());  // true order 4 exceeds the cap
  REQUIRE(rep.generator_sq_order == 2);
  REQUIRE_FALSE(rep.coxeter_verdict.has_value());
}
