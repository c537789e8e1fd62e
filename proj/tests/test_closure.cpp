#include <catch2/catch_amalgamated.hpp>

#include "tqd/braidrep.hpp"
#include "tqd/closure.hpp"

using namespace tqd;

TEST_CASE("closure of the identity alone") {
  GroupClosure c = close({monomial_identity(4, 2)});
  REQUIRE(c.complete);
  REQUIRE(c.order() == 1);
  REQUIRE(c.identity_index == 0);
  REQUIRE(c.generator_indices == std::vector<int>{0});
  REQUIRE(verify_closed(c));
  REQUIRE(nilpotency_class_closure(c) == 0);
}

TEST_CASE("closure of the two-strand image over the group of order two") {
  FiniteGroup G = make_cyclic(2);
  Cocycle3 w = trivial_cocycle(G);
  MonomialOp gen = braid_generator(w, 2, 1);
  GroupClosure c = close({gen});

  REQUIRE(c.complete);
  REQUIRE(c.order() == 4);
  REQUIRE(verify_closed(c));
  REQUIRE(c.identity_index >= 0);
  REQUIRE(c.generator_indices.size() == 1);
  for (const MonomialOp& op : c.elements) {
    REQUIRE(op.dim() == 16);
    REQUIRE(op.r == 1);
    for (int s : op.scal) REQUIRE(s == 0);
  }
  // kernel of the scalar-forgetting map times its image carries the full order
  REQUIRE(diagonal_subgroup_order(c) == 1);
  REQUIRE(permutation_quotient_order(c) == 4);
  REQUIRE(diagonal_subgroup_order(c) * permutation_quotient_order(c) == c.order());
  // single generator, so the image is cyclic
  REQUIRE(nilpotency_class_closure(c) == 1);
  REQUIRE(element_order(gen, 100) == 4);
}

TEST_CASE("closure respects the element budget") {
  FiniteGroup G = make_cyclic(2);
  MonomialOp gen = braid_generator(trivial_cocycle(G), 2, 1);
  GroupClosure c = close({gen}, 2);
  REQUIRE_FALSE(c.complete);
  REQUIRE(c.order() <= 2);
  REQUIRE_THROWS_AS(require_complete(c, "test"), BudgetError);
  REQUIRE_THROWS_AS(diagonal_subgroup_order(c), BudgetError);
  REQUIRE_THROWS_AS(verify_closed(c), BudgetError);
  REQUIRE_THROWS_WITH(require_complete(c, "image"),
                      Catch::Matchers::ContainsSubstring("closure incomplete"));
}

TEST_CASE("closure rejects bad generator sets") {
  REQUIRE_THROWS_AS(close(std::vector<MonomialOp>{}), std::invalid_argument);
  REQUIRE_THROWS_AS(close({monomial_identity(2, 1), monomial_identity(3, 1)}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(close({monomial_identity(2, 1), monomial_identity(2, 2)}),
                    std::invalid_argument);
}

TEST_CASE("index-based group view agrees with operator arithmetic") {
  FiniteGroup G = make_cyclic(2);
  GroupClosure c = close({braid_generator(trivial_cocycle(G), 2, 1)});
  ClosureGroup H(c);
  REQUIRE(H.order() == 4);
  REQUIRE(H.identity() == c.identity_index);
  for (int a = 0; a < H.order(); ++a) {
    REQUIRE(H.mul(a, H.inv(a)) == H.identity());
    REQUIRE(H.mul(H.identity(), a) == a);
    for (int b = 0; b < H.order(); ++b) {
      int ab = H.mul(a, b);
      REQUIRE(ab >= 0);
      REQUIRE(ab < H.order());
      // the index product matches the operator product
      REQUIRE(c.elements[static_cast<std::size_t>(ab)] ==
              c.elements[static_cast<std::size_t>(a)] * c.elements[static_cast<std::size_t>(b)]);
    }
  }
}

TEST_CASE("closure invariants hold for a twisted two-strand image") {
  FiniteGroup G = make_cyclic(4);
  Cocycle3 w = cyclic_cocycle(4, 1);
  MonomialOp gen = braid_generator(w, 2, 1);
  GroupClosure c = close({gen});
  REQUIRE(c.complete);
  REQUIRE(verify_closed(c));
  REQUIRE(diagonal_subgroup_order(c) * permutation_quotient_order(c) == c.order());
  for (const MonomialOp& op : c.elements) {
    REQUIRE(op.dim() == 256);
    REQUIRE(op.r == gen.r);
    for (int s : op.scal) {
      REQUIRE(s >= 0);
      REQUIRE(s < op.r);
    }
  }
  // one generator: the image is cyclic of the generator's order
  REQUIRE(element_order(gen, 10000).has_value());
  REQUIRE(c.order() == *element_order(gen, 10000));
  REQUIRE(nilpotency_class_closure(c) == 1);
}

TEST_CASE("nilpotency budget is enforced") {
  FiniteGroup G = make_cyclic(2);
  GroupClosure c = close({braid_generator(trivial_cocycle(G), 2, 1)});
  REQUIRE_THROWS_AS(nilpotency_class_closure(c, 3), BudgetError);
}
