#include <catch2/catch_amalgamated.hpp>

#include "tqd/paren_tree.hpp"

using namespace tqd;

TEST_CASE("comb shapes") {
  REQUIRE(ParenTree::left_comb(3).to_string() == "((1 2) 3)");
  REQUIRE(ParenTree::right_comb(3).to_string() == "(1 (2 3))");
  REQUIRE(ParenTree::left_comb(4).to_string() == "(((1 2) 3) 4)");
  REQUIRE(ParenTree::right_comb(4).to_string() == "(1 (2 (3 4)))");
  REQUIRE(ParenTree::left_comb(1).to_string() == "1");
  for (int n = 1; n <= 6; ++n) {
    REQUIRE(ParenTree::left_comb(n).leaves() == n);
    REQUIRE(ParenTree::right_comb(n).leaves() == n);
  }
}

TEST_CASE("sibling tree glues one adjacent pair onto a left comb") {
  REQUIRE(ParenTree::sibling_pair(3, 1).to_string() == "((1 2) 3)");
  REQUIRE(ParenTree::sibling_pair(3, 2).to_string() == "(1 (2 3))");
  REQUIRE(ParenTree::sibling_pair(4, 2).to_string() == "((1 (2 3)) 4)");
  REQUIRE(ParenTree::sibling_pair(4, 1).to_string() == "(((1 2) 3) 4)");
  REQUIRE(ParenTree::sibling_pair(4, 3).to_string() == "((1 2) (3 4))");
  REQUIRE(ParenTree::sibling_pair(2, 1).to_string() == "(1 2)");
}

TEST_CASE("tree enumeration counts are Catalan numbers") {
  REQUIRE(all_trees(1).size() == 1);
  REQUIRE(all_trees(2).size() == 1);
  REQUIRE(all_trees(3).size() == 2);
  REQUIRE(all_trees(4).size() == 5);
  REQUIRE(all_trees(5).size() == 14);
  REQUIRE(all_trees(6).size() == 42);
}

TEST_CASE("equality is structural") {
  REQUIRE(ParenTree::left_comb(3) == ParenTree::left_comb(3));
  REQUIRE_FALSE(ParenTree::left_comb(3) == ParenTree::right_comb(3));
}

TEST_CASE("paths between trees") {
  // the normal form reaches itself with no moves
  REQUIRE(moves_between(ParenTree::right_comb(4), ParenTree::right_comb(4)).empty());
  // other trees route through the normal form and back; the operator-level
  // cancellation of such round trips is covered by the rebracket tests
  REQUIRE(moves_between(ParenTree::left_comb(4), ParenTree::left_comb(4)).size() == 4);
  // one elementary move from ((1 2) 3) to (1 (2 3)); blocks are the leaf
  // ranges [1,2), [2,3), [3,4)
  std::vector<AssocMove> m = moves_between(ParenTree::left_comb(3), ParenTree::right_comb(3));
  REQUIRE(m.size() == 1);
  REQUIRE(m[0].a == 1);
  REQUIRE(m[0].b == 2);
  REQUIRE(m[0].c == 3);
  REQUIRE(m[0].d == 4);
  REQUIRE(m[0].dir == 1);
  // reverse path is the reversed, sign-flipped sequence
  std::vector<AssocMove> back = moves_between(ParenTree::right_comb(3), ParenTree::left_comb(3));
  REQUIRE(back.size() == 1);
  REQUIRE(back[0].dir == -1);
}

TEST_CASE("paths reach every tree shape with well-formed moves") {
  std::vector<ParenTree> trees = all_trees(5);
  for (const ParenTree& a : trees)
    for (const ParenTree& b : trees) {
      std::vector<AssocMove> path = moves_between(a, b);
      for (const AssocMove& mv : path) {
        REQUIRE(mv.a < mv.b);
        REQUIRE(mv.b < mv.c);
        REQUIRE(mv.c < mv.d);
        REQUIRE((mv.dir == 1 || mv.dir == -1));
      }
    }
}

TEST_CASE("alternative route via the left comb stays well-formed") {
  std::vector<AssocMove> path =
      moves_between_via_left_comb(ParenTree::right_comb(5), ParenTree::sibling_pair(5, 3));
  REQUIRE_FALSE(path.empty());
  for (const AssocMove& mv : path) {
    REQUIRE(mv.a < mv.b);
    REQUIRE(mv.b < mv.c);
    REQUIRE(mv.c < mv.d);
  }
}

TEST_CASE("join rejects non-adjacent ranges") {
  CHECK_THROWS(ParenTree::join(ParenTree::leaf(1), ParenTree::leaf(3)));
  CHECK_THROWS_AS(ParenTree::leaf(0), std::invalid_argument);
}
