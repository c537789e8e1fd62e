#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "tqd/filtration.hpp"
#include "tqd/spec_parse.hpp"

using namespace tqd;

namespace {

bool mentions(const FiltrationReport& rep, const std::string& needle) {
  for (const std::string& v : rep.violations)
    if (v.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("descending chain in a cyclic group verifies") {
  FiltrationSpec f{make_cyclic(4), {{0, 1, 2, 3}, {0, 2}, {0}}};
  // x -> 3x is the inversion automorphism
  FiltrationReport rep = check_filtration_lemma(f, {{0, 3, 2, 1}});
  CAPTURE(rep.violations);
  REQUIRE(rep.hypotheses_ok);
  REQUIRE(rep.violations.empty());
  REQUIRE(rep.aut_closure_complete);
  REQUIRE(rep.aut_group_order == 2);
  REQUIRE(rep.bound == 1);
  REQUIRE(rep.aut_class == 1);
  REQUIRE(rep.class_within_bound);
}

TEST_CASE("empty automorphism list closes to the trivial group") {
  FiltrationSpec f{make_cyclic(4), {{0, 1, 2, 3}, {0, 2}, {0}}};
  FiltrationReport rep = check_filtration_lemma(f, {});
  REQUIRE(rep.hypotheses_ok);
  REQUIRE(rep.aut_group_order == 1);
  REQUIRE(rep.aut_class == 0);
  REQUIRE(rep.class_within_bound);
}

TEST_CASE("quotient-faithful automorphism is reported") {
  // with the one-step chain, x -> 3x moves 1 by 2, which is not the identity
  FiltrationSpec f{make_cyclic(4), {{0, 1, 2, 3}, {0}}};
  FiltrationReport rep = check_filtration_lemma(f, {{0, 3, 2, 1}});
  REQUIRE_FALSE(rep.hypotheses_ok);
  REQUIRE(mentions(rep, "acts nontrivially on the quotient"));
  // the closure still gets analyzed: class 1 exceeds the bound N-1 = 0
  REQUIRE(rep.bound == 0);
  REQUIRE(rep.aut_class == 1);
  REQUIRE_FALSE(rep.class_within_bound);
}

TEST_CASE("malformed automorphisms are reported") {
  FiltrationSpec f{make_cyclic(4), {{0, 1, 2, 3}, {0, 2}, {0}}};
  FiltrationReport rep = check_filtration_lemma(f, {{0, 1, 2}, {0, 1, 1, 3}, {0, 2, 1, 3}});
  REQUIRE_FALSE(rep.hypotheses_ok);
  REQUIRE(mentions(rep, "wrong length"));
  REQUIRE(mentions(rep, "not a permutation"));
  REQUIRE(mentions(rep, "not a homomorphism"));
}

TEST_CASE("non-subgroup level is reported with a witness") {
  FiltrationSpec f{make_cyclic(4), {{0, 1, 2, 3}, {0, 1}, {0}}};
  FiltrationReport rep = check_filtration_lemma(f, {});
  REQUIRE_FALSE(rep.hypotheses_ok);
  REQUIRE(mentions(rep, "is not a subgroup"));
}

TEST_CASE("non-normal level is reported") {
  FiniteGroup G = make_dihedral(3);
  // a reflection generates a two-element subgroup, never normal here
  int refl = -1;
  for (int g = 0; g < G.order() && refl < 0; ++g)
    if (g != G.identity() && G.mul(g, g) == G.identity() &&
        element_order(G, g) == 2)
      refl = g;
  REQUIRE(refl >= 0);
  std::vector<int> all(static_cast<std::size_t>(G.order()));
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> level1 = {G.identity(), refl};
  std::sort(level1.begin(), level1.end());
  FiltrationSpec f{G, {all, level1, {G.identity()}}};
  FiltrationReport rep = check_filtration_lemma(f, {});
  REQUIRE_FALSE(rep.hypotheses_ok);
  REQUIRE(mentions(rep, "is not normal"));
}

TEST_CASE("non-abelian quotient is reported") {
  FiniteGroup G = make_dihedral(3);
  std::vector<int> all(static_cast<std::size_t>(G.order()));
  std::iota(all.begin(), all.end(), 0);
  FiltrationSpec f{G, {all, {G.identity()}}};
  FiltrationReport rep = check_filtration_lemma(f, {});
  REQUIRE_FALSE(rep.hypotheses_ok);
  REQUIRE(mentions(rep, "is not abelian"));
}

TEST_CASE("degenerate chains are rejected") {
  FiltrationReport rep = check_filtration_lemma(FiltrationSpec{make_cyclic(4), {{0, 1, 2, 3}}}, {});
  REQUIRE_FALSE(rep.hypotheses_ok);
  REQUIRE(mentions(rep, "at least two levels"));

  rep = check_filtration_lemma(FiltrationSpec{make_cyclic(4), {{0, 1, 2, 3}, {0, 7}}}, {});
  REQUIRE_FALSE(rep.hypotheses_ok);
  REQUIRE(mentions(rep, "outside the group"));

  rep = check_filtration_lemma(FiltrationSpec{make_cyclic(4), {{0, 1, 2, 3}, {0, 2}, {0, 2}}}, {});
  REQUIRE_FALSE(rep.hypotheses_ok);
  REQUIRE(mentions(rep, "last level must be exactly the identity"));
}

TEST_CASE("filtration text format round trips") {
  std::istringstream in(
      "# comment line\n"
      "group cyclic:4\n"
      "\n"
      "level 0: 0 1 2 3\n"
      "level 1: 0 2\n"
      "level 2: 0\n"
      "aut: 0 3 2 1\n");
  FiltrationFile ff = parse_filtration_stream(in, "input");
  REQUIRE(ff.spec.H.order() == 4);
  REQUIRE(ff.spec.chain.size() == 3);
  REQUIRE(ff.spec.chain[1] == std::vector<int>{0, 2});
  REQUIRE(ff.auts.size() == 1);
  FiltrationReport rep = check_filtration_lemma(ff.spec, ff.auts);
  REQUIRE(rep.hypotheses_ok);
  REQUIRE(rep.class_within_bound);
}

TEST_CASE("filtration text format diagnostics") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_filtration_stream(in, "input");
  };
  REQUIRE_THROWS_WITH(parse("level 0: 0\nlevel 1: 0\n"),
                      Catch::Matchers::ContainsSubstring("missing 'group <spec>'"));
  REQUIRE_THROWS_WITH(parse("group cyclic:2\n"),
                      Catch::Matchers::ContainsSubstring("at least levels 0 and 1"));
  REQUIRE_THROWS_WITH(parse("group cyclic:2\nlevel 1: 0\n"),
                      Catch::Matchers::ContainsSubstring("levels must appear in order"));
  REQUIRE_THROWS_WITH(parse("group cyclic:2\nlevel 0: 0 x\n"),
                      Catch::Matchers::ContainsSubstring("input:2"));
  REQUIRE_THROWS_WITH(parse("group cyclic:2\ngroup cyclic:2\n"),
                      Catch::Matchers::ContainsSubstring("duplicate group"));
  REQUIRE_THROWS_WITH(parse("group cyclic:2\nwhat 1 2\n"),
                      Catch::Matchers::ContainsSubstring("unrecognized line"));
  REQUIRE_THROWS_WITH(parse("group cyclic:2\naut: 0 z\n"),
                      Catch::Matchers::ContainsSubstring("non-numeric entry in aut line"));
}

TEST_CASE("filtration files load from disk") {
  std::string path = "tqd_test_filtration.txt";
  {
    std::ofstream out(path);
    out << "group cyclic:4\nlevel 0: 0 1 2 3\nlevel 1: 0 2\nlevel 2: 0\naut: 0 3 2 1\n";
  }
  FiltrationFile ff = parse_filtration_file(path);
  REQUIRE(ff.spec.chain.size() == 3);
  REQUIRE(ff.auts.size() == 1);
  std::remove(path.c_str());
  REQUIRE_THROWS_WITH(parse_filtration_file("no_such_filtration_file.txt"),
                      Catch::Matchers::ContainsSubstring("cannot open"));
}
