#include "mn/constructions.hpp"
#include "mn/mn_analysis.hpp"
#include "mn/series.hpp"
#include "mn/tree_groups.hpp"

#include "oracles.hpp"

#include <doctest.h>

using mn::PermGroup;
using mn::Permutation;
using mn::TreeAutomaton;

TEST_CASE("automaton shapes") {
  TreeAutomaton basilica = TreeAutomaton::basilica();
  CHECK(basilica.alphabet_size() == 2);
  CHECK(basilica.generator_states().size() == 2);
  CHECK(basilica.states().size() == 3); // identity + a + b

  TreeAutomaton grig = TreeAutomaton::grigorchuk("012012");
  CHECK(grig.alphabet_size() == 2);
  CHECK(grig.generator_states().size() == 4); // a, b, c, d
  CHECK(grig.max_level() == 6);

  TreeAutomaton gs3 = TreeAutomaton::gupta_sidki(3);
  CHECK(gs3.alphabet_size() == 3);
  CHECK(gs3.generator_states().size() == 2); // a, t

  CHECK_THROWS_AS(TreeAutomaton::gupta_sidki(4), std::invalid_argument);
  CHECK_THROWS_AS(TreeAutomaton::grigorchuk("0x2"), std::invalid_argument);
  CHECK_THROWS_AS(TreeAutomaton::grigorchuk(""), std::invalid_argument);
}

TEST_CASE("identity state acts trivially at every level") {
  TreeAutomaton basilica = TreeAutomaton::basilica();
  for (unsigned n : {1u, 2u, 3u, 4u})
    CHECK(basilica.level_permutation(std::uint32_t(0), n).is_identity());
}

TEST_CASE("basilica level-1 actions") {
  TreeAutomaton basilica = TreeAutomaton::basilica();
  CHECK(basilica.level_permutation("a", 1).is_identity());
  CHECK(basilica.level_permutation("b", 1) ==
        Permutation::from_cycles(2, {{0, 1}}));
}

TEST_CASE("basilica level-2 quotient has order 8") {
  TreeAutomaton basilica = TreeAutomaton::basilica();
  Permutation a = basilica.level_permutation("a", 2);
  Permutation b = basilica.level_permutation("b", 2);
  CHECK(oracle::closure(4, {a, b}).size() == 8);
  CHECK(basilica.level_quotient(2).order() == 8);
}

TEST_CASE("level permutations project onto the previous level") {
  for (const TreeAutomaton &automaton :
       {TreeAutomaton::basilica(), TreeAutomaton::grigorchuk("0120"),
        TreeAutomaton::gupta_sidki(3)}) {
    CAPTURE(automaton.label());
    unsigned d = automaton.alphabet_size();
    for (std::uint32_t s : automaton.generator_states()) {
      for (unsigned n = 2; n <= std::min(4u, automaton.max_level()); ++n) {
        Permutation coarse = automaton.level_permutation(s, n - 1);
        Permutation fine = automaton.level_permutation(s, n);
        for (std::uint32_t v = 0; v < fine.degree(); ++v)
          CHECK(fine[v] / d == coarse[v / d]);
      }
    }
  }
}

TEST_CASE("grigorchuk level quotients are 2-groups, cross-checked by closure") {
  TreeAutomaton grig = TreeAutomaton::grigorchuk(
      TreeAutomaton::first_grigorchuk_omega(3));
  PermGroup level3 = grig.level_quotient(3);
  CHECK(level3.order() ==
        mn::BigInt(oracle::closure(8, level3.generators()).size()));
  CHECK(mn::is_power_of(level3.order(), 2));
  CHECK(level3.order() == 128);
}

TEST_CASE("grigorchuk level orders for the periodic omega") {
  TreeAutomaton grig = TreeAutomaton::grigorchuk(
      TreeAutomaton::first_grigorchuk_omega(4));
  CHECK(grig.level_quotient(1).order() == 2);
  CHECK(grig.level_quotient(2).order() == 8);
  CHECK(grig.level_quotient(3).order() == 128);
  CHECK(grig.level_quotient(4).order() == 4096);
}

TEST_CASE("insufficient omega prefix is reported") {
  TreeAutomaton grig = TreeAutomaton::grigorchuk("01");
  CHECK_THROWS_AS(grig.level_quotient(3), std::invalid_argument);
  CHECK_NOTHROW(grig.level_quotient(2));
}

TEST_CASE("gupta-sidki level quotients are 3-groups") {
  TreeAutomaton gs3 = TreeAutomaton::gupta_sidki(3);
  PermGroup level1 = gs3.level_quotient(1);
  CHECK(level1.order() == 3);
  PermGroup level2 = gs3.level_quotient(2);
  CHECK(level2.order() ==
        mn::BigInt(oracle::closure(9, level2.generators()).size()));
  CHECK(mn::is_power_of(level2.order(), 3));
  CHECK(level2.order() == 27);
}

TEST_CASE("level-1 quotients embed in the symmetric group on d points") {
  for (const TreeAutomaton &automaton :
       {TreeAutomaton::basilica(), TreeAutomaton::grigorchuk("0"),
        TreeAutomaton::gupta_sidki(5)}) {
    PermGroup level1 = automaton.level_quotient(1);
    mn::BigInt factorial = 1;
    for (unsigned k = 2; k <= automaton.alphabet_size(); ++k)
      factorial *= k;
    CHECK(level1.order() <= factorial);
  }
}

TEST_CASE("p_group_check") {
  CHECK(mn::p_group_check(mn::groups::cyclic(1), 5));
  CHECK_FALSE(mn::p_group_check(mn::groups::symmetric(3), 2));
  TreeAutomaton grig = TreeAutomaton::grigorchuk(
      TreeAutomaton::first_grigorchuk_omega(4));
  CHECK(mn::p_group_check(grig.level_quotient(4), 2));
  CHECK_FALSE(mn::p_group_check(grig.level_quotient(3), 3));
}

TEST_CASE("dihedral detection") {
  SUBCASE("Klein group is degenerately dihedral") {
    auto check = mn::is_dihedral(mn::groups::klein());
    CHECK(check.dihedral);
    CHECK(check.degenerate);
    REQUIRE(check.cyclic_index2.has_value());
    CHECK(check.cyclic_index2->order() == 2);
  }
  SUBCASE("C2 and the trivial group") {
    CHECK(mn::is_dihedral(mn::groups::cyclic(2)).dihedral);
    CHECK(mn::is_dihedral(mn::groups::cyclic(1)).dihedral);
    CHECK(mn::is_dihedral(mn::groups::cyclic(1)).degenerate);
  }
  SUBCASE("D18 with rotation subgroup of order 9") {
    auto check = mn::is_dihedral(mn::groups::dihedral(9));
    CHECK(check.dihedral);
    CHECK_FALSE(check.degenerate);
    REQUIRE(check.cyclic_index2.has_value());
    CHECK(check.cyclic_index2->order() == 9);
  }
  SUBCASE("non-dihedral groups") {
    CHECK_FALSE(mn::is_dihedral(mn::groups::quaternion()).dihedral);
    CHECK_FALSE(mn::is_dihedral(mn::groups::cyclic(4)).dihedral);
    CHECK_FALSE(mn::is_dihedral(mn::groups::cyclic(6)).dihedral);
    CHECK_FALSE(mn::is_dihedral(mn::groups::symmetric(4)).dihedral);
  }
  SUBCASE("every dihedral construction is recognized") {
    for (unsigned m : {3u, 4u, 5u, 6u, 9u, 12u}) {
      CAPTURE(m);
      auto check = mn::is_dihedral(mn::groups::dihedral(m));
      CHECK(check.dihedral);
      REQUIRE(check.cyclic_index2.has_value());
      CHECK(check.cyclic_index2->order() == m);
    }
  }
}

TEST_CASE("basilica probe tower") {
  auto r1 = mn::basilica_dinfty_probe(1);
  CHECK(r1.quotient_order <= 2);
  CHECK(r1.is_dihedral);

  auto r3 = mn::basilica_dinfty_probe(3);
  CHECK(r3.is_dihedral);
  CHECK(mn::is_power_of(r3.quotient_order, 2));
  CHECK(r3.quotient_order >= 4);

  auto r4 = mn::basilica_dinfty_probe(4);
  CHECK(r4.quotient_order >= r3.quotient_order);
  CHECK(r4.is_dihedral);
  CHECK(r4.quotient_order == 2 * r4.cyclic_index2_order);
}

TEST_CASE("basilica probe quotient carries the expected generator structure") {
  // Rebuild the probe pieces at level 4 and verify the dihedral structure
  // forced by the killed relators b^2 and (ab)^2: the image of a generates
  // the index-2 rotation subgroup, and the images of b and ab are
  // involutions inverting it.
  unsigned level = 4;
  TreeAutomaton automaton = TreeAutomaton::basilica();
  PermGroup B = automaton.level_quotient(level);
  Permutation a = automaton.level_permutation("a", level);
  Permutation b = automaton.level_permutation("b", level);
  mn::Subgroup N = mn::normal_closure(B, {b * b, a * b * a * b});
  auto [Q, pi] = mn::quotient(B, N);

  Permutation a_bar = pi.apply(a);
  Permutation b_bar = pi.apply(b);
  mn::Subgroup C = mn::subgroup_generated(Q, {a_bar});
  CHECK(Q.order() == 2 * C.order());
  CHECK_FALSE(C.contains(b_bar));
  CHECK((b_bar * b_bar).is_identity());
  CHECK((pi.apply(a * b) * pi.apply(a * b)).is_identity());
  CHECK(b_bar.inverse() * a_bar * b_bar == a_bar.inverse());
}

TEST_CASE("grigorchuk level quotients are nilpotent and have the MN property") {
  TreeAutomaton grig = TreeAutomaton::grigorchuk(
      TreeAutomaton::first_grigorchuk_omega(3));
  for (unsigned n : {1u, 2u, 3u}) {
    PermGroup G = grig.level_quotient(n);
    CAPTURE(n);
    CHECK(mn::is_nilpotent(G).nilpotent);
    CHECK(mn::is_in_mn_direct(G));
  }
}

TEST_CASE("non-periodic omega still yields 2-groups") {
  TreeAutomaton grig = TreeAutomaton::grigorchuk("0011");
  for (unsigned n : {1u, 2u, 3u, 4u}) {
    CAPTURE(n);
    CHECK(mn::is_power_of(grig.level_quotient(n).order(), 2));
  }
}
