#include "mn/constructions.hpp"
#include "mn/mn_analysis.hpp"
#include "mn/series.hpp"

#include <doctest.h>

using mn::PermGroup;
using mn::Permutation;

TEST_CASE("direct MN membership") {
  CHECK(mn::is_in_mn_direct(mn::groups::cyclic(7)));
  CHECK_FALSE(mn::is_in_mn_direct(mn::groups::symmetric(3)));
  CHECK(mn::is_in_mn_direct(mn::groups::quaternion()));
  CHECK(mn::is_in_mn_direct(mn::groups::cyclic(1)));
  CHECK_FALSE(mn::is_in_mn_direct(mn::groups::symmetric(4)));
  CHECK(mn::is_in_mn_direct(mn::groups::heisenberg(3)));
}

TEST_CASE("characterization report on an abelian group of order 8") {
  auto report = mn::characterization_report(mn::groups::cyclic(8));
  CHECK(report.cond1_all_maximal_normal);
  CHECK(report.cond2_quotients_in_mn);
  CHECK(report.cond3_maximal_finite_index_and_finite_quotients_nilpotent);
  CHECK(report.cond4_commutator_in_frattini);
  CHECK(report.coherent());
  CHECK(report.normal_subgroups_exhaustive);
}

TEST_CASE("characterization report on S3 fails all four conditions") {
  auto report = mn::characterization_report(mn::groups::symmetric(3));
  CHECK_FALSE(report.cond1_all_maximal_normal);
  CHECK_FALSE(report.cond2_quotients_in_mn);
  CHECK_FALSE(report.cond3_maximal_finite_index_and_finite_quotients_nilpotent);
  CHECK_FALSE(report.cond4_commutator_in_frattini);
  CHECK(report.coherent());
  CHECK(report.witnesses.non_normal_maximal.has_value());
  CHECK(report.witnesses.non_nilpotent_quotient_kernel.has_value());
  CHECK(report.witnesses.commutator_outside_frattini.has_value());
}

TEST_CASE("characterization report on D8 passes all four conditions") {
  auto report = mn::characterization_report(mn::groups::dihedral(4));
  CHECK(report.coherent());
  CHECK(report.cond1_all_maximal_normal);
}

TEST_CASE("sampled mode is used above order 64 and stays coherent") {
  auto report = mn::characterization_report(mn::groups::dihedral(48)); // order 96
  CHECK_FALSE(report.normal_subgroups_exhaustive);
  CHECK(report.coherent());
  CHECK_FALSE(report.cond1_all_maximal_normal);

  auto report2 = mn::characterization_report(mn::groups::cyclic(128));
  CHECK_FALSE(report2.normal_subgroups_exhaustive);
  CHECK(report2.coherent());
  CHECK(report2.cond1_all_maximal_normal);
}

TEST_CASE("generates and normally_generates") {
  PermGroup S3 = mn::groups::symmetric(3);
  CHECK(mn::generates(S3, S3.generators()));
  CHECK_FALSE(mn::generates(S3, {}));

  // both free-group witness words map to (1 2) under x -> (0 1), y -> (0 2)
  Permutation w = mn::parse_cycles(3, "(1 2)");
  CHECK_FALSE(mn::generates(S3, {w, w}));
  CHECK(mn::normally_generates(S3, {w}));

  CHECK(mn::normally_generates(S3, S3.generators()));

  PermGroup Q8 = mn::groups::quaternion();
  Permutation minus_one = Q8.generators()[0] * Q8.generators()[0];
  CHECK_FALSE(mn::normally_generates(Q8, {minus_one}));
}

TEST_CASE("obs search finds no witness in groups with the property") {
  auto result = mn::witness_subset_search(mn::groups::quaternion(), 3);
  CHECK(result.max_subset_size == 3);
  CHECK_FALSE(result.witness.has_value());

  auto trivial = mn::witness_subset_search(mn::groups::cyclic(1), 3);
  CHECK_FALSE(trivial.witness.has_value());
}

TEST_CASE("obs search finds a size-1 witness in S3") {
  auto result = mn::witness_subset_search(mn::groups::symmetric(3), 1);
  REQUIRE(result.witness.has_value());
  CHECK(result.witness->witness_set.size() == 1);
  CHECK(result.witness->verdict ==
        mn::WitnessVerdict::NormallyGeneratesButNotGenerates);
  CHECK(result.witness->witness_set[0].order() == 2); // a transposition
}

TEST_CASE("all-sizes obs search agrees with direct MN membership") {
  for (PermGroup G :
       {mn::groups::symmetric(3), mn::groups::symmetric(4),
        mn::groups::quaternion(), mn::groups::dihedral(4),
        mn::groups::dihedral(6), mn::groups::alternating(4),
        mn::groups::cyclic(12), mn::groups::klein()}) {
    CAPTURE(G.name());
    auto result = mn::witness_subset_search(G, 0, true);
    CHECK(result.witness.has_value() == !mn::is_in_mn_direct(G));
    if (result.witness) {
      CHECK(result.witness->normal_closure_order == G.order());
      CHECK(result.witness->generated_order < G.order());
    }
  }
}

TEST_CASE("free-group witness in S3") {
  PermGroup S3 = mn::groups::symmetric(3);
  auto report = mn::free_group_rank2_witness(S3, mn::parse_cycles(3, "(0 1)"),
                                             mn::parse_cycles(3, "(0 2)"));
  CHECK(report.generated_order == 2);
  CHECK(report.normal_closure_order == 6);
  CHECK(report.verdict == mn::WitnessVerdict::NormallyGeneratesButNotGenerates);
  // both words evaluate to the same transposition
  CHECK(report.witness_set[0] == mn::parse_cycles(3, "(1 2)"));
  CHECK(report.witness_set[1] == mn::parse_cycles(3, "(1 2)"));
}

TEST_CASE("dihedral witness orders") {
  auto d18 = mn::free_product_dihedral_witness(9);
  CHECK(d18.group_order == 18);
  CHECK(d18.generated_order == 6);
  CHECK(d18.normal_closure_order == 18);
  CHECK(d18.verdict == mn::WitnessVerdict::NormallyGeneratesButNotGenerates);

  auto d8 = mn::free_product_dihedral_witness(4);
  CHECK(d8.verdict != mn::WitnessVerdict::NormallyGeneratesButNotGenerates);

  CHECK_THROWS_AS(mn::free_product_dihedral_witness(2), std::invalid_argument);
}

TEST_CASE("dihedral witness matches MN status across m") {
  // the witness verdict can only appear when the group is not in MN
  for (unsigned m : {3u, 4u, 5u, 6u, 8u, 9u, 12u}) {
    CAPTURE(m);
    auto report = mn::free_product_dihedral_witness(m);
    bool witness_found =
        report.verdict == mn::WitnessVerdict::NormallyGeneratesButNotGenerates;
    if (witness_found)
      CHECK_FALSE(mn::is_in_mn_direct(mn::groups::dihedral(m)));
  }
}

TEST_CASE("witness report orders divide as required") {
  for (unsigned m : {3u, 4u, 5u, 7u, 9u, 10u, 15u}) {
    CAPTURE(m);
    auto report = mn::free_product_dihedral_witness(m);
    CHECK(report.normal_closure_order % report.generated_order == 0);
    CHECK(report.group_order % report.normal_closure_order == 0);
    CHECK((report.verdict ==
           mn::WitnessVerdict::NormallyGeneratesButNotGenerates) ==
          (report.normal_closure_order == report.group_order &&
           report.generated_order < report.group_order));
  }
}

TEST_CASE("p-subgroup criterion certifies p-groups") {
  CHECK(mn::p_subgroup_criterion_check(mn::groups::quaternion(), 2));
  CHECK(mn::p_subgroup_criterion_check(mn::groups::dihedral(4), 2));
  CHECK(mn::p_subgroup_criterion_check(mn::groups::cyclic(9), 3));
  CHECK(mn::p_subgroup_criterion_check(mn::groups::heisenberg(3), 3));
  CHECK_THROWS_AS(mn::p_subgroup_criterion_check(mn::groups::symmetric(3), 2),
                  std::invalid_argument);
}

TEST_CASE("the class is closed under quotients") {
  for (PermGroup G : {mn::groups::quaternion(), mn::groups::dihedral(4),
                      mn::groups::cyclic(12), mn::groups::heisenberg(3)}) {
    CAPTURE(G.name());
    REQUIRE(mn::is_in_mn_direct(G));
    for (const mn::Subgroup &N : mn::all_subgroups(G)) {
      if (!mn::is_normal(G, N) || N.is_whole_parent())
        continue;
      auto [Q, pi] = mn::quotient(G, N);
      CHECK(mn::is_in_mn_direct(Q));
    }
  }
}

TEST_CASE("finite subgroup closure of the class") {
  for (PermGroup G : {mn::groups::quaternion(), mn::groups::dihedral(8),
                      mn::groups::cyclic(24), mn::groups::heisenberg(3)}) {
    CAPTURE(G.name());
    REQUIRE(mn::is_in_mn_direct(G));
    for (const mn::Subgroup &H : mn::all_subgroups(G))
      CHECK(mn::is_in_mn_direct(H.group()));
  }
}

TEST_CASE("MN equals nilpotency on a small sample") {
  for (PermGroup G : {mn::groups::symmetric(4), mn::groups::dihedral(8),
                      mn::groups::heisenberg(2), mn::groups::alternating(5),
                      mn::groups::cyclic(24)}) {
    CAPTURE(G.name());
    CHECK(mn::is_in_mn_direct(G) == mn::is_nilpotent(G).nilpotent);
  }
}
