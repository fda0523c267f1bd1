#include "mn/ac_engine.hpp"
#include "mn/constructions.hpp"

#include <doctest.h>

#include <set>

using mn::ACMove;
using mn::GroupTuple;
using mn::MoveKind;
using mn::PermGroup;
using mn::Permutation;
using mn::TupleFilter;

namespace {

GroupTuple tuple_of(std::initializer_list<Permutation> entries) {
  return GroupTuple{std::vector<Permutation>(entries)};
}

// Partition as a comparable set of sets, independent of class order.
std::set<std::set<GroupTuple>> partition_key(
    const std::vector<std::vector<GroupTuple>> &classes) {
  std::set<std::set<GroupTuple>> key;
  for (const auto &cls : classes)
    key.insert(std::set<GroupTuple>(cls.begin(), cls.end()));
  return key;
}

} // namespace

TEST_CASE("move application") {
  PermGroup S3 = mn::groups::symmetric(3);
  Permutation g = mn::parse_cycles(3, "(0 1 2)");
  Permutation h = mn::parse_cycles(3, "(0 1)");

  SUBCASE("inverting the identity does nothing") {
    GroupTuple t = tuple_of({Permutation(3), g});
    GroupTuple u = mn::apply_move(S3, t, {MoveKind::Invert, 0, 0, 1, 0});
    CHECK(u == t);
  }
  SUBCASE("right multiply replaces entry i by g_i g_j") {
    GroupTuple t = tuple_of({g, h});
    GroupTuple u = mn::apply_move(S3, t, {MoveKind::RightMultiply, 0, 1, 1, 0});
    CHECK(u.entries[0] == g * h);
    CHECK(u.entries[1] == h);
  }
  SUBCASE("left multiply uses the other side") {
    GroupTuple t = tuple_of({g, h});
    GroupTuple u = mn::apply_move(S3, t, {MoveKind::LeftMultiply, 0, 1, -1, 0});
    CHECK(u.entries[0] == h.inverse() * g);
  }
  SUBCASE("conjugation by the first designated generator") {
    // s = (0 1): s^-1 (0 1 2) s = (0 2 1)
    PermGroup G(3, {mn::parse_cycles(3, "(0 1)")});
    GroupTuple t = tuple_of({g});
    GroupTuple u = mn::apply_move(G, t, {MoveKind::Conjugate, 0, 0, 1, 0});
    CHECK(u.entries[0] == mn::parse_cycles(3, "(0 2 1)"));
  }
  SUBCASE("bad indices are rejected") {
    GroupTuple t = tuple_of({g, h});
    CHECK_THROWS_AS(mn::apply_move(S3, t, {MoveKind::RightMultiply, 0, 0, 1, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(mn::apply_move(S3, t, {MoveKind::Invert, 0, 5, 1, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(mn::apply_move(S3, t, {MoveKind::Conjugate, 0, 0, 1, 9}),
                    std::invalid_argument);
  }
}

TEST_CASE("neighbor counts") {
  PermGroup Q8 = mn::groups::quaternion();
  Permutation i = Q8.generators()[0];
  Permutation j = Q8.generators()[1];

  // n = 1: one inversion plus one conjugation per designated generator
  CHECK(mn::neighbors(Q8, tuple_of({i})).size() == 1 + 2);

  // n = 2 over two designated generators: 4 + 4 + 2 + 4 = 14
  CHECK(mn::neighbors(Q8, tuple_of({i, j})).size() == 14);

  // the all-identity tuple is fixed by every move
  GroupTuple ids = tuple_of({Permutation(8), Permutation(8)});
  for (const GroupTuple &t : mn::neighbors(Q8, ids))
    CHECK(t == ids);
}

TEST_CASE("move inversion sequences undo every move") {
  for (PermGroup G : {mn::groups::cyclic(6), mn::groups::symmetric(3),
                      mn::groups::quaternion()}) {
    CAPTURE(G.name());
    const auto &elems = G.elements();
    std::vector<Permutation> flat(elems.begin(), elems.end());
    for (unsigned n : {1u, 2u}) {
      auto moves = mn::all_moves(G, n);
      // sample tuples: all for n=1, diagonal-ish slices for n=2
      std::vector<GroupTuple> tuples;
      if (n == 1) {
        for (const Permutation &a : flat)
          tuples.push_back(tuple_of({a}));
      } else {
        for (std::size_t a = 0; a < flat.size(); ++a)
          for (std::size_t b = 0; b < flat.size(); b += 2)
            tuples.push_back(tuple_of({flat[a], flat[b]}));
      }
      for (const GroupTuple &t : tuples)
        for (const ACMove &m : moves) {
          GroupTuple u = mn::apply_move(G, t, m);
          for (const ACMove &inv : mn::inverse_moves(G, m))
            u = mn::apply_move(G, u, inv);
          CHECK(u == t);
        }
    }
  }
}

TEST_CASE("orbits") {
  SUBCASE("all-identity tuple is alone") {
    PermGroup Q8 = mn::groups::quaternion();
    auto orbit =
        mn::ac_orbit(Q8, tuple_of({Permutation(8), Permutation(8)}), 1000);
    CHECK(orbit.size() == 1);
  }
  SUBCASE("C2 singleton (x)") {
    PermGroup C2 = mn::groups::cyclic(2);
    auto orbit = mn::ac_orbit(C2, tuple_of({C2.generators()[0]}), 1000);
    CHECK(orbit.size() == 1);
  }
  SUBCASE("S3 singleton transposition reaches all three transpositions") {
    PermGroup S3 = mn::groups::symmetric(3);
    auto orbit = mn::ac_orbit(S3, tuple_of({mn::parse_cycles(3, "(0 1)")}), 1000);
    CHECK(orbit.size() == 3);
    for (const GroupTuple &t : orbit)
      CHECK(t.entries[0].order() == 2);
  }
  SUBCASE("orbit cap error") {
    PermGroup S3 = mn::groups::symmetric(3);
    CHECK_THROWS_AS(
        mn::ac_orbit(S3, tuple_of({mn::parse_cycles(3, "(0 1)")}), 1),
        mn::CapExceededError);
  }
}

TEST_CASE("classes of C2 and C3 singletons") {
  PermGroup C2 = mn::groups::cyclic(2);
  auto all = mn::ac_classes(C2, 1, TupleFilter::All);
  CHECK(all.size() == 2);

  PermGroup C3 = mn::groups::cyclic(3);
  auto ng = mn::ac_classes(C3, 1, TupleFilter::NormallyGenerating);
  REQUIRE(ng.size() == 1);
  CHECK(ng[0].size() == 2); // (x) and (x^2), joined by inversion
}

TEST_CASE("moves preserve the normal closure") {
  for (PermGroup G : {mn::groups::symmetric(3), mn::groups::quaternion()}) {
    CAPTURE(G.name());
    const auto &elems = G.elements();
    std::vector<Permutation> flat(elems.begin(), elems.end());
    auto moves = mn::all_moves(G, 2);
    for (std::size_t a = 0; a < flat.size(); ++a)
      for (std::size_t b = 0; b < flat.size(); b += 3) {
        GroupTuple t = tuple_of({flat[a], flat[b]});
        mn::BigInt before = mn::normal_closure(G, t.entries).order();
        for (const ACMove &m : moves) {
          GroupTuple u = mn::apply_move(G, t, m);
          CHECK(mn::normal_closure(G, u.entries).order() == before);
        }
      }
  }
}

TEST_CASE("orbit partition does not depend on the designated generating set") {
  PermGroup Q8 = mn::groups::quaternion();
  Permutation i = Q8.generators()[0];
  Permutation j = Q8.generators()[1];
  PermGroup Q8_alt(8, {i, i * j}, "Q8'");
  REQUIRE(Q8_alt.order() == 8);

  for (unsigned n : {1u, 2u}) {
    auto classes_a = mn::ac_classes(Q8, n, TupleFilter::All);
    auto classes_b = mn::ac_classes(Q8_alt, n, TupleFilter::All);
    CHECK(partition_key(classes_a) == partition_key(classes_b));
  }
}

TEST_CASE("abelian specialization agrees with the full engine") {
  // On an abelian group, conjugation is trivial and left/right multiplies
  // coincide; a reduced move set must give the same partition.
  for (PermGroup G : {mn::groups::cyclic(6), mn::groups::klein()}) {
    CAPTURE(G.name());
    auto full = mn::ac_classes(G, 2, TupleFilter::All);

    std::vector<ACMove> reduced;
    for (unsigned i = 0; i < 2; ++i)
      for (unsigned j = 0; j < 2; ++j) {
        if (i == j)
          continue;
        reduced.push_back({MoveKind::RightMultiply, i, j, 1, 0});
        reduced.push_back({MoveKind::RightMultiply, i, j, -1, 0});
      }
    for (unsigned j = 0; j < 2; ++j)
      reduced.push_back({MoveKind::Invert, 0, j, 1, 0});

    // breadth-first partition with the reduced moves only
    std::set<GroupTuple> seen;
    std::set<std::set<GroupTuple>> partition;
    const auto &elems = G.elements();
    for (const Permutation &a : elems)
      for (const Permutation &b : elems) {
        GroupTuple root = tuple_of({a, b});
        if (seen.count(root))
          continue;
        std::set<GroupTuple> cls{root};
        std::vector<GroupTuple> frontier{root};
        while (!frontier.empty()) {
          GroupTuple t = frontier.back();
          frontier.pop_back();
          for (const ACMove &m : reduced) {
            GroupTuple u = mn::apply_move(G, t, m);
            if (cls.insert(u).second)
              frontier.push_back(u);
          }
        }
        seen.insert(cls.begin(), cls.end());
        partition.insert(std::move(cls));
      }
    CHECK(partition_key(full) == partition);
  }
}

TEST_CASE("filter is constant on classes") {
  PermGroup S3 = mn::groups::symmetric(3);
  auto classes = mn::ac_classes(S3, 2, TupleFilter::NormallyGenerating);
  for (const auto &cls : classes)
    for (const GroupTuple &t : cls)
      CHECK(mn::normal_closure(S3, t.entries).order() == 6);
}

TEST_CASE("generalized check on abelian groups is trivially bijective") {
  auto report = mn::generalized_ac_check(mn::groups::cyclic(6), 2);
  CHECK(report.refinement_ok);
  CHECK(report.bijective);
  CHECK(report.ac_class_count == report.abelianized_class_count);
}

TEST_CASE("generalized check on Q8 pairs") {
  auto report = mn::generalized_ac_check(mn::groups::quaternion(), 2);
  CHECK(report.normally_generating_count == 24);
  CHECK(report.refinement_ok);
  CHECK(report.bijective);
  CHECK(report.ac_class_count == report.abelianized_class_count);
}

TEST_CASE("generalized check on the Heisenberg group mod 3") {
  auto report = mn::generalized_ac_check(mn::groups::heisenberg(3), 2);
  CHECK(report.normally_generating_count == 432);
  CHECK(report.refinement_ok);
  CHECK(report.bijective);
}

TEST_CASE("tuple space cap error names the cap") {
  mn::Caps caps;
  caps.tuple_space_cap = 10;
  CHECK_THROWS_AS(
      mn::ac_classes(mn::groups::symmetric(3), 2, TupleFilter::All, caps),
      mn::CapExceededError);
}
