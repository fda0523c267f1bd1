#include "mn/catalog.hpp"
#include "mn/group_spec.hpp"
#include "mn/report_json.hpp"
#include "mn/series.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using mn::PermGroup;
using mn::Permutation;

TEST_CASE("parse the trivial group") {
  PermGroup G = mn::parse_group_spec("group perm degree=1\ngen ()\n");
  CHECK(G.degree() == 1);
  CHECK(G.order() == 1);
}

TEST_CASE("parse an inline symmetric group") {
  PermGroup G = mn::parse_group_spec("group perm degree=3\ngen (0 1)\ngen (0 1 2)");
  CHECK(G.order() == 6);
  CHECK(G.generators().size() == 2);
}

TEST_CASE("parse builtin shortcuts") {
  CHECK(mn::parse_group_spec("builtin dihedral 9").order() == 18);
  CHECK(mn::parse_group_spec("builtin quaternion").order() == 8);
  CHECK(mn::parse_group_spec("builtin elementary-abelian 3 2").order() == 9);
}

TEST_CASE("parse products, including nested ones") {
  PermGroup G = mn::parse_group_spec(
      "product (builtin quaternion) (builtin symmetric 3)");
  CHECK(G.order() == 48);
  PermGroup H = mn::parse_group_spec(
      "product (product (builtin cyclic 2) (builtin cyclic 3)) (builtin cyclic 5)");
  CHECK(H.order() == 30);
}

TEST_CASE("comments and blank lines are ignored") {
  PermGroup G = mn::parse_group_spec(
      "# a comment\n\ngroup perm degree=2 # trailing\ngen (0 1)\n");
  CHECK(G.order() == 2);
}

TEST_CASE("syntax errors carry line numbers") {
  auto message_of = [](const std::string &text) {
    try {
      mn::parse_group_spec(text);
      return std::string("no error");
    } catch (const std::invalid_argument &e) {
      return std::string(e.what());
    }
  };
  CHECK(message_of("group perm degree=3\nfoo").find("line 2") !=
        std::string::npos);
  CHECK(message_of("grp perm degree=3").find("line 1") != std::string::npos);
  CHECK(message_of("group perm degree=3\ngen (0 1") .find("line 2") !=
        std::string::npos);
  CHECK(message_of("group perm degree=0\ngen ()").find("degree") !=
        std::string::npos);
  CHECK(message_of("").find("empty") != std::string::npos);
  CHECK(message_of("builtin nosuch 3").find("nosuch") != std::string::npos);
  CHECK(message_of("product (builtin cyclic 2)").find("two operands") !=
        std::string::npos);
}

TEST_CASE("non-bijective generator data is rejected") {
  CHECK_THROWS_AS(mn::parse_group_spec("group perm degree=3\ngen (0 1)(1 2)"),
                  std::invalid_argument);
  CHECK_THROWS_AS(mn::parse_group_spec("group perm degree=2\ngen (0 5)"),
                  std::invalid_argument);
}

TEST_CASE("one-indexed parsing") {
  PermGroup G = mn::parse_group_spec("group perm degree=3\ngen (1 2 3)", true);
  CHECK(G.generators()[0] == Permutation::from_cycles(3, {{0, 1, 2}}));
}

TEST_CASE("print-then-parse round trip on the catalog") {
  for (const mn::CatalogEntry &entry : mn::catalog_entries()) {
    CAPTURE(entry.label);
    PermGroup G = mn::parse_group_spec(entry.spec);
    PermGroup reparsed = mn::parse_group_spec(mn::format_group_spec(G));
    CHECK(reparsed.degree() == G.degree());
    CHECK(reparsed.generators() == G.generators());
  }
}

TEST_CASE("group file loading") {
  const char *path = "/tmp/mn_test_group.grp";
  {
    std::ofstream out(path);
    out << "# test group\nbuiltin symmetric 4\n";
  }
  mn::GroupSpec spec = mn::resolve_group_spec(std::string("@") + path);
  CHECK(spec.source == mn::GroupSpec::Source::PermFile);
  CHECK(spec.parsed.order() == 24);
  std::remove(path);

  CHECK_THROWS_AS(mn::resolve_group_spec("@/no/such/file.grp"),
                  std::invalid_argument);
}

TEST_CASE("catalog entries all parse and carry distinct labels") {
  std::set<std::string> labels;
  CHECK(mn::catalog_entries().size() >= 40);
  for (const mn::CatalogEntry &entry : mn::catalog_entries()) {
    CAPTURE(entry.label);
    CHECK(labels.insert(entry.label).second);
    PermGroup G = mn::parse_group_spec(entry.spec);
    CHECK(G.order() >= 1);
  }
}

TEST_CASE("catalog orders match their element tables") {
  for (const mn::CatalogEntry &entry : mn::catalog_entries()) {
    CAPTURE(entry.label);
    PermGroup G = mn::parse_group_spec(entry.spec);
    mn::BigInt order = G.order();
    CHECK(order == mn::BigInt(G.elements().size()));
  }
}

TEST_CASE("json reports have fixed key sets") {
  auto keys_of = [](const mn::Json &j) {
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it)
      keys.push_back(it.key());
    return keys;
  };

  PermGroup S3 = mn::parse_group_spec("builtin symmetric 3");
  mn::Json doc = mn::json_document("check",
                                   mn::check_json(S3, false, {false, 0}));
  CHECK(keys_of(doc) ==
        std::vector<std::string>{"schema_version", "command", "result"});
  CHECK(doc["schema_version"] == "1");
  CHECK(keys_of(doc["result"]) ==
        std::vector<std::string>{"group", "in_mn", "nilpotent",
                                 "nilpotency_class", "agree"});

  mn::CharacterizationReport rep;
  CHECK(keys_of(mn::characterization_json(S3, rep)) ==
        std::vector<std::string>{
            "group", "cond1_all_maximal_normal", "cond2_quotients_in_mn",
            "cond3_maximal_finite_index_and_finite_quotients_nilpotent",
            "cond4_commutator_in_frattini", "coherent",
            "normal_subgroups_exhaustive", "normal_subgroups_considered",
            "witnesses"});

  mn::WitnessReport wr;
  CHECK(keys_of(mn::witness_json(wr)) ==
        std::vector<std::string>{"group_label", "witness_set",
                                 "generated_order", "normal_closure_order",
                                 "group_order", "verdict"});

  mn::ACClassReport ac;
  CHECK(keys_of(mn::ac_report_json(ac)) ==
        std::vector<std::string>{"group_label", "tuple_length",
                                 "normally_generating_count", "ac_class_count",
                                 "abelianized_class_count", "refinement_ok",
                                 "bijective"});

  mn::DihedralReport dr;
  CHECK(keys_of(mn::dihedral_report_json(dr)) ==
        std::vector<std::string>{"level", "quotient_order", "is_dihedral",
                                 "cyclic_index2_order", "degenerate"});
}
