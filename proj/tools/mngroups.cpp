#include "mn/ac_engine.hpp"
#include "mn/catalog.hpp"
#include "mn/group_spec.hpp"
#include "mn/lattice.hpp"
#include "mn/mn_analysis.hpp"
#include "mn/parallel.hpp"
#include "mn/report_json.hpp"
#include "mn/series.hpp"
#include "mn/tree_groups.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

namespace {

using mn::Json;

struct GlobalOptions {
  bool one_indexed = false;
  unsigned threads = 1;
};

void print_group_line(const mn::PermGroup &G) {
  std::cout << "group: " << G.name() << " (degree " << G.degree() << ", order "
            << mn::to_decimal(G.order()) << ")\n";
}

int cmd_check(const std::string &spec_arg, bool json, const GlobalOptions &opts) {
  mn::PermGroup G = mn::resolve_group_spec(spec_arg, opts.one_indexed).parsed;
  bool in_mn = mn::is_in_mn_direct(G);
  mn::NilpotencyResult nilp = mn::is_nilpotent(G);
  if (json) {
    std::cout << mn::dump_document(
        mn::json_document("check", mn::check_json(G, in_mn, nilp)));
    return 0;
  }
  print_group_line(G);
  std::cout << "in MN: " << (in_mn ? "true" : "false") << "\n";
  std::cout << "nilpotent: " << (nilp.nilpotent ? "true" : "false");
  if (nilp.nilpotent)
    std::cout << " (class " << nilp.nilpotency_class << ")";
  std::cout << "\n";
  std::cout << "agree: " << (in_mn == nilp.nilpotent ? "true" : "false") << "\n";
  return 0;
}

int cmd_report(const std::string &spec_arg, bool json, const GlobalOptions &opts) {
  mn::PermGroup G = mn::resolve_group_spec(spec_arg, opts.one_indexed).parsed;
  mn::CharacterizationReport report = mn::characterization_report(G);
  if (json) {
    std::cout << mn::dump_document(
        mn::json_document("report", mn::characterization_json(G, report)));
    return 0;
  }
  print_group_line(G);
  std::cout << "condition 1 (all maximal subgroups normal): "
            << (report.cond1_all_maximal_normal ? "true" : "false") << "\n";
  std::cout << "condition 2 (quotients stay in MN): "
            << (report.cond2_quotients_in_mn ? "true" : "false") << "\n";
  std::cout << "condition 3 (finite quotients nilpotent): "
            << (report.cond3_maximal_finite_index_and_finite_quotients_nilpotent
                    ? "true"
                    : "false")
            << "\n";
  std::cout << "condition 4 ([G,G] inside Frattini): "
            << (report.cond4_commutator_in_frattini ? "true" : "false") << "\n";
  std::cout << "coherent: " << (report.coherent() ? "true" : "false") << "\n";
  std::cout << "normal subgroups considered: "
            << report.normal_subgroups_considered
            << (report.normal_subgroups_exhaustive ? " (exhaustive)"
                                                   : " (sampled)")
            << "\n";
  if (report.witnesses.non_normal_maximal)
    std::cout << "non-normal maximal subgroup: <"
              << *report.witnesses.non_normal_maximal << ">\n";
  if (report.witnesses.quotient_not_in_mn_kernel)
    std::cout << "quotient outside MN by: <"
              << *report.witnesses.quotient_not_in_mn_kernel << ">\n";
  if (report.witnesses.non_nilpotent_quotient_kernel)
    std::cout << "non-nilpotent quotient by: <"
              << *report.witnesses.non_nilpotent_quotient_kernel << ">\n";
  if (report.witnesses.commutator_outside_frattini)
    std::cout << "commutator outside Frattini: "
              << *report.witnesses.commutator_outside_frattini << "\n";
  return 0;
}

int cmd_subgroup(const std::string &spec_arg, bool json, bool commutator,
                 const GlobalOptions &opts) {
  mn::PermGroup G = mn::resolve_group_spec(spec_arg, opts.one_indexed).parsed;
  mn::Subgroup H = commutator ? mn::commutator_subgroup(G) : mn::frattini(G);
  const char *command = commutator ? "commutator" : "frattini";
  if (json) {
    Json payload;
    payload["group"] = mn::group_facts_json(G);
    payload["subgroup"] = mn::subgroup_json(H);
    std::cout << mn::dump_document(mn::json_document(command, payload));
    return 0;
  }
  print_group_line(G);
  std::cout << command << " order: " << mn::to_decimal(H.order()) << "\n";
  std::cout << "generators:";
  for (const mn::Permutation &g : H.generators())
    std::cout << " " << g.cycle_string();
  std::cout << "\n";
  return 0;
}

int cmd_witness(const std::string &kind, unsigned m,
                const std::string &custom_spec, const std::string &x_cycles,
                const std::string &y_cycles, bool json,
                const GlobalOptions &opts) {
  std::optional<mn::WitnessReport> report;
  if (kind == "s3") {
    mn::PermGroup S3 = mn::build_builtin("symmetric", {"3"});
    report = mn::free_group_rank2_witness(
        S3, mn::parse_cycles(3, "(0 1)", opts.one_indexed),
        mn::parse_cycles(3, "(0 2)", opts.one_indexed));
  } else if (kind == "dihedral") {
    report = mn::free_product_dihedral_witness(m);
  } else if (kind == "custom") {
    if (custom_spec.empty() || x_cycles.empty() || y_cycles.empty())
      throw std::invalid_argument(
          "custom witness requires --group, --x and --y");
    mn::PermGroup G = mn::resolve_group_spec(custom_spec, opts.one_indexed).parsed;
    report = mn::free_group_rank2_witness(
        G, mn::parse_cycles(G.degree(), x_cycles, opts.one_indexed),
        mn::parse_cycles(G.degree(), y_cycles, opts.one_indexed));
  } else {
    throw std::invalid_argument("witness kind must be s3, dihedral or custom");
  }
  if (json) {
    std::cout << mn::dump_document(
        mn::json_document("witness", mn::witness_json(*report)));
    return 0;
  }
  std::cout << "group: " << report->group_label << " (order "
            << mn::to_decimal(report->group_order) << ")\n";
  std::cout << "witness set:";
  for (const mn::Permutation &w : report->witness_set)
    std::cout << " " << w.cycle_string();
  std::cout << "\n";
  std::cout << "generated order: " << mn::to_decimal(report->generated_order)
            << "\n";
  std::cout << "normal closure order: "
            << mn::to_decimal(report->normal_closure_order) << "\n";
  std::cout << "verdict: " << mn::to_string(report->verdict) << "\n";
  return 0;
}

int cmd_ac_classes(const std::string &spec_arg, unsigned n,
                   const std::string &filter_name, bool json,
                   const GlobalOptions &opts) {
  mn::PermGroup G = mn::resolve_group_spec(spec_arg, opts.one_indexed).parsed;
  mn::TupleFilter filter;
  if (filter_name == "normally-generating")
    filter = mn::TupleFilter::NormallyGenerating;
  else if (filter_name == "all")
    filter = mn::TupleFilter::All;
  else if (filter_name == "generating")
    filter = mn::TupleFilter::Generating;
  else
    throw std::invalid_argument("unknown filter '" + filter_name + "'");

  // The abelianization comparison is the purpose of the report; groups
  // outside MN are legal inputs but the bijectivity conclusion only carries
  // the generalized property for MN groups.
  try {
    if (!mn::is_in_mn_direct(G))
      std::cerr << "warning: group is not in MN; the abelianized comparison "
                   "is reported but not implied\n";
  } catch (const mn::CapExceededError &) {
    std::cerr << "warning: MN status not determined (lattice cap)\n";
  }

  mn::ACClassReport report = mn::generalized_ac_check(G, n, filter);
  if (json) {
    std::cout << mn::dump_document(
        mn::json_document("ac-classes", mn::ac_report_json(report)));
    return 0;
  }
  print_group_line(G);
  std::cout << "tuple length: " << report.tuple_length << "\n";
  std::cout << "normally generating tuples: "
            << report.normally_generating_count << "\n";
  std::cout << "move classes: " << report.ac_class_count << "\n";
  std::cout << "abelianized classes: " << report.abelianized_class_count
            << "\n";
  std::cout << "refinement ok: " << (report.refinement_ok ? "true" : "false")
            << "\n";
  std::cout << "bijective: " << (report.bijective ? "true" : "false") << "\n";
  return 0;
}

int cmd_tree(const std::string &automaton_name, unsigned p, unsigned level,
             const std::string &omega, bool json, const GlobalOptions &opts) {
  (void)opts;
  mn::TreeAutomaton automaton = [&] {
    if (automaton_name == "grigorchuk") {
      std::string prefix =
          omega.empty() ? mn::TreeAutomaton::first_grigorchuk_omega(level)
                        : omega;
      return mn::TreeAutomaton::grigorchuk(prefix);
    }
    if (automaton_name == "gupta-sidki")
      return mn::TreeAutomaton::gupta_sidki(p);
    if (automaton_name == "basilica")
      return mn::TreeAutomaton::basilica();
    throw std::invalid_argument(
        "automaton must be grigorchuk, gupta-sidki or basilica");
  }();

  unsigned prime = automaton_name == "gupta-sidki" ? p : 2;
  mn::PermGroup G = automaton.level_quotient(level);
  bool p_group = mn::p_group_check(G, prime);

  std::optional<mn::NilpotencyResult> nilp;
  if (G.order() <= mn::global_caps().enumeration_cap)
    nilp = mn::is_nilpotent(G);
  std::optional<bool> in_mn;
  if (G.order() <= mn::global_caps().lattice_cap)
    in_mn = mn::is_in_mn_direct(G);

  if (json) {
    Json payload;
    payload["automaton"] = automaton.label();
    payload["level"] = level;
    payload["degree"] = G.degree();
    payload["order"] = mn::to_decimal(G.order());
    payload["prime"] = prime;
    payload["is_p_group"] = p_group;
    payload["nilpotent"] = nilp ? Json(nilp->nilpotent) : Json(nullptr);
    payload["nilpotency_class"] =
        nilp && nilp->nilpotent ? Json(nilp->nilpotency_class) : Json(nullptr);
    payload["in_mn"] = in_mn ? Json(*in_mn) : Json(nullptr);
    std::cout << mn::dump_document(mn::json_document("tree", payload));
    return 0;
  }
  std::cout << "automaton: " << automaton.label() << "\n";
  std::cout << "level: " << level << " (degree " << G.degree() << ")\n";
  std::cout << "order: " << mn::to_decimal(G.order()) << "\n";
  std::cout << prime << "-group: " << (p_group ? "true" : "false") << "\n";
  if (nilp) {
    std::cout << "nilpotent: " << (nilp->nilpotent ? "true" : "false");
    if (nilp->nilpotent)
      std::cout << " (class " << nilp->nilpotency_class << ")";
    std::cout << "\n";
  } else {
    std::cout << "nilpotent: not computed (enumeration_cap)\n";
  }
  if (in_mn)
    std::cout << "in MN: " << (*in_mn ? "true" : "false") << "\n";
  else
    std::cout << "in MN: not computed (lattice_cap)\n";
  return 0;
}

int cmd_basilica_probe(unsigned level, bool json) {
  mn::DihedralReport report = mn::basilica_dinfty_probe(level);
  if (json) {
    std::cout << mn::dump_document(
        mn::json_document("basilica-probe", mn::dihedral_report_json(report)));
    return 0;
  }
  std::cout << "level: " << report.level << "\n";
  std::cout << "quotient order: " << mn::to_decimal(report.quotient_order)
            << "\n";
  std::cout << "dihedral: " << (report.is_dihedral ? "true" : "false");
  if (report.degenerate)
    std::cout << " (degenerate)";
  std::cout << "\n";
  std::cout << "cyclic index-2 order: "
            << mn::to_decimal(report.cyclic_index2_order) << "\n";
  return 0;
}

int cmd_catalog(bool json) {
  if (json) {
    Json payload = Json::array();
    for (const mn::CatalogEntry &entry : mn::catalog_entries()) {
      mn::PermGroup G = mn::parse_group_spec(entry.spec);
      Json j;
      j["label"] = entry.label;
      j["spec"] = entry.spec;
      j["degree"] = G.degree();
      j["order"] = mn::to_decimal(G.order());
      payload.push_back(std::move(j));
    }
    std::cout << mn::dump_document(mn::json_document("catalog", payload));
    return 0;
  }
  for (const mn::CatalogEntry &entry : mn::catalog_entries()) {
    mn::PermGroup G = mn::parse_group_spec(entry.spec);
    std::printf("%-10s order %-8s %s\n", entry.label.c_str(),
                mn::to_decimal(G.order()).c_str(), entry.spec.c_str());
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact engine for the maximal-normal (MN) property, "
               "Andrews-Curtis move dynamics and tree-automaton quotients"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_flag("--one-indexed", opts.one_indexed,
               "read cycle points 1-based and normalize");
  app.add_option("--threads", opts.threads, "worker threads (results are "
                                            "identical for any value)");
  app.add_option("--enumeration-cap", mn::global_caps().enumeration_cap,
                 "max elements to enumerate");
  app.add_option("--lattice-cap", mn::global_caps().lattice_cap,
                 "max order for subgroup-lattice work");
  app.add_option("--quotient-degree-cap", mn::global_caps().quotient_degree_cap,
                 "max cosets for quotient actions");
  app.add_option("--tuple-cap", mn::global_caps().tuple_space_cap,
                 "max tuple states for the move engine");

  std::string spec_arg, filter_name = "normally-generating";
  std::string witness_kind, custom_spec, x_cycles, y_cycles, omega;
  unsigned n = 2, level = 1, dihedral_m = 3, gs_p = 3;
  bool json = false;

  CLI::App *check = app.add_subcommand("check", "MN and nilpotency verdicts");
  check->add_option("spec", spec_arg, "group spec (or @file)")->required();
  check->add_flag("--json", json, "machine-readable output");

  CLI::App *report =
      app.add_subcommand("report", "four-way equivalence report");
  report->add_option("spec", spec_arg, "group spec (or @file)")->required();
  report->add_flag("--json", json, "machine-readable output");

  CLI::App *frat = app.add_subcommand("frattini", "Frattini subgroup");
  frat->add_option("spec", spec_arg, "group spec (or @file)")->required();
  frat->add_flag("--json", json, "machine-readable output");

  CLI::App *comm = app.add_subcommand("commutator", "commutator subgroup");
  comm->add_option("spec", spec_arg, "group spec (or @file)")->required();
  comm->add_flag("--json", json, "machine-readable output");

  CLI::App *witness =
      app.add_subcommand("witness", "normally-generating witness evaluation");
  witness->add_option("kind", witness_kind, "s3 | dihedral | custom")
      ->required();
  witness->add_option("m", dihedral_m, "dihedral parameter (order 2m)");
  witness->add_option("--group", custom_spec, "custom target group spec");
  witness->add_option("--x", x_cycles, "custom image of x (cycles)");
  witness->add_option("--y", y_cycles, "custom image of y (cycles)");
  witness->add_flag("--json", json, "machine-readable output");

  CLI::App *ac = app.add_subcommand("ac-classes",
                                    "move classes vs the abelianization");
  ac->add_option("spec", spec_arg, "group spec (or @file)")->required();
  ac->add_option("-n,--tuple-length", n, "tuple length")->required();
  ac->add_option("--filter", filter_name,
                 "normally-generating | all | generating");
  ac->add_flag("--json", json, "machine-readable output");

  CLI::App *tree =
      app.add_subcommand("tree", "tree-automaton level quotient facts");
  tree->add_option("automaton", spec_arg,
                   "grigorchuk | gupta-sidki | basilica")
      ->required();
  tree->add_option("p", gs_p, "gupta-sidki prime (3, 5 or 7)");
  tree->add_option("--level", level, "tree level")->required();
  tree->add_option("--omega", omega, "grigorchuk omega prefix over {0,1,2}");
  tree->add_flag("--json", json, "machine-readable output");

  CLI::App *probe = app.add_subcommand(
      "basilica-probe", "dihedral quotient of the level-n Basilica group");
  probe->add_option("--level", level, "tree level")->required();
  probe->add_flag("--json", json, "machine-readable output");

  CLI::App *cat = app.add_subcommand("catalog", "list built-in groups");
  cat->add_flag("--json", json, "machine-readable output");

  for (CLI::App *sub : app.get_subcommands({}))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  mn::global_thread_count() = opts.threads == 0 ? 1 : opts.threads;

  try {
    if (check->parsed())
      return cmd_check(spec_arg, json, opts);
    if (report->parsed())
      return cmd_report(spec_arg, json, opts);
    if (frat->parsed())
      return cmd_subgroup(spec_arg, json, false, opts);
    if (comm->parsed())
      return cmd_subgroup(spec_arg, json, true, opts);
    if (witness->parsed())
      return cmd_witness(witness_kind, dihedral_m, custom_spec, x_cycles,
                         y_cycles, json, opts);
    if (ac->parsed())
      return cmd_ac_classes(spec_arg, n, filter_name, json, opts);
    if (tree->parsed())
      return cmd_tree(spec_arg, gs_p, level, omega, json, opts);
    if (probe->parsed())
      return cmd_basilica_probe(level, json);
    if (cat->parsed())
      return cmd_catalog(json);
  } catch (const mn::CapExceededError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
