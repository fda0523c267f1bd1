#include "mn/report_json.hpp"

namespace mn {

Json json_document(const std::string &command, Json payload) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["result"] = std::move(payload);
  return doc;
}

Json group_facts_json(const PermGroup &G) {
  Json j;
  j["label"] = G.name();
  j["degree"] = G.degree();
  j["order"] = to_decimal(G.order());
  return j;
}

Json check_json(const PermGroup &G, bool in_mn, const NilpotencyResult &nilp) {
  Json j;
  j["group"] = group_facts_json(G);
  j["in_mn"] = in_mn;
  j["nilpotent"] = nilp.nilpotent;
  if (nilp.nilpotent)
    j["nilpotency_class"] = nilp.nilpotency_class;
  else
    j["nilpotency_class"] = nullptr;
  j["agree"] = in_mn == nilp.nilpotent;
  return j;
}

Json characterization_json(const PermGroup &G, const CharacterizationReport &report) {
  Json j;
  j["group"] = group_facts_json(G);
  j["cond1_all_maximal_normal"] = report.cond1_all_maximal_normal;
  j["cond2_quotients_in_mn"] = report.cond2_quotients_in_mn;
  j["cond3_maximal_finite_index_and_finite_quotients_nilpotent"] =
      report.cond3_maximal_finite_index_and_finite_quotients_nilpotent;
  j["cond4_commutator_in_frattini"] = report.cond4_commutator_in_frattini;
  j["coherent"] = report.coherent();
  j["normal_subgroups_exhaustive"] = report.normal_subgroups_exhaustive;
  j["normal_subgroups_considered"] = report.normal_subgroups_considered;
  Json w;
  w["non_normal_maximal"] = report.witnesses.non_normal_maximal
                                ? Json(*report.witnesses.non_normal_maximal)
                                : Json(nullptr);
  w["quotient_not_in_mn_kernel"] =
      report.witnesses.quotient_not_in_mn_kernel
          ? Json(*report.witnesses.quotient_not_in_mn_kernel)
          : Json(nullptr);
  w["non_nilpotent_quotient_kernel"] =
      report.witnesses.non_nilpotent_quotient_kernel
          ? Json(*report.witnesses.non_nilpotent_quotient_kernel)
          : Json(nullptr);
  w["commutator_outside_frattini"] =
      report.witnesses.commutator_outside_frattini
          ? Json(*report.witnesses.commutator_outside_frattini)
          : Json(nullptr);
  j["witnesses"] = std::move(w);
  return j;
}

Json subgroup_json(const Subgroup &H) {
  Json j;
  j["order"] = to_decimal(H.order());
  Json gens = Json::array();
  for (const Permutation &g : H.generators())
    gens.push_back(g.cycle_string());
  j["generators"] = std::move(gens);
  return j;
}

Json witness_json(const WitnessReport &report) {
  Json j;
  j["group_label"] = report.group_label;
  Json set = Json::array();
  for (const Permutation &w : report.witness_set)
    set.push_back(w.cycle_string());
  j["witness_set"] = std::move(set);
  j["generated_order"] = to_decimal(report.generated_order);
  j["normal_closure_order"] = to_decimal(report.normal_closure_order);
  j["group_order"] = to_decimal(report.group_order);
  j["verdict"] = to_string(report.verdict);
  return j;
}

Json witness_search_json(const PermGroup &G, const WitnessSearchResult &result) {
  Json j;
  j["group"] = group_facts_json(G);
  j["exhaustive_all_sizes"] = result.exhaustive_all_sizes;
  if (result.exhaustive_all_sizes)
    j["max_subset_size"] = nullptr;
  else
    j["max_subset_size"] = result.max_subset_size;
  j["witness"] = result.witness ? witness_json(*result.witness) : Json(nullptr);
  return j;
}

Json ac_report_json(const ACClassReport &report) {
  Json j;
  j["group_label"] = report.group_label;
  j["tuple_length"] = report.tuple_length;
  j["normally_generating_count"] = report.normally_generating_count;
  j["ac_class_count"] = report.ac_class_count;
  j["abelianized_class_count"] = report.abelianized_class_count;
  j["refinement_ok"] = report.refinement_ok;
  j["bijective"] = report.bijective;
  return j;
}

Json dihedral_report_json(const DihedralReport &report) {
  Json j;
  j["level"] = report.level;
  j["quotient_order"] = to_decimal(report.quotient_order);
  j["is_dihedral"] = report.is_dihedral;
  j["cyclic_index2_order"] = to_decimal(report.cyclic_index2_order);
  j["degenerate"] = report.degenerate;
  return j;
}

std::string dump_document(const Json &doc) { return doc.dump(2) + "\n"; }

} // namespace mn
