#pragma once

#include "mn/ac_engine.hpp"
#include "mn/mn_analysis.hpp"
#include "mn/series.hpp"
#include "mn/tree_groups.hpp"

#include <json.hpp>

#include <string>

namespace mn {

/// All CLI JSON documents carry this schema version.
inline constexpr const char *kSchemaVersion = "1";

using Json = nlohmann::ordered_json;

/// Wraps a command payload with schema_version and command name.
Json json_document(const std::string &command, Json payload);

Json group_facts_json(const PermGroup &G);
Json check_json(const PermGroup &G, bool in_mn, const NilpotencyResult &nilp);
Json characterization_json(const PermGroup &G, const CharacterizationReport &report);
Json subgroup_json(const Subgroup &H);
Json witness_json(const WitnessReport &report);
Json witness_search_json(const PermGroup &G, const WitnessSearchResult &result);
Json ac_report_json(const ACClassReport &report);
Json dihedral_report_json(const DihedralReport &report);

std::string dump_document(const Json &doc);

} // namespace mn
