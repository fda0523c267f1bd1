#pragma once

#include "mn/perm_group.hpp"

#include <string>
#include <vector>

namespace mn {

/// Builds a named builtin: cyclic N | dihedral M | symmetric N (N <= 6) |
/// alternating N (N <= 6) | quaternion | klein | heisenberg P (P in
/// {2,3,5}) | elementary-abelian P K. Throws std::invalid_argument on
/// unknown names or bad parameters.
PermGroup build_builtin(const std::string &name,
                        const std::vector<std::string> &args);

struct CatalogEntry {
  std::string label;
  std::string spec; // parseable group-spec text
};

/// The built-in catalog: a fixed mix of nilpotent and non-nilpotent groups
/// spanning cyclic, dihedral, symmetric/alternating, extraspecial and
/// direct-product families.
const std::vector<CatalogEntry> &catalog_entries();

} // namespace mn
