#pragma once

#include "mn/caps.hpp"
#include "mn/element_table.hpp"
#include "mn/perm_group.hpp"

#include <cstdint>
#include <vector>

namespace mn {

/// The full subgroup lattice of a group within caps.lattice_cap, built by
/// cyclic extension: every known subgroup is extended by one element at a
/// time and the results deduplicated by element set. Subgroups are ordered
/// by (order, element indices), which is canonical.
class SubgroupLattice {
public:
  explicit SubgroupLattice(const PermGroup &G, const Caps &caps = global_caps());

  const PermGroup &group() const { return table_.group(); }
  const ElementTable &table() const { return table_; }

  std::size_t count() const { return members_.size(); }
  /// Sorted element indices of subgroup k.
  const std::vector<std::uint32_t> &member_indices(std::size_t k) const {
    return members_[k];
  }

  std::vector<std::size_t> proper_subgroup_ids() const;
  std::vector<std::size_t> maximal_subgroup_ids() const;
  std::vector<std::size_t> normal_subgroup_ids() const;
  bool id_is_normal(std::size_t k) const;

  /// Element indices of the Frattini subgroup (intersection of the maximal
  /// subgroups; the whole group when there are none, i.e. only for the
  /// trivial group).
  std::vector<std::uint32_t> frattini_indices() const;

  Subgroup materialize(std::size_t k) const;
  Subgroup materialize_indices(const std::vector<std::uint32_t> &indices) const;

private:
  ElementTable table_;
  std::vector<std::vector<std::uint32_t>> members_; // sorted by (size, lex)
};

/// Every subgroup of G exactly once, ordered by subgroup order.
std::vector<Subgroup> all_subgroups(const PermGroup &G,
                                    const Caps &caps = global_caps());

/// All maximal proper subgroups. Throws std::invalid_argument for the
/// trivial group, which has no proper subgroups.
std::vector<Subgroup> maximal_subgroups(const PermGroup &G,
                                        const Caps &caps = global_caps());

/// Frattini subgroup: intersection of all maximal subgroups; the trivial
/// subgroup for the trivial group (vacuous-intersection convention).
Subgroup frattini(const PermGroup &G, const Caps &caps = global_caps());

} // namespace mn
