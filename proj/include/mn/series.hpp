#pragma once

#include "mn/caps.hpp"
#include "mn/homomorphism.hpp"
#include "mn/perm_group.hpp"

#include <utility>
#include <vector>

namespace mn {

/// [G,G]: the normal closure of the commutators of generator pairs.
Subgroup commutator_subgroup(const PermGroup &G, const Caps &caps = global_caps());

/// gamma_1 = G, gamma_{k+1} = [G, gamma_k] until stabilization. The returned
/// list ends at the first stable term (so a nilpotent group ends in the
/// trivial subgroup and a perfect-tailed group ends at the stable term).
std::vector<Subgroup> lower_central_series(const PermGroup &G,
                                           const Caps &caps = global_caps());

struct NilpotencyResult {
  bool nilpotent = false;
  // Strict steps of the lower central series; meaningful when nilpotent.
  unsigned nilpotency_class = 0;
};

NilpotencyResult is_nilpotent(const PermGroup &G, const Caps &caps = global_caps());

/// G / [G,G] with the natural projection.
std::pair<PermGroup, Homomorphism> abelianization(const PermGroup &G,
                                                  const Caps &caps = global_caps());

} // namespace mn
