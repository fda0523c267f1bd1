#pragma once

#include "mn/caps.hpp"
#include "mn/lattice.hpp"
#include "mn/perm_group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mn {

/// Direct test of the defining property: every maximal subgroup is normal.
/// The trivial group is vacuously accepted.
bool is_in_mn_direct(const PermGroup &G, const Caps &caps = global_caps());

struct CharacterizationWitnesses {
  std::optional<std::string> non_normal_maximal;
  std::optional<std::string> quotient_not_in_mn_kernel;
  std::optional<std::string> non_nilpotent_quotient_kernel;
  std::optional<std::string> commutator_outside_frattini;
};

/// The four equivalent characterizations, each evaluated independently:
/// (1) all maximal subgroups normal, (2) every quotient by a considered
/// normal subgroup has the property again, (3) maximal subgroups of finite
/// index (trivially true here) and the considered quotients nilpotent,
/// (4) the commutator subgroup lies inside the Frattini subgroup.
struct CharacterizationReport {
  bool cond1_all_maximal_normal = false;
  bool cond2_quotients_in_mn = false;
  bool cond3_maximal_finite_index_and_finite_quotients_nilpotent = false;
  bool cond4_commutator_in_frattini = false;
  // Condition (2)/(3) iteration: exhaustive over all normal subgroups for
  // order <= 64, else a documented sample (trivial, center, commutator,
  // Frattini, normal cores of maximal subgroups).
  bool normal_subgroups_exhaustive = false;
  std::size_t normal_subgroups_considered = 0;
  CharacterizationWitnesses witnesses;

  bool coherent() const {
    return cond1_all_maximal_normal == cond2_quotients_in_mn &&
           cond2_quotients_in_mn ==
               cond3_maximal_finite_index_and_finite_quotients_nilpotent &&
           cond3_maximal_finite_index_and_finite_quotients_nilpotent ==
               cond4_commutator_in_frattini;
  }
};

CharacterizationReport characterization_report(const PermGroup &G,
                                 const Caps &caps = global_caps());

/// True iff <S> is all of G.
bool generates(const PermGroup &G, const std::vector<Permutation> &S);

/// True iff the normal closure of S is all of G.
bool normally_generates(const PermGroup &G, const std::vector<Permutation> &S);

enum class WitnessVerdict {
  NormallyGeneratesButNotGenerates,
  Generates,
  NeitherGenerates,
};

const char *to_string(WitnessVerdict v);

struct WitnessReport {
  std::string group_label;
  std::vector<Permutation> witness_set;
  BigInt generated_order = 0;
  BigInt normal_closure_order = 0;
  BigInt group_order = 0;
  WitnessVerdict verdict = WitnessVerdict::NeitherGenerates;
};

struct WitnessSearchResult {
  // The subset-size bound the search ran with; 0 means all sizes.
  unsigned max_subset_size = 0;
  bool exhaustive_all_sizes = false;
  std::optional<WitnessReport> witness;
};

/// Searches for a set that normally generates G without generating it.
/// Bounded mode enumerates subsets of size <= max_subset_size exhaustively;
/// all-sizes mode searches proper subgroups, which is equivalent because a
/// subset and the subgroup it generates have the same normal closure.
WitnessSearchResult witness_subset_search(const PermGroup &G,
                                       unsigned max_subset_size = 3,
                                       bool exhaustive_all_sizes = false,
                                       const Caps &caps = global_caps());

/// Evaluates the free-group witness words y^-1 x y and x^-1 y x at the given
/// images and reports what they generate.
WitnessReport free_group_rank2_witness(const PermGroup &target,
                                       const Permutation &x_image,
                                       const Permutation &y_image);

/// The two-reflection witness {bab, aba} in the dihedral group of order 2m,
/// m >= 3 (the finite shadow of the free-product witness).
WitnessReport free_product_dihedral_witness(unsigned m);

/// For a finite p-group: every subgroup H of index <= p^2 with the
/// maximal-normal property forces the property on G. Always true for
/// p-groups; checking it certifies the implementation's consistency.
bool p_subgroup_criterion_check(const PermGroup &G, unsigned p,
                                const Caps &caps = global_caps());

} // namespace mn
