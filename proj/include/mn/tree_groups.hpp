#pragma once

#include "mn/caps.hpp"
#include "mn/perm_group.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace mn {

/// Wreath recursion on the d-ary rooted tree: every state has a root
/// permutation of the d subtrees and one section state per subtree. State 0
/// is the identity. Level-dependent recursions (the Grigorchuk family) are
/// unrolled into per-depth states up to the supplied prefix length.
class TreeAutomaton {
public:
  struct State {
    std::string name;
    std::vector<std::uint32_t> root_perm; // size d
    std::vector<std::uint32_t> sections;  // size d, state indices
  };

  /// Grigorchuk-family automaton for a finite prefix of omega over {0,1,2}.
  /// Levels up to the prefix length can be evaluated. The letter at depth t
  /// replaces one of b, c, d by the identity section (0: d, 1: c, 2: b) and
  /// the other two by a; the first Grigorchuk group is omega = 012012...
  static TreeAutomaton grigorchuk(const std::string &omega_prefix);

  /// The standard periodic prefix "012012..." of the given length.
  static std::string first_grigorchuk_omega(unsigned length);

  /// Gupta-Sidki p-group automaton: root cycle a and t = (a, a^-1, 1, .., t).
  /// Implemented for p in {3, 5, 7}.
  static TreeAutomaton gupta_sidki(unsigned p);

  /// Basilica automaton: a = (1, b), b = (1, a) * swap on the binary tree.
  static TreeAutomaton basilica();

  unsigned alphabet_size() const { return d_; }
  const std::string &label() const { return label_; }
  /// Number of levels this automaton can evaluate (UINT32_MAX if unlimited).
  unsigned max_level() const { return max_level_; }
  const std::vector<State> &states() const { return states_; }
  /// Indices of the designated generator states, with their display names.
  const std::vector<std::uint32_t> &generator_states() const {
    return generator_states_;
  }

  std::uint32_t state_index(const std::string &name) const;

  /// Action of a state on the d^n level-n vertices in lexicographic order.
  /// Memoized per (state, level).
  Permutation level_permutation(std::uint32_t state, unsigned n) const;
  Permutation level_permutation(const std::string &state_name, unsigned n) const;

  /// The finite quotient at level n: the permutation group generated by the
  /// designated generator states' level-n actions.
  PermGroup level_quotient(unsigned n, const Caps &caps = global_caps()) const;

private:
  unsigned d_ = 2;
  std::vector<State> states_;
  std::vector<std::uint32_t> generator_states_;
  std::string label_;
  unsigned max_level_ = 0xffffffffu;

  struct Memo {
    std::mutex mutex;
    std::map<std::pair<std::uint32_t, unsigned>, Permutation> table;
  };
  std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();

  Permutation evaluate(std::uint32_t state, unsigned n) const;
};

/// True iff |G| is a power of p. When the group is small enough to
/// enumerate, nilpotency is verified as a consistency check (finite p-groups
/// are nilpotent); an inconsistency throws std::logic_error.
bool p_group_check(const PermGroup &G, unsigned p,
                   const Caps &caps = global_caps());

struct DihedralCheck {
  bool dihedral = false;
  // Orders 1, 2 and 4 are accepted as degenerate dihedral groups.
  bool degenerate = false;
  std::optional<Subgroup> cyclic_index2;
};

/// Exhaustive search for dihedral structure: a cyclic subgroup of half the
/// order plus an outside involution inverting it.
DihedralCheck is_dihedral(const PermGroup &G, const Caps &caps = global_caps());

struct DihedralReport {
  unsigned level = 0;
  BigInt quotient_order = 0;
  bool is_dihedral = false;
  BigInt cyclic_index2_order = 0;
  bool degenerate = false;
};

/// Builds the level-n Basilica quotient B_n, forms the quotient of B_n by
/// the normal closure of {b^2, abab} evaluated at level n, and reports its
/// dihedral structure. The tower of these quotients is the finite shadow of
/// the infinite dihedral quotient of the Basilica group.
DihedralReport basilica_dinfty_probe(unsigned level,
                                     const Caps &caps = global_caps());

} // namespace mn
