#pragma once

#include "mn/caps.hpp"
#include "mn/element_table.hpp"
#include "mn/perm_group.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace mn {

enum class MoveKind { RightMultiply, LeftMultiply, Invert, Conjugate };

/// One move on an n-tuple over an ambient group:
///   RightMultiply: entry i <- g_i * g_j^sign      (i != j)
///   LeftMultiply:  entry i <- g_j^sign * g_i      (i != j)
///   Invert:        entry j <- g_j^-1
///   Conjugate:     entry j <- s^-1 g_j s, s the conjugator_index-th
///                  designated generator of the ambient group
struct ACMove {
  MoveKind kind = MoveKind::Invert;
  unsigned i = 0;
  unsigned j = 0;
  int sign = 1;
  unsigned conjugator_index = 0;
};

struct GroupTuple {
  std::vector<Permutation> entries;

  friend bool operator==(const GroupTuple &, const GroupTuple &) = default;
  friend auto operator<=>(const GroupTuple &a, const GroupTuple &b) {
    return a.entries <=> b.entries;
  }
};

/// Every move of the engine for tuple length n, in canonical order.
std::vector<ACMove> all_moves(const PermGroup &G, unsigned n);

/// Applies one move; other entries unchanged. Throws std::invalid_argument
/// on bad indices or i == j for the multiply kinds.
GroupTuple apply_move(const PermGroup &G, const GroupTuple &t, const ACMove &m);

/// A move sequence undoing m on every tuple. Multiplies flip their sign and
/// inversion undoes itself; a conjugation is undone by repeating it until
/// the conjugator's inner action has gone around (finite order), since
/// inverse conjugators are not primitive moves.
std::vector<ACMove> inverse_moves(const PermGroup &G, const ACMove &m);

/// All one-move images of t, in all_moves order (duplicates allowed).
std::vector<GroupTuple> neighbors(const PermGroup &G, const GroupTuple &t);

/// Breadth-first move closure of {t}; throws CapExceededError past `cap`
/// states. Moves are invertible, so this is a full equivalence class.
std::set<GroupTuple> ac_orbit(const PermGroup &G, const GroupTuple &t,
                              std::uint64_t cap);

enum class TupleFilter { All, NormallyGenerating, Generating };

/// Move-orbit partition of the filtered tuples of length n over G.
/// Classes appear in order of their least tuple; tuples within a class are
/// sorted. Throws CapExceededError when |G|^n exceeds caps.tuple_space_cap.
std::vector<std::vector<GroupTuple>> ac_classes(const PermGroup &G, unsigned n,
                                                TupleFilter filter,
                                                const Caps &caps = global_caps());

struct ACClassReport {
  std::string group_label;
  unsigned tuple_length = 0;
  std::uint64_t normally_generating_count = 0;
  std::uint64_t ac_class_count = 0;
  std::uint64_t abelianized_class_count = 0;
  bool refinement_ok = false;
  bool bijective = false;
};

/// Compares the move dynamics on G against the dynamics on G/[G,G]:
/// checks that the abelianization maps every class of filtered tuples of G
/// into a single abelianized class (refinement) and that the induced map on
/// classes is a bijection. The default filter is NormallyGenerating, i.e.
/// the generalized Andrews-Curtis comparison.
ACClassReport generalized_ac_check(const PermGroup &G, unsigned n,
                                   TupleFilter filter = TupleFilter::NormallyGenerating,
                                   const Caps &caps = global_caps());

} // namespace mn
