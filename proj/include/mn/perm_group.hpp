#pragma once

#include "mn/bigint.hpp"
#include "mn/caps.hpp"
#include "mn/permutation.hpp"
#include "mn/stabilizer_chain.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mn {

/// A finitely generated permutation group. Immutable after construction;
/// the order, element table and stabilizer chain are lazy caches filled
/// idempotently, so const instances are safe to share across threads.
///
/// The generator sequence is preserved verbatim: it is the designated
/// conjugator sequence of the move engine.
class PermGroup {
public:
  /// Empty generator lists are normalized to {identity}.
  PermGroup(unsigned degree, std::vector<Permutation> generators,
            std::string name = "");

  unsigned degree() const { return degree_; }
  const std::vector<Permutation> &generators() const { return gens_; }
  const std::string &name() const { return name_; }
  PermGroup renamed(std::string name) const;

  /// Exact order (stabilizer chain; never enumerates).
  const BigInt &order() const;
  bool order_at_most(std::uint64_t bound) const;

  /// Membership test; throws std::invalid_argument on degree mismatch.
  bool contains(const Permutation &p) const;

  /// Full element table, cached. Throws CapExceededError when the closure
  /// grows past caps.enumeration_cap.
  const std::set<Permutation> &elements(const Caps &caps = global_caps()) const;
  bool elements_cached() const;

  const StabilizerChain &chain() const;
  std::shared_ptr<const StabilizerChain> chain_ptr() const;

  bool is_trivial() const;
  bool is_abelian() const;

  /// Caches a known order (used by quotient construction, where the order
  /// is forced by Lagrange). The value is trusted; callers must be exact.
  void set_known_order(BigInt order) const;

  /// Caches a known element table (must be the exact closure of the
  /// generators; trusted).
  void set_known_elements(std::set<Permutation> elements) const;

private:
  struct Cache {
    std::mutex mutex;
    std::optional<BigInt> order;
    std::optional<std::set<Permutation>> elements;
    std::shared_ptr<const StabilizerChain> chain;
  };

  unsigned degree_;
  std::vector<Permutation> gens_;
  std::string name_;
  std::shared_ptr<Cache> cache_;
};

/// A subgroup of a parent group, defined by generators. The element set is
/// materialized on demand (and cap-checked); order and membership go through
/// the subgroup's own stabilizer chain, so large normal closures stay usable
/// as quotient kernels without enumeration.
class Subgroup {
public:
  Subgroup(PermGroup parent, std::vector<Permutation> generators,
           std::string name = "");

  /// Builds a subgroup from an explicit element set (must be closed; this is
  /// trusted and spot-checked only in debug builds). A small generating
  /// sequence is extracted greedily.
  static Subgroup from_elements(PermGroup parent, std::set<Permutation> elements,
                                std::string name = "");

  const PermGroup &parent() const { return parent_; }
  /// The subgroup as a standalone group on the same points.
  const PermGroup &group() const { return group_; }
  const std::vector<Permutation> &generators() const {
    return group_.generators();
  }
  const std::string &name() const { return group_.name(); }

  BigInt order() const { return group_.order(); }
  bool contains(const Permutation &p) const { return group_.contains(p); }
  const std::set<Permutation> &elements(const Caps &caps = global_caps()) const {
    return group_.elements(caps);
  }

  bool same_elements(const Subgroup &other) const;
  bool contains_subgroup(const Subgroup &other) const;
  bool is_whole_parent() const;

private:
  PermGroup parent_;
  PermGroup group_;
};

/// Extracts a short generating sequence from a closed element set.
std::vector<Permutation> greedy_generators(const std::set<Permutation> &elements,
                                           unsigned degree);

// --- group-core operations -------------------------------------------------

/// Smallest subgroup of G containing S; <{}> is the trivial subgroup.
/// Throws std::invalid_argument if an element of S lies outside G.
Subgroup subgroup_generated(const PermGroup &G, const std::vector<Permutation> &S);

/// Smallest normal subgroup of G containing S: S is closed under
/// conjugation by the generators of G (sufficient in a finite group), and
/// the closed set generates the subgroup. Redundant conjugates are filtered
/// through a stabilizer chain, so the generating list stays logarithmic.
Subgroup normal_closure(const PermGroup &G, const std::vector<Permutation> &S);

/// True iff g^-1 h g lies in H for every generator g of G and every
/// generator h of H (equivalent to conjugating all of H).
bool is_normal(const PermGroup &G, const Subgroup &H);

/// Largest normal subgroup of G contained in H; the intersection of all
/// conjugates of H. Requires G enumerable.
Subgroup normal_core(const PermGroup &G, const Subgroup &H,
                     const Caps &caps = global_caps());

/// Elements commuting with every generator. Requires G enumerable.
Subgroup center(const PermGroup &G, const Caps &caps = global_caps());

/// Acts on the disjoint union of the two point sets.
PermGroup direct_product(const PermGroup &G1, const PermGroup &G2);

} // namespace mn
