#pragma once

#include "mn/bigint.hpp"
#include "mn/permutation.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace mn {

/// Base and strong generating set for a permutation group, built with the
/// deterministic Schreier-Sims algorithm.
///
/// The base is the natural point order 0 < 1 < ... < degree-1 (levels whose
/// stabilizer fixes the point stay inactive). Consequently the level-k
/// stabilizer fixes every point below its base point, which makes
/// min_coset_representative() a greedy walk instead of a backtrack.
class StabilizerChain {
public:
  StabilizerChain(unsigned degree, const std::vector<Permutation> &generators);

  unsigned degree() const { return degree_; }
  const BigInt &order() const { return order_; }

  /// Membership via sifting; throws on degree mismatch.
  bool contains(const Permutation &p) const;

  /// The lexicographically least element of the coset g * H, where H is the
  /// group of this chain. Cosets gH and g'H are equal iff their minimal
  /// representatives are.
  Permutation min_coset_representative(Permutation g) const;

  /// Number of active base points.
  std::size_t base_length() const;

private:
  struct Level {
    std::uint32_t base = 0;
    std::vector<std::uint32_t> gen_idx; // generators fixing all points < base
    std::vector<std::uint32_t> orbit;   // BFS order, orbit[0] == base
    std::unordered_map<std::uint32_t, std::uint32_t> slot; // point -> index
    std::vector<Permutation> transversal; // aligned with orbit; [0] unused
    bool active() const { return !gen_idx.empty(); }
  };

  unsigned degree_;
  std::vector<Permutation> pool_;
  std::vector<Level> levels_; // one per point
  BigInt order_ = 1;

  void rebuild_orbit(Level &level);
  // Sifts g through levels >= from; returns the residue and the level at
  // which sifting stopped (degree_ when the residue is the identity).
  std::pair<Permutation, std::uint32_t> strip(Permutation g,
                                              std::uint32_t from) const;
  void run_schreier_sims();
  void compute_order();
};

} // namespace mn
