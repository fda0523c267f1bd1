#pragma once

#include "mn/caps.hpp"
#include "mn/perm_group.hpp"
#include "mn/permutation.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace mn {

/// Indexed view of a full element table: elements are ranked by their sorted
/// order, so indices are canonical for a given group. Optionally carries the
/// n x n multiplication table for index-only arithmetic.
class ElementTable {
public:
  ElementTable(const PermGroup &G, const Caps &caps = global_caps());

  const PermGroup &group() const { return group_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(elems_.size()); }
  const Permutation &at(std::uint32_t i) const { return elems_[i]; }
  std::uint32_t index_of(const Permutation &p) const;
  std::uint32_t identity_index() const { return identity_; }
  std::uint32_t inv(std::uint32_t i) const { return inv_[i]; }

  void build_multiplication_table();
  bool has_multiplication_table() const { return !mul_.empty(); }
  std::uint32_t mul(std::uint32_t i, std::uint32_t j) const {
    return mul_[static_cast<std::size_t>(i) * elems_.size() + j];
  }

  /// Index permutation of conjugation x -> g^-1 x g for each group generator.
  const std::vector<std::vector<std::uint32_t>> &generator_conjugation() const {
    return gen_conj_;
  }

  /// Closure of the given seed indices under multiplication. Sufficient for
  /// subgroup generation: inverses are powers in a finite group. Requires the
  /// multiplication table. Result is sorted.
  std::vector<std::uint32_t>
  subgroup_closure(const std::vector<std::uint32_t> &seeds) const;

private:
  PermGroup group_;
  std::vector<Permutation> elems_;
  std::map<Permutation, std::uint32_t> index_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> mul_;
  std::uint32_t identity_ = 0;
  std::vector<std::vector<std::uint32_t>> gen_conj_;
};

} // namespace mn
