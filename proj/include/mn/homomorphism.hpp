#pragma once

#include "mn/caps.hpp"
#include "mn/perm_group.hpp"

#include <map>
#include <memory>
#include <utility>
#include <vector>

namespace mn {

/// A homomorphism between permutation groups, carried by generator images.
/// Maps built from a coset action evaluate on arbitrary domain elements;
/// they are well-defined by construction.
class Homomorphism {
public:
  const PermGroup &domain() const { return domain_; }
  const PermGroup &codomain() const { return codomain_; }
  const std::vector<Permutation> &generator_images() const { return images_; }

  /// Image of an arbitrary domain element.
  Permutation apply(const Permutation &g) const;

  /// Exhaustive multiplicativity check over the domain's element table.
  bool verify_welldefined(const Caps &caps = global_caps()) const;

private:
  friend std::pair<PermGroup, Homomorphism>
  quotient(const PermGroup &, const Subgroup &, const Caps &);

  struct CosetAction {
    std::shared_ptr<const StabilizerChain> kernel_chain;
    std::vector<Permutation> reps; // lex-min coset representatives
    std::map<Permutation, std::uint32_t> index;
  };

  PermGroup domain_;
  PermGroup codomain_;
  std::vector<Permutation> images_;
  std::shared_ptr<const CosetAction> cosets_;

  Homomorphism(PermGroup domain, PermGroup codomain,
               std::vector<Permutation> images,
               std::shared_ptr<const CosetAction> cosets)
      : domain_(std::move(domain)), codomain_(std::move(codomain)),
        images_(std::move(images)), cosets_(std::move(cosets)) {}
};

/// G/N as the permutation group of the left-multiplication action on the
/// cosets of N, together with the natural projection. Cosets are keyed by
/// their lexicographically minimal representative, so the numbering (and
/// hence the result) is canonical. Throws std::invalid_argument when N is
/// not normal, CapExceededError when the index exceeds
/// caps.quotient_degree_cap.
std::pair<PermGroup, Homomorphism>
quotient(const PermGroup &G, const Subgroup &N, const Caps &caps = global_caps());

} // namespace mn
