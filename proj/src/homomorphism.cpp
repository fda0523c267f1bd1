#include "mn/homomorphism.hpp"

#include <cassert>
#include <stdexcept>

namespace mn {

Permutation Homomorphism::apply(const Permutation &g) const {
  if (g.degree() != domain_.degree())
    throw std::invalid_argument("degree mismatch in homomorphism application");
  const CosetAction &ca = *cosets_;
  std::vector<std::uint32_t> images(ca.reps.size());
  for (std::uint32_t i = 0; i < ca.reps.size(); ++i) {
    Permutation moved = ca.kernel_chain->min_coset_representative(g * ca.reps[i]);
    images[i] = ca.index.at(moved);
  }
  return Permutation(std::move(images));
}

bool Homomorphism::verify_welldefined(const Caps &caps) const {
  const auto &elements = domain_.elements(caps);
  if (!apply(Permutation(domain_.degree())).is_identity())
    return false;
  for (const Permutation &x : elements)
    for (const Permutation &y : elements)
      if (apply(x * y) != apply(x) * apply(y))
        return false;
  return true;
}

std::pair<PermGroup, Homomorphism>
quotient(const PermGroup &G, const Subgroup &N, const Caps &caps) {
  if (!is_normal(G, N))
    throw std::invalid_argument("quotient kernel is not normal");

  BigInt index = G.order() / N.order();
  if (index > caps.quotient_degree_cap)
    throw CapExceededError("quotient_degree_cap", caps.quotient_degree_cap,
                           "index " + to_decimal(index));
  std::uint32_t n_cosets = index.convert_to<std::uint32_t>();

  auto cosets = std::make_shared<Homomorphism::CosetAction>();
  cosets->kernel_chain = N.group().chain_ptr();

  // Breadth-first coset enumeration keyed by minimal representatives.
  cosets->reps.push_back(Permutation(G.degree()));
  cosets->index.emplace(cosets->reps.front(), 0);
  for (std::uint32_t head = 0; head < cosets->reps.size(); ++head) {
    Permutation rep = cosets->reps[head];
    for (const Permutation &g : G.generators()) {
      Permutation moved = cosets->kernel_chain->min_coset_representative(g * rep);
      if (!cosets->index.count(moved)) {
        cosets->index.emplace(moved, static_cast<std::uint32_t>(cosets->reps.size()));
        cosets->reps.push_back(std::move(moved));
      }
    }
  }
  assert(cosets->reps.size() == n_cosets);

  std::vector<Permutation> images;
  images.reserve(G.generators().size());
  for (const Permutation &g : G.generators()) {
    std::vector<std::uint32_t> table(n_cosets);
    for (std::uint32_t i = 0; i < n_cosets; ++i) {
      Permutation moved =
          cosets->kernel_chain->min_coset_representative(g * cosets->reps[i]);
      table[i] = cosets->index.at(moved);
    }
    images.push_back(Permutation(std::move(table)));
  }

  std::string name = (G.name().empty() ? "G" : G.name()) + "/" +
                     (N.name().empty() ? "N" : N.name());
  PermGroup Q(n_cosets, images, std::move(name));
  Q.set_known_order(index);
  Homomorphism pi(G, Q, std::move(images), std::move(cosets));
  return {std::move(Q), std::move(pi)};
}

} // namespace mn
