#include "mn/series.hpp"

namespace mn {

namespace {

Permutation commutator(const Permutation &g, const Permutation &h) {
  return g.inverse() * h.inverse() * g * h;
}

// Reduce a subgroup's generating list by materializing its elements; keeps
// later commutator rounds from compounding conjugation-closure generators.
// Subgroups past the enumeration cap stay chain-backed.
Subgroup compacted(const PermGroup &parent, const Subgroup &H, const Caps &caps,
                   const std::string &name) {
  if (H.order() > caps.enumeration_cap)
    return Subgroup(parent, H.generators(), name);
  std::set<Permutation> elems = H.elements(caps);
  return Subgroup::from_elements(parent, std::move(elems), name);
}

} // namespace

Subgroup commutator_subgroup(const PermGroup &G, const Caps &caps) {
  std::vector<Permutation> comms;
  const auto &gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (i != j)
        comms.push_back(commutator(gens[i], gens[j]));
  Subgroup closure = normal_closure(G, comms);
  return compacted(G, closure, caps,
                   "[" + G.name() + "," + G.name() + "]");
}

std::vector<Subgroup> lower_central_series(const PermGroup &G, const Caps &caps) {
  std::vector<Subgroup> series;
  series.emplace_back(G, G.generators(), G.name().empty() ? "g1" : G.name());

  for (;;) {
    const Subgroup &current = series.back();
    // [G, gamma_k] as the normal closure of generator commutators; valid
    // because gamma_k is normal in G.
    std::vector<Permutation> comms;
    for (const Permutation &g : G.generators())
      for (const Permutation &x : current.generators()) {
        Permutation c = commutator(g, x);
        if (!c.is_identity())
          comms.push_back(c);
      }
    Subgroup next = compacted(
        G, normal_closure(G, comms), caps,
        "g" + std::to_string(series.size() + 1));
    if (next.same_elements(current))
      break;
    series.push_back(std::move(next));
  }
  return series;
}

NilpotencyResult is_nilpotent(const PermGroup &G, const Caps &caps) {
  std::vector<Subgroup> series = lower_central_series(G, caps);
  NilpotencyResult result;
  result.nilpotent = series.back().order() == 1;
  result.nilpotency_class =
      result.nilpotent ? static_cast<unsigned>(series.size() - 1) : 0;
  return result;
}

std::pair<PermGroup, Homomorphism> abelianization(const PermGroup &G,
                                                  const Caps &caps) {
  Subgroup derived = commutator_subgroup(G, caps);
  return quotient(G, derived, caps);
}

} // namespace mn
