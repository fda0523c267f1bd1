#include "mn/stabilizer_chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace mn {

namespace {

std::uint32_t min_moved_point(const Permutation &p) {
  for (std::uint32_t i = 0; i < p.degree(); ++i)
    if (p[i] != i)
      return i;
  return p.degree();
}

} // namespace

StabilizerChain::StabilizerChain(unsigned degree,
                                 const std::vector<Permutation> &generators)
    : degree_(degree), levels_(degree) {
  for (std::uint32_t p = 0; p < degree_; ++p)
    levels_[p].base = p;
  for (const Permutation &g : generators) {
    if (g.degree() != degree_)
      throw std::invalid_argument("generator degree mismatch");
    if (g.is_identity())
      continue;
    std::uint32_t idx = static_cast<std::uint32_t>(pool_.size());
    pool_.push_back(g);
    for (std::uint32_t t = 0; t <= min_moved_point(g) && t < degree_; ++t)
      levels_[t].gen_idx.push_back(idx);
  }
  run_schreier_sims();
  compute_order();
}

void StabilizerChain::rebuild_orbit(Level &level) {
  level.orbit.assign(1, level.base);
  level.slot.clear();
  level.slot[level.base] = 0;
  level.transversal.assign(1, Permutation(degree_));
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    std::uint32_t x = level.orbit[head];
    for (std::uint32_t gi : level.gen_idx) {
      const Permutation &s = pool_[gi];
      std::uint32_t y = s[x];
      if (level.slot.count(y))
        continue;
      level.slot[y] = static_cast<std::uint32_t>(level.orbit.size());
      level.orbit.push_back(y);
      level.transversal.push_back(head == 0 ? s : s * level.transversal[head]);
    }
  }
}

std::pair<Permutation, std::uint32_t>
StabilizerChain::strip(Permutation g, std::uint32_t from) const {
  for (std::uint32_t lvl = from; lvl < degree_; ++lvl) {
    const Level &level = levels_[lvl];
    std::uint32_t x = g[lvl];
    if (!level.active()) {
      if (x != lvl)
        return {std::move(g), lvl};
      continue;
    }
    auto it = level.slot.find(x);
    if (it == level.slot.end())
      return {std::move(g), lvl};
    if (it->second != 0)
      g = level.transversal[it->second].inverse() * g;
  }
  return {std::move(g), degree_};
}

void StabilizerChain::run_schreier_sims() {
  if (pool_.empty())
    return;
  std::int64_t i = static_cast<std::int64_t>(degree_) - 1;
  while (i >= 0) {
    Level &level = levels_[static_cast<std::size_t>(i)];
    if (!level.active()) {
      --i;
      continue;
    }
    rebuild_orbit(level);
    bool restarted = false;
    for (std::size_t slot = 0; slot < level.orbit.size() && !restarted; ++slot) {
      std::uint32_t x = level.orbit[slot];
      for (std::uint32_t gi : level.gen_idx) {
        const Permutation &s = pool_[gi];
        std::uint32_t image_slot = level.slot.at(s[x]);
        // Schreier generator t_{s(x)}^{-1} * s * t_x; fixes all points
        // through this level's base.
        Permutation u = slot == 0 ? s : s * level.transversal[slot];
        if (image_slot != 0)
          u = level.transversal[image_slot].inverse() * u;
        if (u.is_identity())
          continue;
        auto [h, j] = strip(std::move(u), static_cast<std::uint32_t>(i) + 1);
        if (j == degree_)
          continue; // sifted to the identity
        std::uint32_t idx = static_cast<std::uint32_t>(pool_.size());
        pool_.push_back(std::move(h));
        for (std::uint32_t t = static_cast<std::uint32_t>(i) + 1; t <= j; ++t)
          levels_[t].gen_idx.push_back(idx);
        i = j; // re-verify from the insertion level upward
        restarted = true;
        break;
      }
    }
    if (!restarted)
      --i;
  }
}

void StabilizerChain::compute_order() {
  order_ = 1;
  for (const Level &level : levels_)
    if (level.active())
      order_ *= static_cast<std::uint64_t>(level.orbit.size());
}

bool StabilizerChain::contains(const Permutation &p) const {
  if (p.degree() != degree_)
    throw std::invalid_argument("degree mismatch in membership test");
  auto [residue, lvl] = strip(p, 0);
  return lvl == degree_ && residue.is_identity();
}

Permutation StabilizerChain::min_coset_representative(Permutation g) const {
  if (g.degree() != degree_)
    throw std::invalid_argument("degree mismatch in coset representative");
  for (const Level &level : levels_) {
    if (!level.active())
      continue;
    std::uint32_t best_slot = 0;
    std::uint32_t best_image = g[level.orbit[0]];
    for (std::uint32_t slot = 1; slot < level.orbit.size(); ++slot) {
      std::uint32_t image = g[level.orbit[slot]];
      if (image < best_image) {
        best_image = image;
        best_slot = slot;
      }
    }
    if (best_slot != 0)
      g = g * level.transversal[best_slot];
  }
  return g;
}

std::size_t StabilizerChain::base_length() const {
  std::size_t n = 0;
  for (const Level &level : levels_)
    if (level.active())
      ++n;
  return n;
}

} // namespace mn
