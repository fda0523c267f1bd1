#include "mn/perm_group.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>
#include <utility>

namespace mn {

PermGroup::PermGroup(unsigned degree, std::vector<Permutation> generators,
                     std::string name)
    : degree_(degree), gens_(std::move(generators)), name_(std::move(name)),
      cache_(std::make_shared<Cache>()) {
  if (gens_.empty())
    gens_.push_back(Permutation(degree_));
  for (const Permutation &g : gens_)
    if (g.degree() != degree_)
      throw std::invalid_argument("generator degree mismatch");
}

PermGroup PermGroup::renamed(std::string name) const {
  PermGroup copy(*this);
  copy.name_ = std::move(name);
  return copy;
}

const BigInt &PermGroup::order() const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (cache_->order)
    return *cache_->order;
  if (cache_->elements) {
    cache_->order = BigInt(cache_->elements->size());
    return *cache_->order;
  }
  if (!cache_->chain)
    cache_->chain = std::make_shared<StabilizerChain>(degree_, gens_);
  cache_->order = cache_->chain->order();
  return *cache_->order;
}

bool PermGroup::order_at_most(std::uint64_t bound) const {
  return order() <= bound;
}

bool PermGroup::contains(const Permutation &p) const {
  if (p.degree() != degree_)
    throw std::invalid_argument("degree mismatch in membership test");
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (cache_->elements)
      return cache_->elements->count(p) > 0;
  }
  return chain().contains(p);
}

const std::set<Permutation> &PermGroup::elements(const Caps &caps) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (cache_->elements)
      return *cache_->elements;
    // A known order lets us fail fast before any closure work.
    if (cache_->order && *cache_->order > caps.enumeration_cap)
      throw CapExceededError("enumeration_cap", caps.enumeration_cap,
                             "group order " + to_decimal(*cache_->order));
  }

  // Breadth-first closure of the generators under composition. The cap is
  // enforced live, so no chain is needed for small groups.
  std::set<Permutation> closure;
  std::deque<const Permutation *> frontier;
  closure.insert(Permutation(degree_));
  frontier.push_back(&*closure.begin());
  while (!frontier.empty()) {
    const Permutation &x = *frontier.front();
    frontier.pop_front();
    for (const Permutation &g : gens_) {
      Permutation next = x * g;
      auto [it, inserted] = closure.insert(std::move(next));
      if (inserted) {
        if (closure.size() > caps.enumeration_cap)
          throw CapExceededError("enumeration_cap", caps.enumeration_cap,
                                 "element closure exceeds " +
                                     std::to_string(caps.enumeration_cap) +
                                     " elements; group too large to enumerate");
        frontier.push_back(&*it);
      }
    }
  }

  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (!cache_->elements) {
    cache_->elements = std::move(closure);
    if (!cache_->order)
      cache_->order = BigInt(cache_->elements->size());
    assert(!cache_->order || *cache_->order == BigInt(cache_->elements->size()));
  }
  return *cache_->elements;
}

bool PermGroup::elements_cached() const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->elements.has_value();
}

const StabilizerChain &PermGroup::chain() const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (!cache_->chain)
    cache_->chain = std::make_shared<StabilizerChain>(degree_, gens_);
  return *cache_->chain;
}

std::shared_ptr<const StabilizerChain> PermGroup::chain_ptr() const {
  chain();
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->chain;
}

bool PermGroup::is_trivial() const {
  for (const Permutation &g : gens_)
    if (!g.is_identity())
      return false;
  return true;
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (gens_[i] * gens_[j] != gens_[j] * gens_[i])
        return false;
  return true;
}

void PermGroup::set_known_order(BigInt order) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (!cache_->order)
    cache_->order = std::move(order);
}

void PermGroup::set_known_elements(std::set<Permutation> elements) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (!cache_->elements) {
    cache_->order = BigInt(elements.size());
    cache_->elements = std::move(elements);
  }
}

// --- Subgroup ---------------------------------------------------------------

Subgroup::Subgroup(PermGroup parent, std::vector<Permutation> generators,
                   std::string name)
    : parent_(std::move(parent)),
      group_(parent_.degree(), std::move(generators), std::move(name)) {}

Subgroup Subgroup::from_elements(PermGroup parent, std::set<Permutation> elements,
                                 std::string name) {
  unsigned degree = parent.degree();
  std::vector<Permutation> gens = greedy_generators(elements, degree);
  Subgroup result(std::move(parent), std::move(gens), std::move(name));
  result.group_.set_known_elements(std::move(elements));
  return result;
}

bool Subgroup::same_elements(const Subgroup &other) const {
  if (order() != other.order())
    return false;
  for (const Permutation &g : other.generators())
    if (!contains(g))
      return false;
  return true;
}

bool Subgroup::contains_subgroup(const Subgroup &other) const {
  for (const Permutation &g : other.generators())
    if (!contains(g))
      return false;
  return true;
}

bool Subgroup::is_whole_parent() const {
  return order() == parent_.order();
}

std::vector<Permutation> greedy_generators(const std::set<Permutation> &elements,
                                           unsigned degree) {
  std::vector<Permutation> gens;
  std::set<Permutation> generated;
  generated.insert(Permutation(degree));
  for (const Permutation &candidate : elements) {
    if (generated.count(candidate))
      continue;
    gens.push_back(candidate);
    // close the generated set under the enlarged generator list
    std::deque<Permutation> frontier(generated.begin(), generated.end());
    generated.insert(candidate);
    frontier.push_back(candidate);
    while (!frontier.empty()) {
      Permutation x = std::move(frontier.front());
      frontier.pop_front();
      for (const Permutation &g : gens) {
        Permutation next = x * g;
        if (generated.insert(next).second)
          frontier.push_back(std::move(next));
      }
    }
    if (generated.size() == elements.size())
      break;
  }
  if (gens.empty())
    gens.push_back(Permutation(degree));
  return gens;
}

// --- operations -------------------------------------------------------------

Subgroup subgroup_generated(const PermGroup &G, const std::vector<Permutation> &S) {
  for (const Permutation &s : S)
    if (!G.contains(s))
      throw std::invalid_argument("generator " + s.cycle_string() +
                                  " lies outside the group");
  return Subgroup(G, S);
}

Subgroup normal_closure(const PermGroup &G, const std::vector<Permutation> &S) {
  for (const Permutation &s : S)
    if (!G.contains(s))
      throw std::invalid_argument("element " + s.cycle_string() +
                                  " lies outside the group");
  // Close under conjugation by the generators of G, keeping only conjugates
  // that enlarge the subgroup so far (each kept generator at least doubles
  // it). Generator conjugation suffices in a finite group, where conjugation
  // by g^-1 is a power of conjugation by g.
  std::vector<Permutation> gens;
  for (const Permutation &s : S)
    if (!s.is_identity())
      gens.push_back(s);
  auto chain = std::make_unique<StabilizerChain>(G.degree(), gens);
  bool grew = !gens.empty();
  while (grew) {
    grew = false;
    std::size_t snapshot = gens.size();
    for (std::size_t k = 0; k < snapshot; ++k)
      for (const Permutation &g : G.generators()) {
        Permutation conj = g.inverse() * gens[k] * g;
        if (!chain->contains(conj)) {
          gens.push_back(std::move(conj));
          chain = std::make_unique<StabilizerChain>(G.degree(), gens);
          grew = true;
        }
      }
  }
  return Subgroup(G, std::move(gens));
}

bool is_normal(const PermGroup &G, const Subgroup &H) {
  for (const Permutation &h : H.generators())
    if (!G.contains(h))
      throw std::invalid_argument("subgroup generator outside the group");
  // Conjugating the generators of H into H conjugates all of H; closing
  // over the generators of G covers every conjugator of the finite group.
  for (const Permutation &g : G.generators()) {
    Permutation ginv = g.inverse();
    for (const Permutation &h : H.generators())
      if (!H.contains(ginv * h * g))
        return false;
  }
  return true;
}

Subgroup normal_core(const PermGroup &G, const Subgroup &H, const Caps &caps) {
  const std::set<Permutation> &g_elements = G.elements(caps);
  const std::set<Permutation> &h_elements = H.elements(caps);
  std::set<Permutation> core;
  for (const Permutation &x : h_elements) {
    bool in_all_conjugates = true;
    for (const Permutation &g : g_elements) {
      if (!h_elements.count(g * x * g.inverse())) {
        in_all_conjugates = false;
        break;
      }
    }
    if (in_all_conjugates)
      core.insert(x);
  }
  return Subgroup::from_elements(G, std::move(core));
}

Subgroup center(const PermGroup &G, const Caps &caps) {
  std::set<Permutation> central;
  for (const Permutation &x : G.elements(caps)) {
    bool commutes = true;
    for (const Permutation &g : G.generators()) {
      if (x * g != g * x) {
        commutes = false;
        break;
      }
    }
    if (commutes)
      central.insert(x);
  }
  return Subgroup::from_elements(G, std::move(central), "Z(" + G.name() + ")");
}

PermGroup direct_product(const PermGroup &G1, const PermGroup &G2) {
  unsigned degree = G1.degree() + G2.degree();
  std::vector<Permutation> gens;
  gens.reserve(G1.generators().size() + G2.generators().size());
  for (const Permutation &g : G1.generators())
    gens.push_back(g.extended(degree));
  for (const Permutation &g : G2.generators())
    gens.push_back(g.shifted(G1.degree(), degree));
  PermGroup result(degree, std::move(gens), G1.name() + " x " + G2.name());
  return result;
}

} // namespace mn
