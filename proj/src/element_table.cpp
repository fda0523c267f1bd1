#include "mn/element_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace mn {

ElementTable::ElementTable(const PermGroup &G, const Caps &caps) : group_(G) {
  const std::set<Permutation> &elements = G.elements(caps);
  elems_.assign(elements.begin(), elements.end());
  for (std::uint32_t i = 0; i < elems_.size(); ++i)
    index_.emplace(elems_[i], i);
  identity_ = index_.at(Permutation(G.degree()));
  inv_.resize(elems_.size());
  for (std::uint32_t i = 0; i < elems_.size(); ++i)
    inv_[i] = index_.at(elems_[i].inverse());
  gen_conj_.reserve(G.generators().size());
  for (const Permutation &g : G.generators()) {
    Permutation ginv = g.inverse();
    std::vector<std::uint32_t> table(elems_.size());
    for (std::uint32_t i = 0; i < elems_.size(); ++i)
      table[i] = index_.at(ginv * elems_[i] * g);
    gen_conj_.push_back(std::move(table));
  }
}

std::uint32_t ElementTable::index_of(const Permutation &p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw std::invalid_argument("permutation not in element table");
  return it->second;
}

void ElementTable::build_multiplication_table() {
  if (!mul_.empty())
    return;
  std::size_t n = elems_.size();
  mul_.resize(n * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      mul_[static_cast<std::size_t>(i) * n + j] = index_.at(elems_[i] * elems_[j]);
}

std::vector<std::uint32_t>
ElementTable::subgroup_closure(const std::vector<std::uint32_t> &seeds) const {
  if (mul_.empty())
    throw std::logic_error("subgroup_closure requires the multiplication table");
  std::vector<bool> in(elems_.size(), false);
  std::vector<std::uint32_t> members{identity_};
  in[identity_] = true;
  std::vector<std::uint32_t> gens;
  for (std::uint32_t s : seeds)
    if (!in[s]) {
      in[s] = true;
      members.push_back(s);
      gens.push_back(s);
    }
  for (std::size_t head = 0; head < members.size(); ++head) {
    std::uint32_t x = members[head];
    for (std::uint32_t g : gens) {
      std::uint32_t y = mul(x, g);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

} // namespace mn
