#include "mn/lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mn {

namespace {

// Dense membership bitmap used as a dedup key.
using Bits = std::vector<std::uint64_t>;

Bits bits_of(const std::vector<std::uint32_t> &indices, std::size_t n) {
  Bits b((n + 63) / 64, 0);
  for (std::uint32_t i : indices)
    b[i >> 6] |= std::uint64_t(1) << (i & 63);
  return b;
}

bool bits_subset(const Bits &a, const Bits &b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & ~b[w])
      return false;
  return true;
}

} // namespace

SubgroupLattice::SubgroupLattice(const PermGroup &G, const Caps &caps)
    : table_(G, caps) {
  if (G.order() > caps.lattice_cap)
    throw CapExceededError("lattice_cap", caps.lattice_cap,
                           "group order " + to_decimal(G.order()));
  table_.build_multiplication_table();
  const std::uint32_t n = table_.size();

  // Cyclic extension from the trivial subgroup. Each record keeps the
  // generator chain that built it: short (extensions at least double the
  // order) and enough to regenerate the subgroup.
  struct Record {
    std::vector<std::uint32_t> elems;
    std::vector<std::uint32_t> gens;
  };
  std::vector<Record> records;
  std::map<Bits, std::size_t> seen;

  Record trivial{{table_.identity_index()}, {}};
  seen.emplace(bits_of(trivial.elems, n), 0);
  records.push_back(std::move(trivial));

  for (std::size_t head = 0; head < records.size(); ++head) {
    // records[head] may be invalidated by push_back; copy what we need.
    std::vector<std::uint32_t> base_elems = records[head].elems;
    std::vector<std::uint32_t> base_gens = records[head].gens;
    std::vector<bool> in(n, false);
    for (std::uint32_t e : base_elems)
      in[e] = true;
    for (std::uint32_t x = 0; x < n; ++x) {
      if (in[x])
        continue;
      std::vector<std::uint32_t> seeds = base_gens;
      seeds.push_back(x);
      std::vector<std::uint32_t> closed = table_.subgroup_closure(seeds);
      Bits key = bits_of(closed, n);
      if (seen.emplace(std::move(key), records.size()).second)
        records.push_back(Record{std::move(closed), std::move(seeds)});
    }
  }

  members_.reserve(records.size());
  for (Record &r : records)
    members_.push_back(std::move(r.elems));
  std::sort(members_.begin(), members_.end(),
            [](const auto &a, const auto &b) {
              if (a.size() != b.size())
                return a.size() < b.size();
              return a < b;
            });
}

std::vector<std::size_t> SubgroupLattice::proper_subgroup_ids() const {
  std::vector<std::size_t> ids;
  for (std::size_t k = 0; k < members_.size(); ++k)
    if (members_[k].size() < table_.size())
      ids.push_back(k);
  return ids;
}

std::vector<std::size_t> SubgroupLattice::maximal_subgroup_ids() const {
  const std::size_t n = table_.size();
  std::vector<std::size_t> proper = proper_subgroup_ids();
  std::vector<Bits> bitsets;
  bitsets.reserve(proper.size());
  for (std::size_t k : proper)
    bitsets.push_back(bits_of(members_[k], n));
  std::vector<std::size_t> ids;
  for (std::size_t a = 0; a < proper.size(); ++a) {
    bool maximal = true;
    for (std::size_t b = 0; b < proper.size() && maximal; ++b) {
      if (a == b)
        continue;
      if (members_[proper[b]].size() > members_[proper[a]].size() &&
          bits_subset(bitsets[a], bitsets[b]))
        maximal = false;
    }
    if (maximal)
      ids.push_back(proper[a]);
  }
  return ids;
}

bool SubgroupLattice::id_is_normal(std::size_t k) const {
  const auto &elems = members_[k];
  std::vector<bool> in(table_.size(), false);
  for (std::uint32_t e : elems)
    in[e] = true;
  for (const auto &conj : table_.generator_conjugation())
    for (std::uint32_t e : elems)
      if (!in[conj[e]])
        return false;
  return true;
}

std::vector<std::size_t> SubgroupLattice::normal_subgroup_ids() const {
  std::vector<std::size_t> ids;
  for (std::size_t k = 0; k < members_.size(); ++k)
    if (id_is_normal(k))
      ids.push_back(k);
  return ids;
}

std::vector<std::uint32_t> SubgroupLattice::frattini_indices() const {
  if (members_.size() == 1) {
    // Only the trivial group has no proper subgroup; its Frattini subgroup
    // is taken to be trivial.
    return members_[0];
  }
  std::vector<std::size_t> maximal = maximal_subgroup_ids();
  const std::size_t n = table_.size();
  Bits inter((n + 63) / 64, ~std::uint64_t(0));
  for (std::size_t k : maximal) {
    Bits b = bits_of(members_[k], n);
    for (std::size_t w = 0; w < inter.size(); ++w)
      inter[w] &= b[w];
  }
  std::vector<std::uint32_t> result;
  for (std::uint32_t i = 0; i < n; ++i)
    if (inter[i >> 6] >> (i & 63) & 1)
      result.push_back(i);
  return result;
}

Subgroup SubgroupLattice::materialize(std::size_t k) const {
  return materialize_indices(members_[k]);
}

Subgroup
SubgroupLattice::materialize_indices(const std::vector<std::uint32_t> &indices) const {
  std::set<Permutation> elems;
  for (std::uint32_t i : indices)
    elems.insert(table_.at(i));
  return Subgroup::from_elements(table_.group(), std::move(elems));
}

std::vector<Subgroup> all_subgroups(const PermGroup &G, const Caps &caps) {
  SubgroupLattice lattice(G, caps);
  std::vector<Subgroup> result;
  result.reserve(lattice.count());
  for (std::size_t k = 0; k < lattice.count(); ++k)
    result.push_back(lattice.materialize(k));
  return result;
}

std::vector<Subgroup> maximal_subgroups(const PermGroup &G, const Caps &caps) {
  if (G.is_trivial())
    throw std::invalid_argument(
        "the trivial group has no proper subgroups, hence no maximal ones");
  SubgroupLattice lattice(G, caps);
  std::vector<Subgroup> result;
  for (std::size_t k : lattice.maximal_subgroup_ids())
    result.push_back(lattice.materialize(k));
  return result;
}

Subgroup frattini(const PermGroup &G, const Caps &caps) {
  SubgroupLattice lattice(G, caps);
  Subgroup result = lattice.materialize_indices(lattice.frattini_indices());
  return result;
}

} // namespace mn
