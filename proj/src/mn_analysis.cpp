#include "mn/mn_analysis.hpp"

#include "mn/element_table.hpp"
#include "mn/homomorphism.hpp"
#include "mn/series.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mn {

namespace {

std::string generator_list(const std::vector<Permutation> &gens) {
  std::ostringstream out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i)
      out << ", ";
    out << gens[i].cycle_string();
  }
  return out.str();
}

} // namespace

const char *to_string(WitnessVerdict v) {
  switch (v) {
  case WitnessVerdict::NormallyGeneratesButNotGenerates:
    return "normally-generates-but-not-generates";
  case WitnessVerdict::Generates:
    return "generates";
  case WitnessVerdict::NeitherGenerates:
    return "neither-generates";
  }
  return "?";
}

bool is_in_mn_direct(const PermGroup &G, const Caps &caps) {
  if (G.is_trivial())
    return true; // no maximal subgroups to violate the property
  SubgroupLattice lattice(G, caps);
  for (std::size_t k : lattice.maximal_subgroup_ids())
    if (!lattice.id_is_normal(k))
      return false;
  return true;
}

CharacterizationReport characterization_report(const PermGroup &G, const Caps &caps) {
  CharacterizationReport report;
  SubgroupLattice lattice(G, caps);

  // Condition 1.
  report.cond1_all_maximal_normal = true;
  std::vector<std::size_t> maximal_ids;
  if (!G.is_trivial())
    maximal_ids = lattice.maximal_subgroup_ids();
  for (std::size_t k : maximal_ids) {
    if (!lattice.id_is_normal(k)) {
      report.cond1_all_maximal_normal = false;
      if (!report.witnesses.non_normal_maximal)
        report.witnesses.non_normal_maximal =
            generator_list(lattice.materialize(k).generators());
    }
  }

  // Normal subgroups driving conditions 2 and 3.
  std::vector<std::vector<std::uint32_t>> kernels;
  if (G.order() <= 64) {
    report.normal_subgroups_exhaustive = true;
    for (std::size_t k : lattice.normal_subgroup_ids())
      kernels.push_back(lattice.member_indices(k));
  } else {
    report.normal_subgroups_exhaustive = false;
    const ElementTable &table = lattice.table();
    auto indices_of = [&](const Subgroup &H) {
      std::vector<std::uint32_t> idx;
      for (const Permutation &p : H.elements(caps))
        idx.push_back(table.index_of(p));
      std::sort(idx.begin(), idx.end());
      return idx;
    };
    kernels.push_back({table.identity_index()});
    kernels.push_back(indices_of(center(G, caps)));
    kernels.push_back(indices_of(commutator_subgroup(G, caps)));
    kernels.push_back(lattice.frattini_indices());
    for (std::size_t k : maximal_ids)
      kernels.push_back(indices_of(normal_core(G, lattice.materialize(k), caps)));
    std::sort(kernels.begin(), kernels.end());
    kernels.erase(std::unique(kernels.begin(), kernels.end()), kernels.end());
  }
  report.normal_subgroups_considered = kernels.size();

  // Conditions 2 and 3. Maximal subgroups of a finite group always have
  // finite index, so condition 3 reduces to nilpotency of the quotients.
  report.cond2_quotients_in_mn = true;
  report.cond3_maximal_finite_index_and_finite_quotients_nilpotent = true;
  for (const auto &kernel : kernels) {
    Subgroup N = lattice.materialize_indices(kernel);
    if (N.is_whole_parent()) {
      continue; // the trivial quotient has the property vacuously
    }
    auto [Q, pi] = quotient(G, N, caps);
    if (!is_in_mn_direct(Q, caps)) {
      report.cond2_quotients_in_mn = false;
      if (!report.witnesses.quotient_not_in_mn_kernel)
        report.witnesses.quotient_not_in_mn_kernel =
            generator_list(N.generators());
    }
    if (!is_nilpotent(Q, caps).nilpotent) {
      report.cond3_maximal_finite_index_and_finite_quotients_nilpotent = false;
      if (!report.witnesses.non_nilpotent_quotient_kernel)
        report.witnesses.non_nilpotent_quotient_kernel =
            generator_list(N.generators());
    }
  }

  // Condition 4.
  report.cond4_commutator_in_frattini = true;
  {
    const ElementTable &table = lattice.table();
    std::vector<std::uint32_t> phi = lattice.frattini_indices();
    std::vector<bool> in_phi(table.size(), false);
    for (std::uint32_t i : phi)
      in_phi[i] = true;
    Subgroup derived = commutator_subgroup(G, caps);
    for (const Permutation &d : derived.elements(caps)) {
      if (!in_phi[table.index_of(d)]) {
        report.cond4_commutator_in_frattini = false;
        report.witnesses.commutator_outside_frattini = d.cycle_string();
        break;
      }
    }
  }

  return report;
}

bool generates(const PermGroup &G, const std::vector<Permutation> &S) {
  return subgroup_generated(G, S).order() == G.order();
}

bool normally_generates(const PermGroup &G, const std::vector<Permutation> &S) {
  return normal_closure(G, S).order() == G.order();
}

namespace {

WitnessReport report_for_set(const PermGroup &G,
                             std::vector<Permutation> witness_set) {
  WitnessReport report;
  report.group_label = G.name();
  report.group_order = G.order();
  report.generated_order = subgroup_generated(G, witness_set).order();
  report.normal_closure_order = normal_closure(G, witness_set).order();
  if (report.generated_order == report.group_order)
    report.verdict = WitnessVerdict::Generates;
  else if (report.normal_closure_order == report.group_order)
    report.verdict = WitnessVerdict::NormallyGeneratesButNotGenerates;
  else
    report.verdict = WitnessVerdict::NeitherGenerates;
  report.witness_set = std::move(witness_set);
  return report;
}

} // namespace

WitnessSearchResult witness_subset_search(const PermGroup &G,
                                       unsigned max_subset_size,
                                       bool exhaustive_all_sizes,
                                       const Caps &caps) {
  WitnessSearchResult result;
  result.exhaustive_all_sizes = exhaustive_all_sizes;
  result.max_subset_size = exhaustive_all_sizes ? 0 : max_subset_size;
  if (G.is_trivial())
    return result;

  if (exhaustive_all_sizes) {
    // A subset and the subgroup it generates share both their generated
    // subgroup and their normal closure, so searching proper subgroups
    // covers subsets of every size.
    SubgroupLattice lattice(G, caps);
    for (std::size_t k : lattice.proper_subgroup_ids()) {
      Subgroup H = lattice.materialize(k);
      if (normal_closure(G, H.generators()).order() == G.order()) {
        result.witness = report_for_set(G, H.generators());
        return result;
      }
    }
    return result;
  }

  if (G.order() > caps.lattice_cap)
    throw CapExceededError("lattice_cap", caps.lattice_cap,
                           "subset search on a group of order " +
                               to_decimal(G.order()));
  ElementTable table(G, caps);
  table.build_multiplication_table();
  const std::uint32_t n = table.size();
  const auto &conj = table.generator_conjugation();

  // Normal closure of a seed set in index space: close under generator
  // conjugation, then take the generated subgroup.
  auto normal_closure_size = [&](const std::vector<std::uint32_t> &seeds) {
    std::vector<bool> in(n, false);
    std::vector<std::uint32_t> closed;
    for (std::uint32_t s : seeds)
      if (!in[s]) {
        in[s] = true;
        closed.push_back(s);
      }
    for (std::size_t head = 0; head < closed.size(); ++head)
      for (const auto &c : conj) {
        std::uint32_t y = c[closed[head]];
        if (!in[y]) {
          in[y] = true;
          closed.push_back(y);
        }
      }
    return table.subgroup_closure(closed).size();
  };
  auto generated_size = [&](const std::vector<std::uint32_t> &seeds) {
    return table.subgroup_closure(seeds).size();
  };

  // Enumerate subsets by size, then lexicographically by element index, so
  // the reported witness is the first in a canonical order.
  std::vector<std::uint32_t> subset;
  auto exact = [&](auto &&self, unsigned remaining, std::uint32_t next) -> bool {
    if (remaining == 0)
      return normal_closure_size(subset) == n && generated_size(subset) < n;
    for (std::uint32_t x = next; x + remaining <= n; ++x) {
      subset.push_back(x);
      if (self(self, remaining - 1, x + 1))
        return true;
      subset.pop_back();
    }
    return false;
  };
  for (unsigned size = 1; size <= max_subset_size; ++size) {
    subset.clear();
    if (exact(exact, size, 0)) {
      std::vector<Permutation> witness;
      for (std::uint32_t i : subset)
        witness.push_back(table.at(i));
      result.witness = report_for_set(G, std::move(witness));
      return result;
    }
  }
  return result;
}

WitnessReport free_group_rank2_witness(const PermGroup &target,
                                       const Permutation &x_image,
                                       const Permutation &y_image) {
  if (!target.contains(x_image) || !target.contains(y_image))
    throw std::invalid_argument("witness images must lie in the target group");
  Permutation w1 = y_image.inverse() * x_image * y_image;
  Permutation w2 = x_image.inverse() * y_image * x_image;
  return report_for_set(target, {w1, w2});
}

WitnessReport free_product_dihedral_witness(unsigned m) {
  if (m < 3)
    throw std::invalid_argument("dihedral witness requires m >= 3");
  // Present the dihedral group by the two reflections a: i -> -i and
  // b: i -> -i-1 (mod m); a*b is the basic rotation, so <a, b> is the whole
  // group and (a, b) realizes the two order-2 free factors.
  std::vector<std::uint32_t> a_images(m), b_images(m);
  for (unsigned i = 0; i < m; ++i) {
    a_images[i] = (m - i) % m;
    b_images[i] = (2 * m - i - 1) % m;
  }
  PermGroup D(m,
              {Permutation(std::move(a_images)), Permutation(std::move(b_images))},
              "D" + std::to_string(2 * m));
  const Permutation &a = D.generators()[0];
  const Permutation &b = D.generators()[1];
  return free_group_rank2_witness(D, a, b);
}

bool p_subgroup_criterion_check(const PermGroup &G, unsigned p, const Caps &caps) {
  if (p < 2)
    throw std::invalid_argument("p must be prime");
  if (!is_power_of(G.order(), p))
    throw std::invalid_argument("group is not a p-group for p = " +
                                std::to_string(p));
  SubgroupLattice lattice(G, caps);
  bool g_in_mn = is_in_mn_direct(G, caps);
  BigInt bound = BigInt(p) * p;
  for (std::size_t k = 0; k < lattice.count(); ++k) {
    BigInt h_order = BigInt(lattice.member_indices(k).size());
    if (G.order() / h_order > bound)
      continue;
    Subgroup H = lattice.materialize(k);
    bool h_in_mn = is_in_mn_direct(H.group(), caps);
    if (h_in_mn && !g_in_mn)
      return false;
  }
  return true;
}

} // namespace mn
