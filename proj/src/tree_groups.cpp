#include "mn/tree_groups.hpp"

#include "mn/homomorphism.hpp"
#include "mn/series.hpp"

#include <stdexcept>

namespace mn {

TreeAutomaton TreeAutomaton::grigorchuk(const std::string &omega_prefix) {
  if (omega_prefix.empty())
    throw std::invalid_argument("omega prefix must be nonempty");
  for (char c : omega_prefix)
    if (c != '0' && c != '1' && c != '2')
      throw std::invalid_argument("omega prefix must be over {0,1,2}");

  TreeAutomaton automaton;
  automaton.d_ = 2;
  automaton.label_ = "grigorchuk[" + omega_prefix + "]";
  automaton.max_level_ = static_cast<unsigned>(omega_prefix.size());

  const unsigned L = automaton.max_level_;
  automaton.states_.push_back({"1", {0, 1}, {0, 0}});
  automaton.states_.push_back({"a", {1, 0}, {0, 0}});
  // b, c, d at depth t occupy indices 2+3t, 3+3t, 4+3t. The depth-(L-1)
  // tail sections are never dereferenced for levels within the prefix.
  auto family_index = [&](unsigned member, unsigned depth) -> std::uint32_t {
    if (depth >= L)
      return 0;
    return 2 + 3 * depth + member;
  };
  for (unsigned t = 0; t < L; ++t) {
    unsigned letter = static_cast<unsigned>(omega_prefix[t] - '0');
    const char *names[3] = {"b", "c", "d"};
    for (unsigned member = 0; member < 3; ++member) {
      // letter 0 kills d, letter 1 kills c, letter 2 kills b
      bool killed = (letter == 0 && member == 2) ||
                    (letter == 1 && member == 1) ||
                    (letter == 2 && member == 0);
      std::uint32_t first = killed ? 0u : 1u;
      automaton.states_.push_back(
          {std::string(names[member]) + (t ? "@" + std::to_string(t) : ""),
           {0, 1},
           {first, family_index(member, t + 1)}});
    }
  }
  automaton.generator_states_ = {1, family_index(0, 0), family_index(1, 0),
                                 family_index(2, 0)};
  return automaton;
}

std::string TreeAutomaton::first_grigorchuk_omega(unsigned length) {
  std::string omega;
  omega.reserve(length);
  for (unsigned i = 0; i < length; ++i)
    omega.push_back(static_cast<char>('0' + i % 3));
  return omega;
}

TreeAutomaton TreeAutomaton::gupta_sidki(unsigned p) {
  if (p != 3 && p != 5 && p != 7)
    throw std::invalid_argument("gupta-sidki parameter must be 3, 5 or 7");
  TreeAutomaton automaton;
  automaton.d_ = p;
  automaton.label_ = "gupta-sidki[" + std::to_string(p) + "]";

  std::vector<std::uint32_t> identity_perm(p), cycle(p), cycle_inv(p);
  std::vector<std::uint32_t> trivial_sections(p, 0);
  for (unsigned i = 0; i < p; ++i) {
    identity_perm[i] = i;
    cycle[i] = (i + 1) % p;
    cycle_inv[i] = (i + p - 1) % p;
  }
  automaton.states_.push_back({"1", identity_perm, trivial_sections});
  automaton.states_.push_back({"a", cycle, trivial_sections});
  automaton.states_.push_back({"a'", cycle_inv, trivial_sections});
  std::vector<std::uint32_t> t_sections(p, 0);
  t_sections[0] = 1;     // a
  t_sections[1] = 2;     // a^-1
  t_sections[p - 1] = 3; // t itself
  automaton.states_.push_back({"t", identity_perm, t_sections});
  automaton.generator_states_ = {1, 3};
  return automaton;
}

TreeAutomaton TreeAutomaton::basilica() {
  TreeAutomaton automaton;
  automaton.d_ = 2;
  automaton.label_ = "basilica";
  automaton.states_.push_back({"1", {0, 1}, {0, 0}});
  automaton.states_.push_back({"a", {0, 1}, {0, 2}}); // a = (1, b)
  automaton.states_.push_back({"b", {1, 0}, {0, 1}}); // b = (1, a) * swap
  automaton.generator_states_ = {1, 2};
  return automaton;
}

std::uint32_t TreeAutomaton::state_index(const std::string &name) const {
  for (std::uint32_t i = 0; i < states_.size(); ++i)
    if (states_[i].name == name)
      return i;
  throw std::invalid_argument("unknown automaton state: " + name);
}

Permutation TreeAutomaton::level_permutation(std::uint32_t state,
                                             unsigned n) const {
  if (state >= states_.size())
    throw std::invalid_argument("automaton state index out of range");
  if (n == 0 || n > max_level_)
    throw std::invalid_argument("level " + std::to_string(n) +
                                " outside this automaton's range (omega prefix "
                                "too short or level zero)");
  BigInt degree = 1;
  for (unsigned k = 0; k < n; ++k)
    degree *= d_;
  if (degree > global_caps().quotient_degree_cap)
    throw CapExceededError("quotient_degree_cap",
                           global_caps().quotient_degree_cap,
                           "level degree " + to_decimal(degree));
  {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto it = memo_->table.find({state, n});
    if (it != memo_->table.end())
      return it->second;
  }
  Permutation result = evaluate(state, n);
  std::lock_guard<std::mutex> lock(memo_->mutex);
  return memo_->table.emplace(std::make_pair(state, n), std::move(result))
      .first->second;
}

Permutation TreeAutomaton::level_permutation(const std::string &state_name,
                                             unsigned n) const {
  return level_permutation(state_index(state_name), n);
}

Permutation TreeAutomaton::evaluate(std::uint32_t state, unsigned n) const {
  const State &s = states_[state];
  if (n == 1)
    return Permutation(std::vector<std::uint32_t>(s.root_perm));
  if (state == 0) {
    std::uint64_t block = 1;
    for (unsigned k = 0; k < n; ++k)
      block *= d_;
    return Permutation(static_cast<unsigned>(block));
  }
  std::uint64_t block = 1;
  for (unsigned k = 0; k + 1 < n; ++k)
    block *= d_;
  std::vector<std::uint32_t> images(block * d_);
  for (unsigned y = 0; y < d_; ++y) {
    Permutation inner = level_permutation(s.sections[y], n - 1);
    std::uint64_t src = static_cast<std::uint64_t>(y) * block;
    std::uint64_t dst = static_cast<std::uint64_t>(s.root_perm[y]) * block;
    for (std::uint64_t k = 0; k < block; ++k)
      images[src + k] = static_cast<std::uint32_t>(dst + inner[static_cast<std::uint32_t>(k)]);
  }
  return Permutation(std::move(images));
}

PermGroup TreeAutomaton::level_quotient(unsigned n, const Caps &caps) const {
  if (n == 0)
    throw std::invalid_argument("level must be at least 1");
  BigInt degree = 1;
  for (unsigned k = 0; k < n; ++k)
    degree *= d_;
  if (degree > caps.quotient_degree_cap)
    throw CapExceededError("quotient_degree_cap", caps.quotient_degree_cap,
                           "level degree " + to_decimal(degree));
  std::vector<Permutation> gens;
  for (std::uint32_t s : generator_states_)
    gens.push_back(level_permutation(s, n));
  return PermGroup(degree.convert_to<unsigned>(), std::move(gens),
                   label_ + " level " + std::to_string(n));
}

bool p_group_check(const PermGroup &G, unsigned p, const Caps &caps) {
  if (p < 2)
    throw std::invalid_argument("p must be prime");
  bool power = is_power_of(G.order(), p);
  if (power && G.order() > 1 && G.order() <= caps.enumeration_cap) {
    if (!is_nilpotent(G, caps).nilpotent)
      throw std::logic_error(
          "finite p-group reported non-nilpotent; engine inconsistency");
  }
  return power;
}

DihedralCheck is_dihedral(const PermGroup &G, const Caps &caps) {
  DihedralCheck result;
  BigInt order = G.order();
  if (order == 1) {
    result.dihedral = true;
    result.degenerate = true;
    return result;
  }
  if (order % 2 != 0 || order > caps.enumeration_cap)
    return result;
  std::uint64_t m = (order / 2).convert_to<std::uint64_t>();
  const auto &elements = G.elements(caps);
  for (const Permutation &r : elements) {
    if (r.order() != m)
      continue;
    // the cyclic candidate <r>, automatically normal at index 2
    std::set<Permutation> cyclic;
    Permutation power(G.degree());
    for (std::uint64_t k = 0; k < m; ++k) {
      cyclic.insert(power);
      power = power * r;
    }
    Permutation r_inv = r.inverse();
    for (const Permutation &b : elements) {
      if (cyclic.count(b))
        continue;
      if (!(b * b).is_identity())
        continue;
      if (b.inverse() * r * b == r_inv) {
        result.dihedral = true;
        result.degenerate = order <= 4;
        result.cyclic_index2 =
            Subgroup::from_elements(G, std::move(cyclic), "rotations");
        return result;
      }
    }
  }
  return result;
}

DihedralReport basilica_dinfty_probe(unsigned level, const Caps &caps) {
  TreeAutomaton automaton = TreeAutomaton::basilica();
  PermGroup B = automaton.level_quotient(level, caps);
  Permutation a = automaton.level_permutation("a", level);
  Permutation b = automaton.level_permutation("b", level);

  Permutation b_squared = b * b;
  Permutation abab = a * b * a * b;
  Subgroup N = normal_closure(B, {b_squared, abab});
  auto [Q, pi] = quotient(B, N, caps);

  DihedralReport report;
  report.level = level;
  report.quotient_order = Q.order();
  DihedralCheck check = is_dihedral(Q, caps);
  report.is_dihedral = check.dihedral;
  report.degenerate = check.degenerate;
  if (check.cyclic_index2)
    report.cyclic_index2_order = check.cyclic_index2->order();
  else if (check.dihedral)
    report.cyclic_index2_order = report.quotient_order / 2;
  return report;
}

} // namespace mn
