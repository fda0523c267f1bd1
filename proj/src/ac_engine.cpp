#include "mn/ac_engine.hpp"

#include "mn/parallel.hpp"
#include "mn/series.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace mn {

namespace {

constexpr std::uint32_t kUnassigned = 0xffffffffu;

void check_move(const PermGroup &G, unsigned n, const ACMove &m) {
  switch (m.kind) {
  case MoveKind::RightMultiply:
  case MoveKind::LeftMultiply:
    if (m.i >= n || m.j >= n)
      throw std::invalid_argument("move index out of range");
    if (m.i == m.j)
      throw std::invalid_argument("multiply moves require i != j");
    break;
  case MoveKind::Invert:
    if (m.j >= n)
      throw std::invalid_argument("move index out of range");
    break;
  case MoveKind::Conjugate:
    if (m.j >= n)
      throw std::invalid_argument("move index out of range");
    if (m.conjugator_index >= G.generators().size())
      throw std::invalid_argument("conjugator index out of range");
    break;
  }
}

/// Dense tuple space over the ambient element table. Ranks are mixed-radix
/// with entry 0 most significant, so rank order is lexicographic order.
struct TupleSpace {
  ElementTable table;
  unsigned n;
  std::uint64_t total;

  TupleSpace(const PermGroup &G, unsigned length, const Caps &caps)
      : table(G, caps), n(length), total(1) {
    if (n == 0)
      throw std::invalid_argument("tuple length must be at least 1");
    BigInt states = 1;
    for (unsigned k = 0; k < n; ++k)
      states *= table.size();
    if (states > caps.tuple_space_cap)
      throw CapExceededError("tuple_space_cap", caps.tuple_space_cap,
                             to_decimal(BigInt(table.size())) + "^" +
                                 std::to_string(n) + " = " + to_decimal(states) +
                                 " tuple states");
    total = states.convert_to<std::uint64_t>();
    if (n >= 2)
      table.build_multiplication_table();
  }

  std::uint64_t rank(const std::vector<std::uint32_t> &key) const {
    std::uint64_t r = 0;
    for (std::uint32_t k : key)
      r = r * table.size() + k;
    return r;
  }

  std::vector<std::uint32_t> unrank(std::uint64_t r) const {
    std::vector<std::uint32_t> key(n);
    for (unsigned k = n; k-- > 0;) {
      key[k] = static_cast<std::uint32_t>(r % table.size());
      r /= table.size();
    }
    return key;
  }

  void apply(const ACMove &m, std::vector<std::uint32_t> &key) const {
    switch (m.kind) {
    case MoveKind::RightMultiply: {
      std::uint32_t operand = m.sign > 0 ? key[m.j] : table.inv(key[m.j]);
      key[m.i] = table.mul(key[m.i], operand);
      break;
    }
    case MoveKind::LeftMultiply: {
      std::uint32_t operand = m.sign > 0 ? key[m.j] : table.inv(key[m.j]);
      key[m.i] = table.mul(operand, key[m.i]);
      break;
    }
    case MoveKind::Invert:
      key[m.j] = table.inv(key[m.j]);
      break;
    case MoveKind::Conjugate:
      key[m.j] = table.generator_conjugation()[m.conjugator_index][key[m.j]];
      break;
    }
  }
};

/// Per-tuple filter predicate, memoized by entry multiset (the predicates
/// depend only on the set of entries).
class FilterOracle {
public:
  FilterOracle(const TupleSpace &space, const Caps &caps)
      : space_(space), caps_(caps) {}

  bool passes(TupleFilter filter, const std::vector<std::uint32_t> &key) {
    if (filter == TupleFilter::All)
      return true;
    std::vector<std::uint32_t> sorted(key);
    std::sort(sorted.begin(), sorted.end());
    auto &memo = filter == TupleFilter::NormallyGenerating ? memo_ng_ : memo_gen_;
    auto it = memo.find(sorted);
    if (it != memo.end())
      return it->second;
    bool value = filter == TupleFilter::NormallyGenerating
                     ? normally_generates_key(sorted)
                     : generates_key(sorted);
    memo.emplace(std::move(sorted), value);
    return value;
  }

private:
  bool generates_key(const std::vector<std::uint32_t> &sorted) {
    if (space_.table.has_multiplication_table())
      return space_.table.subgroup_closure(sorted).size() == space_.table.size();
    std::vector<Permutation> seeds;
    for (std::uint32_t i : sorted)
      seeds.push_back(space_.table.at(i));
    return subgroup_generated(space_.table.group(), seeds).order() ==
           space_.table.group().order();
  }

  bool normally_generates_key(const std::vector<std::uint32_t> &sorted) {
    if (!space_.table.has_multiplication_table()) {
      std::vector<Permutation> seeds;
      for (std::uint32_t i : sorted)
        seeds.push_back(space_.table.at(i));
      return normal_closure(space_.table.group(), seeds).order() ==
             space_.table.group().order();
    }
    const auto &conj = space_.table.generator_conjugation();
    std::vector<bool> in(space_.table.size(), false);
    std::vector<std::uint32_t> closed;
    for (std::uint32_t s : sorted)
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
    return space_.table.subgroup_closure(closed).size() == space_.table.size();
  }

  const TupleSpace &space_;
  const Caps &caps_;
  std::map<std::vector<std::uint32_t>, bool> memo_ng_;
  std::map<std::vector<std::uint32_t>, bool> memo_gen_;
};

/// Evaluates the filter for every tuple. The closure work runs per distinct
/// entry multiset, in parallel, then expands to tuples.
std::vector<std::uint8_t> filter_mask(const TupleSpace &space, TupleFilter filter,
                                      const Caps &caps) {
  std::vector<std::uint8_t> mask(space.total, 1);
  if (filter == TupleFilter::All)
    return mask;

  std::map<std::vector<std::uint32_t>, std::size_t> multiset_slot;
  std::vector<std::vector<std::uint32_t>> multisets;
  std::vector<std::size_t> slot_of_tuple(space.total);
  for (std::uint64_t r = 0; r < space.total; ++r) {
    std::vector<std::uint32_t> key = space.unrank(r);
    std::sort(key.begin(), key.end());
    auto [it, inserted] = multiset_slot.emplace(key, multisets.size());
    if (inserted)
      multisets.push_back(std::move(key));
    slot_of_tuple[r] = it->second;
  }

  std::vector<std::uint8_t> slot_value(multisets.size(), 0);
  parallel_for(multisets.size(), [&](std::size_t s) {
    FilterOracle oracle(space, caps);
    slot_value[s] = oracle.passes(filter, multisets[s]) ? 1 : 0;
  });

  for (std::uint64_t r = 0; r < space.total; ++r)
    mask[r] = slot_value[slot_of_tuple[r]];
  return mask;
}

struct Classified {
  std::vector<std::uint32_t> class_of; // dense by rank; kUnassigned = never reached
  std::vector<std::uint64_t> filtered; // ranks passing the filter, ascending
  std::uint32_t class_count = 0;
};

/// Orbit partition: breadth-first over moves from every filtered tuple.
Classified classify(const TupleSpace &space, const std::vector<std::uint8_t> &mask,
                    const std::vector<ACMove> &moves) {
  Classified result;
  result.class_of.assign(space.total, kUnassigned);
  for (std::uint64_t r = 0; r < space.total; ++r)
    if (mask[r])
      result.filtered.push_back(r);

  for (std::uint64_t root : result.filtered) {
    if (result.class_of[root] != kUnassigned)
      continue;
    std::uint32_t id = result.class_count++;
    std::deque<std::uint64_t> queue{root};
    result.class_of[root] = id;
    while (!queue.empty()) {
      std::uint64_t r = queue.front();
      queue.pop_front();
      std::vector<std::uint32_t> key = space.unrank(r);
      for (const ACMove &m : moves) {
        std::vector<std::uint32_t> next = key;
        space.apply(m, next);
        std::uint64_t nr = space.rank(next);
        if (result.class_of[nr] == kUnassigned) {
          result.class_of[nr] = id;
          queue.push_back(nr);
        }
      }
    }
  }
  return result;
}

} // namespace

std::vector<ACMove> all_moves(const PermGroup &G, unsigned n) {
  std::vector<ACMove> moves;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      if (i == j)
        continue;
      for (int sign : {1, -1})
        moves.push_back({MoveKind::RightMultiply, i, j, sign, 0});
    }
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      if (i == j)
        continue;
      for (int sign : {1, -1})
        moves.push_back({MoveKind::LeftMultiply, i, j, sign, 0});
    }
  for (unsigned j = 0; j < n; ++j)
    moves.push_back({MoveKind::Invert, 0, j, 1, 0});
  for (unsigned j = 0; j < n; ++j)
    for (unsigned s = 0; s < G.generators().size(); ++s)
      moves.push_back({MoveKind::Conjugate, 0, j, 1, s});
  return moves;
}

GroupTuple apply_move(const PermGroup &G, const GroupTuple &t, const ACMove &m) {
  check_move(G, static_cast<unsigned>(t.entries.size()), m);
  GroupTuple result = t;
  switch (m.kind) {
  case MoveKind::RightMultiply: {
    const Permutation &gj = t.entries[m.j];
    result.entries[m.i] =
        t.entries[m.i] * (m.sign > 0 ? gj : gj.inverse());
    break;
  }
  case MoveKind::LeftMultiply: {
    const Permutation &gj = t.entries[m.j];
    result.entries[m.i] =
        (m.sign > 0 ? gj : gj.inverse()) * t.entries[m.i];
    break;
  }
  case MoveKind::Invert:
    result.entries[m.j] = t.entries[m.j].inverse();
    break;
  case MoveKind::Conjugate: {
    const Permutation &s = G.generators()[m.conjugator_index];
    result.entries[m.j] = s.inverse() * t.entries[m.j] * s;
    break;
  }
  }
  return result;
}

std::vector<ACMove> inverse_moves(const PermGroup &G, const ACMove &m) {
  switch (m.kind) {
  case MoveKind::RightMultiply:
  case MoveKind::LeftMultiply: {
    ACMove inv = m;
    inv.sign = -m.sign;
    return {inv};
  }
  case MoveKind::Invert:
    return {m};
  case MoveKind::Conjugate: {
    // Conjugation by s has finite inner order k: s^k commutes with every
    // generator. Repeating the move k-1 more times undoes it.
    const Permutation &s = G.generators()[m.conjugator_index];
    Permutation power = s;
    unsigned k = 1;
    auto central = [&](const Permutation &p) {
      for (const Permutation &g : G.generators())
        if (p * g != g * p)
          return false;
      return true;
    };
    while (!central(power)) {
      power = power * s;
      ++k;
    }
    return std::vector<ACMove>(k - 1, m);
  }
  }
  return {};
}

std::vector<GroupTuple> neighbors(const PermGroup &G, const GroupTuple &t) {
  std::vector<GroupTuple> result;
  for (const ACMove &m : all_moves(G, static_cast<unsigned>(t.entries.size())))
    result.push_back(apply_move(G, t, m));
  return result;
}

std::set<GroupTuple> ac_orbit(const PermGroup &G, const GroupTuple &t,
                              std::uint64_t cap) {
  for (const Permutation &p : t.entries)
    if (p.degree() != G.degree())
      throw std::invalid_argument("tuple entry degree mismatch");
  std::vector<ACMove> moves = all_moves(G, static_cast<unsigned>(t.entries.size()));
  std::set<GroupTuple> orbit{t};
  std::deque<const GroupTuple *> queue{&*orbit.begin()};
  while (!queue.empty()) {
    const GroupTuple current = *queue.front();
    queue.pop_front();
    for (const ACMove &m : moves) {
      GroupTuple next = apply_move(G, current, m);
      auto [it, inserted] = orbit.insert(std::move(next));
      if (inserted) {
        if (orbit.size() > cap)
          throw CapExceededError("orbit_cap", cap, "move orbit exceeds cap");
        queue.push_back(&*it);
      }
    }
  }
  return orbit;
}

std::vector<std::vector<GroupTuple>> ac_classes(const PermGroup &G, unsigned n,
                                                TupleFilter filter,
                                                const Caps &caps) {
  TupleSpace space(G, n, caps);
  std::vector<std::uint8_t> mask = filter_mask(space, filter, caps);
  Classified classified = classify(space, mask, all_moves(G, n));

  std::vector<std::vector<GroupTuple>> classes(classified.class_count);
  for (std::uint64_t r : classified.filtered) {
    std::vector<std::uint32_t> key = space.unrank(r);
    GroupTuple t;
    for (std::uint32_t k : key)
      t.entries.push_back(space.table.at(k));
    classes[classified.class_of[r]].push_back(std::move(t));
  }
  return classes;
}

ACClassReport generalized_ac_check(const PermGroup &G, unsigned n,
                                   TupleFilter filter, const Caps &caps) {
  ACClassReport report;
  report.group_label = G.name();
  report.tuple_length = n;

  TupleSpace g_space(G, n, caps);
  std::vector<std::uint8_t> g_mask = filter_mask(g_space, filter, caps);
  Classified g_classes = classify(g_space, g_mask, all_moves(G, n));
  report.ac_class_count = g_classes.class_count;

  if (filter == TupleFilter::NormallyGenerating) {
    report.normally_generating_count = g_classes.filtered.size();
  } else {
    std::vector<std::uint8_t> ng_mask =
        filter_mask(g_space, TupleFilter::NormallyGenerating, caps);
    report.normally_generating_count = 0;
    for (std::uint8_t b : ng_mask)
      report.normally_generating_count += b;
  }

  // The abelianized engine: same moves over G/[G,G]; conjugation there is
  // the identity map and the designated conjugators are the generator
  // images, both automatic for the quotient group.
  auto [ab, to_ab] = abelianization(G, caps);
  TupleSpace q_space(ab, n, caps);
  std::vector<std::uint8_t> q_mask = filter_mask(q_space, filter, caps);
  Classified q_classes = classify(q_space, q_mask, all_moves(ab, n));
  report.abelianized_class_count = q_classes.class_count;

  // Entrywise images of tuples under the projection.
  std::vector<std::uint32_t> element_image(g_space.table.size());
  for (std::uint32_t i = 0; i < g_space.table.size(); ++i)
    element_image[i] = q_space.table.index_of(to_ab.apply(g_space.table.at(i)));

  report.refinement_ok = true;
  std::vector<std::uint32_t> induced(g_classes.class_count, kUnassigned);
  for (std::uint64_t r : g_classes.filtered) {
    std::vector<std::uint32_t> key = g_space.unrank(r);
    for (std::uint32_t &k : key)
      k = element_image[k];
    std::uint32_t q_class = q_classes.class_of[q_space.rank(key)];
    std::uint32_t g_class = g_classes.class_of[r];
    if (induced[g_class] == kUnassigned)
      induced[g_class] = q_class;
    else if (induced[g_class] != q_class)
      report.refinement_ok = false;
  }

  bool injective = true;
  std::vector<bool> hit(q_classes.class_count, false);
  for (std::uint32_t target : induced) {
    if (target == kUnassigned)
      continue;
    if (hit[target])
      injective = false;
    hit[target] = true;
  }
  bool surjective =
      std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  report.bijective = report.refinement_ok && injective && surjective;
  return report;
}

} // namespace mn
