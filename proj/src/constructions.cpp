#include "mn/constructions.hpp"

#include <numeric>
#include <stdexcept>

namespace mn {
namespace groups {

namespace {

Permutation rotation(unsigned m) {
  std::vector<std::uint32_t> images(m);
  for (unsigned i = 0; i < m; ++i)
    images[i] = (i + 1) % m;
  return Permutation(std::move(images));
}

bool is_prime(unsigned p) {
  if (p < 2)
    return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

} // namespace

PermGroup cyclic(unsigned n) {
  if (n == 0)
    throw std::invalid_argument("cyclic group order must be positive");
  if (n == 1)
    return PermGroup(1, {Permutation(1)}, "C1");
  return PermGroup(n, {rotation(n)}, "C" + std::to_string(n));
}

PermGroup dihedral(unsigned m) {
  if (m == 0)
    throw std::invalid_argument("dihedral parameter must be positive");
  std::string name = "D" + std::to_string(2 * m);
  if (m == 1)
    return PermGroup(2, {Permutation::from_cycles(2, {{0, 1}})}, name);
  if (m == 2)
    return PermGroup(4,
                     {Permutation::from_cycles(4, {{0, 1}}),
                      Permutation::from_cycles(4, {{2, 3}})},
                     name);
  std::vector<std::uint32_t> reflection(m);
  for (unsigned i = 0; i < m; ++i)
    reflection[i] = (m - i) % m;
  return PermGroup(m, {rotation(m), Permutation(std::move(reflection))}, name);
}

PermGroup symmetric(unsigned n) {
  if (n == 0)
    throw std::invalid_argument("symmetric degree must be positive");
  std::string name = "S" + std::to_string(n);
  if (n == 1)
    return PermGroup(1, {Permutation(1)}, name);
  if (n == 2)
    return PermGroup(2, {Permutation::from_cycles(2, {{0, 1}})}, name);
  return PermGroup(n,
                   {Permutation::from_cycles(n, {{0, 1}}), rotation(n)},
                   name);
}

PermGroup alternating(unsigned n) {
  if (n == 0)
    throw std::invalid_argument("alternating degree must be positive");
  std::string name = "A" + std::to_string(n);
  if (n <= 2)
    return PermGroup(std::max(1u, n), {Permutation(std::max(1u, n))}, name);
  std::vector<Permutation> gens;
  for (unsigned i = 2; i < n; ++i)
    gens.push_back(Permutation::from_cycles(n, {{0, 1, i}}));
  return PermGroup(n, std::move(gens), name);
}

PermGroup quaternion() {
  // Regular representation from quaternion-unit arithmetic; element order
  // is 1, -1, i, -i, j, -j, k, -k.
  //
  // Unit multiplication encoded as (axis, sign) with axes 0=1, 1=i, 2=j, 3=k.
  auto mul = [](unsigned a, unsigned b) -> unsigned {
    static const int axis[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {
        {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    // decode: element e = 2*axis + (negative ? 1 : 0)
    unsigned ax_a = a >> 1, ax_b = b >> 1;
    int s = sign[ax_a][ax_b] * (a & 1 ? -1 : 1) * (b & 1 ? -1 : 1);
    return 2 * static_cast<unsigned>(axis[ax_a][ax_b]) + (s < 0 ? 1u : 0u);
  };
  // sign table check: i*j=k, j*i=-k, i*i=-1, etc.
  auto left_mul_perm = [&](unsigned g) {
    std::vector<std::uint32_t> images(8);
    for (unsigned h = 0; h < 8; ++h)
      images[h] = mul(g, h);
    return Permutation(std::move(images));
  };
  unsigned i_elem = 2, j_elem = 4;
  return PermGroup(8, {left_mul_perm(i_elem), left_mul_perm(j_elem)}, "Q8");
}

PermGroup klein() {
  return PermGroup(4,
                   {Permutation::from_cycles(4, {{0, 1}}),
                    Permutation::from_cycles(4, {{2, 3}})},
                   "V4");
}

PermGroup heisenberg(unsigned p) {
  if (!is_prime(p))
    throw std::invalid_argument("heisenberg parameter must be prime");
  unsigned n = p * p * p;
  // Points are column vectors (x, y, z) in F_p^3, index x*p^2 + y*p + z.
  // x-generator: (x,y,z) -> (x, y+x... ) -- use matrices E+e12 and E+e23
  // acting by left multiplication.
  auto apply12 = [&](unsigned v) {
    unsigned x = v / (p * p), y = (v / p) % p, z = v % p;
    return ((x + y) % p) * p * p + y * p + z; // row1 += row2
  };
  auto apply23 = [&](unsigned v) {
    unsigned x = v / (p * p), y = (v / p) % p, z = v % p;
    return x * p * p + ((y + z) % p) * p + z; // row2 += row3
  };
  std::vector<std::uint32_t> a(n), b(n);
  for (unsigned v = 0; v < n; ++v) {
    a[v] = apply12(v);
    b[v] = apply23(v);
  }
  return PermGroup(n, {Permutation(std::move(a)), Permutation(std::move(b))},
                   "Heis" + std::to_string(p));
}

PermGroup elementary_abelian(unsigned p, unsigned k) {
  if (!is_prime(p))
    throw std::invalid_argument("elementary-abelian parameter must be prime");
  if (k == 0)
    throw std::invalid_argument("elementary-abelian rank must be positive");
  unsigned degree = p * k;
  std::vector<Permutation> gens;
  for (unsigned c = 0; c < k; ++c) {
    std::vector<std::uint32_t> images(degree);
    std::iota(images.begin(), images.end(), 0u);
    for (unsigned i = 0; i < p; ++i)
      images[c * p + i] = c * p + (i + 1) % p;
    gens.push_back(Permutation(std::move(images)));
  }
  return PermGroup(degree, std::move(gens),
                   "E" + std::to_string(p) + "^" + std::to_string(k));
}

} // namespace groups
} // namespace mn
