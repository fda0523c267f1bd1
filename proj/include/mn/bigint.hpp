#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace mn {

// Group orders of tree-level quotients outgrow every native integer type,
// so orders are exact arbitrary-precision integers throughout.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt &n) { return n.str(); }

/// True iff n is a (possibly zeroth) power of the prime p.
inline bool is_power_of(BigInt n, const BigInt &p) {
  if (n <= 0)
    return false;
  while (n % p == 0)
    n /= p;
  return n == 1;
}

} // namespace mn
