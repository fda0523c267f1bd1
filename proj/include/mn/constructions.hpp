#pragma once

#include "mn/perm_group.hpp"

namespace mn {
namespace groups {

/// C_n acting on n points (degree 1 for n = 1).
PermGroup cyclic(unsigned n);

/// Dihedral group of order 2m: rotation + reflection on m points for
/// m >= 3; faithful low-degree actions for m = 1, 2.
PermGroup dihedral(unsigned m);

/// S_n on n points.
PermGroup symmetric(unsigned n);

/// A_n on n points.
PermGroup alternating(unsigned n);

/// Q8 in its regular representation on 8 points, generators i and j.
PermGroup quaternion();

/// C2 x C2 on 4 points.
PermGroup klein();

/// Upper unitriangular 3x3 matrices over F_p acting on F_p^3 (degree p^3,
/// order p^3).
PermGroup heisenberg(unsigned p);

/// (C_p)^k on p*k points.
PermGroup elementary_abelian(unsigned p, unsigned k);

} // namespace groups
} // namespace mn
