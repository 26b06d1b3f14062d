#ifndef NILPAIR_HOMOLOGY_HPP
#define NILPAIR_HOMOLOGY_HPP

#include <optional>

#include "nilpair/lie_algebra.hpp"
#include "nilpair/matrix.hpp"

namespace nilpair {

/// Boundary Lambda^2 L -> L: (e_i ^ e_j) -> [e_i, e_j].
/// Shape dim x C(dim, 2).
RationalMatrix d2_matrix(const LieAlgebra& L);

/// Boundary Lambda^3 L -> Lambda^2 L:
/// (x ^ y ^ z) -> [x,y] ^ z - [x,z] ^ y + [y,z] ^ x
/// on the lexicographic wedge basis. Shape C(dim, 2) x C(dim, 3).
RationalMatrix d3_matrix(const LieAlgebra& L);

/// dim of the multiplier: C(n,2) - rank(d2) - rank(d3), i.e. the dimension of
/// degree-2 homology of the exterior complex with trivial coefficients.
long multiplier_dim(const LieAlgebra& L);

/// Closed form for A(k): k(k-1)/2.
long multiplier_closed_abelian(long k);

/// Closed form for H(r) + A(j) (dim 1 derived subalgebra), total dim D = 2r+1+j:
/// (D-1)(D-2)/2 + 1 for r = 1, (D-1)(D-2)/2 - 1 for r >= 2.
long multiplier_closed_heisenberg(long r, long j);

/// Closed form for X + A(k): dimM(X) + k(k-1)/2 + k * dim(X/X^2).
long multiplier_closed_sum_with_abelian(long multiplier_x, long dim_x, long derived_x, long k);

}  // namespace nilpair

#endif
