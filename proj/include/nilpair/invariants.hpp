#ifndef NILPAIR_INVARIANTS_HPP
#define NILPAIR_INVARIANTS_HPP

#include "nilpair/homology.hpp"
#include "nilpair/lie_algebra.hpp"

namespace nilpair {

/// Split pair L = N (+) K with the dimensions the pair formulas use cached:
/// n = dim N, m = dim K, d = dim N^2, c = dim K^2.
struct SplitPair {
  LieAlgebra N;
  LieAlgebra K;
  int n = 0, m = 0, d = 0, c = 0;
};

/// Builds a SplitPair and checks both summands are nilpotent.
SplitPair make_split_pair(LieAlgebra N, LieAlgebra K);

struct InvariantRecord {
  long multiplier = 0;
  long t = 0;
  long s = 0;
};

/// s(L) = (n-1)(n-2)/2 + 1 - dim M(L).
long s_invariant(const LieAlgebra& L);

/// t(L) = n(n-1)/2 - dim M(L); satisfies t - s = n - 2.
long t_invariant(const LieAlgebra& L);

InvariantRecord invariants_of(const LieAlgebra& L);

/// dim M(N, L) = dim M(N) + (n - d)(m - c) for the split pair L = N (+) K.
long pair_multiplier_dim(const SplitPair& p);

/// s(N, L) = (n-1)(n-2)/2 + 1 + (n-1)m - dim M(N, L).
long pair_s(const SplitPair& p);

/// t(N, L) = n(n+2m-1)/2 - dim M(N, L); satisfies t - s = n + m - 2.
long pair_t(const SplitPair& p);

/// Lower bound s(N,L) - s(N) >= m (d - 1), asserted as a sanity check.
bool s_lower_bound_check(const SplitPair& p);

InvariantRecord pair_invariants_of(const SplitPair& p);

}  // namespace nilpair

#endif
