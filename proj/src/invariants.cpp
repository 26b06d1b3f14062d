#include "nilpair/invariants.hpp"

#include <stdexcept>

namespace nilpair {

SplitPair make_split_pair(LieAlgebra N, LieAlgebra K) {
  SplitPair p;
  p.n = N.dim();
  p.m = K.dim();
  if (p.n < 1) throw std::invalid_argument("SplitPair: N must be nonzero");
  if (!N.is_nilpotent() || !K.is_nilpotent())
    throw std::invalid_argument("SplitPair: both summands must be nilpotent");
  p.d = N.derived_subalgebra().rank();
  p.c = K.derived_subalgebra().rank();
  // nilpotency forces codimension >= 2 for a nonzero derived subalgebra
  if (p.d != 0 && p.d > p.n - 2) throw std::logic_error("SplitPair: dim N^2 > dim N - 2");
  if (p.c != 0 && p.c > p.m - 2) throw std::logic_error("SplitPair: dim K^2 > dim K - 2");
  p.N = std::move(N);
  p.K = std::move(K);
  return p;
}

long s_invariant(const LieAlgebra& L) {
  const long n = L.dim();
  if (n < 1) throw std::invalid_argument("s_invariant: need dim >= 1");
  return (n - 1) * (n - 2) / 2 + 1 - multiplier_dim(L);
}

long t_invariant(const LieAlgebra& L) {
  const long n = L.dim();
  if (n < 1) throw std::invalid_argument("t_invariant: need dim >= 1");
  return n * (n - 1) / 2 - multiplier_dim(L);
}

InvariantRecord invariants_of(const LieAlgebra& L) {
  const long n = L.dim();
  InvariantRecord rec;
  rec.multiplier = multiplier_dim(L);
  rec.t = n * (n - 1) / 2 - rec.multiplier;
  rec.s = (n - 1) * (n - 2) / 2 + 1 - rec.multiplier;
  return rec;
}

long pair_multiplier_dim(const SplitPair& p) {
  return multiplier_dim(p.N) + static_cast<long>(p.n - p.d) * (p.m - p.c);
}

long pair_s(const SplitPair& p) {
  const long n = p.n, m = p.m;
  return (n - 1) * (n - 2) / 2 + 1 + (n - 1) * m - pair_multiplier_dim(p);
}

long pair_t(const SplitPair& p) {
  const long n = p.n, m = p.m;
  return n * (n + 2 * m - 1) / 2 - pair_multiplier_dim(p);
}

bool s_lower_bound_check(const SplitPair& p) {
  return pair_s(p) - s_invariant(p.N) >= static_cast<long>(p.m) * (p.d - 1);
}

InvariantRecord pair_invariants_of(const SplitPair& p) {
  InvariantRecord rec;
  rec.multiplier = pair_multiplier_dim(p);
  rec.s = pair_s(p);
  rec.t = pair_t(p);
  return rec;
}

}  // namespace nilpair
