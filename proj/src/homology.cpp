#include "nilpair/homology.hpp"

#include <stdexcept>

#include "nilpair/exterior.hpp"

namespace nilpair {

std::array<int, 2> ExteriorBasis::pair_at(long idx) const {
  for (int i = 0; i < n_; ++i) {
    long block = n_ - i - 1;
    if (idx < block) return {i, i + 1 + static_cast<int>(idx)};
    idx -= block;
  }
  throw std::out_of_range("ExteriorBasis: pair index");
}

std::array<int, 3> ExteriorBasis::triple_at(long idx) const {
  for (int i = 0; i < n_; ++i) {
    long block = static_cast<long>(n_ - i - 1) * (n_ - i - 2) / 2;
    if (idx < block) {
      auto [j, k] = ExteriorBasis(n_ - i - 1).pair_at(idx);
      return {i, j + i + 1, k + i + 1};
    }
    idx -= block;
  }
  throw std::out_of_range("ExteriorBasis: triple index");
}

RationalMatrix d2_matrix(const LieAlgebra& L) {
  const int n = L.dim();
  ExteriorBasis ext(n);
  RationalMatrix m(n, ext.size2());
  for (const auto& [pair, coeffs] : L.sc().stored()) {
    long col = ext.index2(pair.first, pair.second);
    for (const auto& [k, c] : coeffs) m.set(k, col, c);
  }
  return m;
}

RationalMatrix d3_matrix(const LieAlgebra& L) {
  const int n = L.dim();
  ExteriorBasis ext(n);
  RationalMatrix m(ext.size2(), ext.size3());

  // contribution of sign * [e_a, e_b] ^ e_c to one column
  auto put = [&](long col, int sign, int a, int b, int c) {
    for (const auto& [t, coeff] : L.sc().bracket_of_basis(a, b)) {
      auto [row, wsign] = ext.wedge2(t, c);
      if (row < 0) continue;
      m.add(row, col, Rational(sign * wsign) * coeff);
    }
  };

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        long col = ext.index3(i, j, k);
        put(col, +1, i, j, k);
        put(col, -1, i, k, j);
        put(col, +1, j, k, i);
      }
  return m;
}

long multiplier_dim(const LieAlgebra& L) {
  ExteriorBasis ext(L.dim());
  return ext.size2() - d2_matrix(L).rank() - d3_matrix(L).rank();
}

long multiplier_closed_abelian(long k) { return k * (k - 1) / 2; }

long multiplier_closed_heisenberg(long r, long j) {
  if (r < 1) throw std::invalid_argument("closed form: need r >= 1");
  long total = 2 * r + 1 + j;
  long base = (total - 1) * (total - 2) / 2;
  return r == 1 ? base + 1 : base - 1;
}

long multiplier_closed_sum_with_abelian(long multiplier_x, long dim_x, long derived_x, long k) {
  return multiplier_x + k * (k - 1) / 2 + k * (dim_x - derived_x);
}

}  // namespace nilpair
