#include "nilpair/subspace.hpp"

#include <algorithm>

namespace nilpair {

int rref(std::vector<Vec>& rows) {
  if (rows.empty()) return 0;
  const size_t cols = rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Rational inv = Rational(1) / rows[r][c];
    for (size_t j = c; j < cols; ++j) rows[r][j] *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Rational f = rows[i][c];
      for (size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return static_cast<int>(r);
}

SubspaceBasis row_space(std::vector<Vec> rows, int ambient) {
  rref(rows);
  SubspaceBasis b;
  b.ambient = ambient;
  b.vectors = std::move(rows);
  return b;
}

bool SubspaceBasis::contains(Vec v) const {
  // reduce v against the RREF rows
  for (const Vec& row : vectors) {
    size_t p = 0;
    while (p < row.size() && row[p].is_zero()) ++p;
    if (p == row.size()) continue;
    if (v[p].is_zero()) continue;
    Rational f = v[p];  // pivot is 1
    for (size_t j = p; j < v.size(); ++j) v[j] -= f * row[j];
  }
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

SubspaceBasis null_space(const std::vector<Vec>& rows, int cols) {
  std::vector<Vec> m = rows;
  rref(m);
  std::vector<int> pivot_col(m.size());
  std::vector<bool> is_pivot(cols, false);
  for (size_t i = 0; i < m.size(); ++i) {
    size_t p = 0;
    while (p < m[i].size() && m[i][p].is_zero()) ++p;
    pivot_col[i] = static_cast<int>(p);
    is_pivot[p] = true;
  }
  SubspaceBasis b;
  b.ambient = cols;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, Rational(0));
    v[free] = Rational(1);
    for (size_t i = 0; i < m.size(); ++i) v[pivot_col[i]] = -m[i][free];
    b.vectors.push_back(std::move(v));
  }
  rref(b.vectors);
  return b;
}

}  // namespace nilpair
