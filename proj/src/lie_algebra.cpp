#include "nilpair/lie_algebra.hpp"

#include <stdexcept>

namespace nilpair {

namespace {

Vec dense(const SparseVec& s, int dim) {
  Vec v(dim, Rational(0));
  for (const auto& [k, c] : s) v[k] = c;
  return v;
}

bool all_zero(const Vec& v) {
  for (const Rational& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

LieAlgebra::LieAlgebra(StructureConstants sc, std::string label)
    : sc_(std::move(sc)), label_(std::move(label)) {}

LieAlgebra LieAlgebra::with_label(std::string label) const {
  LieAlgebra out = *this;
  out.label_ = std::move(label);
  return out;
}

Vec LieAlgebra::basis_vector(int i) const {
  if (i < 0 || i >= dim()) throw std::out_of_range("LieAlgebra: basis index");
  Vec v(dim(), Rational(0));
  v[i] = Rational(1);
  return v;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  const int n = dim();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw std::invalid_argument("LieAlgebra: bracket operands must have length dim");
  Vec out(n, Rational(0));
  for (const auto& [pair, coeffs] : sc_.stored()) {
    auto [i, j] = pair;
    Rational w = x[i] * y[j] - x[j] * y[i];
    if (w.is_zero()) continue;
    for (const auto& [k, c] : coeffs) out[k] += w * c;
  }
  return out;
}

ValidationReport LieAlgebra::validate() const {
  ValidationReport report;
  const int n = dim();
  std::vector<Vec> basis_brackets;  // [e_i, e_j] cached densely, index2 order
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      basis_brackets.push_back(dense(sc_.bracket_of_basis(i, j), n));

  auto pair_index = [n](int i, int j) {
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
  };

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec jac = bracket(basis_brackets[pair_index(i, j)], basis_vector(k));
        Vec t2 = bracket(basis_brackets[pair_index(j, k)], basis_vector(i));
        Vec t3 = bracket(basis_brackets[pair_index(i, k)], basis_vector(j));
        for (int c = 0; c < n; ++c) jac[c] += t2[c] - t3[c];  // [[e_k,e_i],e_j] = -[[e_i,e_k],e_j]
        if (!all_zero(jac))
          report.violations.push_back({i + 1, j + 1, k + 1, std::move(jac)});
      }
  return report;
}

SubspaceBasis LieAlgebra::derived_subalgebra() const {
  std::vector<Vec> rows;
  for (const auto& [pair, coeffs] : sc_.stored()) rows.push_back(dense(coeffs, dim()));
  return row_space(std::move(rows), dim());
}

SubspaceBasis LieAlgebra::center() const {
  const int n = dim();
  // rows indexed by (j, k): coefficient of e_k in [x, e_j], as a function of x
  std::vector<Vec> rows;
  for (int j = 0; j < n; ++j) {
    std::vector<Vec> block(n, Vec(n, Rational(0)));
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      for (const auto& [k, c] : sc_.bracket_of_basis(i, j)) block[k][i] = c;
    }
    for (auto& row : block)
      if (!all_zero(row)) rows.push_back(std::move(row));
  }
  return null_space(rows, n);
}

std::vector<SubspaceBasis> LieAlgebra::lower_central_series() const {
  const int n = dim();
  std::vector<SubspaceBasis> series;
  std::vector<Vec> full;
  for (int i = 0; i < n; ++i) full.push_back(basis_vector(i));
  series.push_back(row_space(std::move(full), n));
  while (true) {
    const SubspaceBasis& prev = series.back();
    if (prev.rank() == 0) break;
    std::vector<Vec> rows;
    for (const Vec& v : prev.vectors)
      for (int i = 0; i < n; ++i) {
        Vec w = bracket(basis_vector(i), v);
        if (!all_zero(w)) rows.push_back(std::move(w));
      }
    SubspaceBasis next = row_space(std::move(rows), n);
    bool stable = next.rank() == prev.rank();
    series.push_back(std::move(next));
    if (stable || series.back().rank() == 0) break;
  }
  return series;
}

NilpotencyInfo LieAlgebra::nilpotency() const {
  auto series = lower_central_series();
  NilpotencyInfo info;
  info.nilpotent = series.back().rank() == 0;
  // series = {L^1, ..., L^{c+1} = 0}: class is c
  info.nil_class = info.nilpotent ? static_cast<int>(series.size()) - 1 : 0;
  return info;
}

LieAlgebra LieAlgebra::relabel(const std::vector<int>& perm) const {
  const int n = dim();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("relabel: permutation size mismatch");
  StructureConstants out(n);
  for (const auto& [pair, coeffs] : sc_.stored()) {
    int i = perm[pair.first], j = perm[pair.second];
    bool flip = i > j;
    if (flip) std::swap(i, j);
    for (const auto& [k, c] : coeffs)
      out.add_coefficient(i, j, perm[k], flip ? -c : c);
  }
  return LieAlgebra(std::move(out), label_);
}

LieAlgebra abelian(int k) {
  if (k < 0) throw std::invalid_argument("abelian: negative dimension");
  return LieAlgebra(StructureConstants(k), "A(" + std::to_string(k) + ")");
}

LieAlgebra heisenberg(int r) {
  if (r < 1) throw std::invalid_argument("heisenberg: need r >= 1");
  StructureConstants sc(2 * r + 1);
  for (int i = 0; i < r; ++i) sc.set_bracket(2 * i, 2 * i + 1, {{2 * r, Rational(1)}});
  return LieAlgebra(std::move(sc), "H(" + std::to_string(r) + ")");
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const int na = a.dim(), nb = b.dim();
  StructureConstants sc(na + nb);
  for (const auto& [pair, coeffs] : a.sc().stored()) sc.set_bracket(pair.first, pair.second, coeffs);
  for (const auto& [pair, coeffs] : b.sc().stored()) {
    SparseVec shifted;
    for (const auto& [k, c] : coeffs) shifted[k + na] = c;
    sc.set_bracket(pair.first + na, pair.second + na, std::move(shifted));
  }
  std::string label;
  if (!a.label().empty() && !b.label().empty()) label = a.label() + "+" + b.label();
  return LieAlgebra(std::move(sc), std::move(label));
}

LieAlgebra central_product(const LieAlgebra& a, const LieAlgebra& b,
                           const std::vector<std::pair<Vec, Vec>>& ident) {
  const int na = a.dim(), nb = b.dim(), total = na + nb;
  SubspaceBasis za = a.center(), zb = b.center();
  std::vector<Vec> left, right, glue;
  for (const auto& [u, v] : ident) {
    if (static_cast<int>(u.size()) != na || static_cast<int>(v.size()) != nb)
      throw std::invalid_argument("central_product: identification vector length mismatch");
    if (!za.contains(u)) throw std::invalid_argument("central_product: left vector not central");
    if (!zb.contains(v)) throw std::invalid_argument("central_product: right vector not central");
    left.push_back(u);
    right.push_back(v);
    Vec w(total, Rational(0));
    for (int i = 0; i < na; ++i) w[i] = u[i];
    for (int i = 0; i < nb; ++i) w[na + i] = -v[i];
    glue.push_back(std::move(w));
  }
  const int r = static_cast<int>(ident.size());
  if (row_space(left, na).rank() != r || row_space(right, nb).rank() != r)
    throw std::invalid_argument("central_product: identification is not an isomorphism");

  std::vector<Vec> w = glue;
  rref(w);

  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(total, false);
  for (const Vec& row : w) {
    int p = 0;
    while (p < total && row[p].is_zero()) ++p;
    pivot_col.push_back(p);
    is_pivot[p] = true;
  }
  std::vector<int> kept;  // original coordinates that survive as quotient basis
  for (int i = 0; i < total; ++i)
    if (!is_pivot[i]) kept.push_back(i);
  std::vector<int> kept_pos(total, -1);
  for (size_t i = 0; i < kept.size(); ++i) kept_pos[kept[i]] = static_cast<int>(i);

  // reduce a vector of (a (+) b) modulo the glued subspace, in kept coordinates
  auto reduce = [&](Vec v) {
    for (size_t t = 0; t < w.size(); ++t) {
      Rational f = v[pivot_col[t]];
      if (f.is_zero()) continue;
      for (int j = 0; j < total; ++j) v[j] -= f * w[t][j];
    }
    SparseVec out;
    for (int j = 0; j < total; ++j)
      if (!v[j].is_zero()) out[kept_pos[j]] = v[j];
    return out;
  };

  LieAlgebra sum = direct_sum(a, b);
  StructureConstants sc(total - r);
  for (size_t x = 0; x < kept.size(); ++x)
    for (size_t y = x + 1; y < kept.size(); ++y) {
      Vec z = sum.bracket(sum.basis_vector(kept[x]), sum.basis_vector(kept[y]));
      SparseVec red = reduce(std::move(z));
      if (!red.empty()) sc.set_bracket(static_cast<int>(x), static_cast<int>(y), std::move(red));
    }
  std::string label;
  if (!a.label().empty() && !b.label().empty()) label = a.label() + "." + b.label();
  return LieAlgebra(std::move(sc), std::move(label));
}

}  // namespace nilpair
