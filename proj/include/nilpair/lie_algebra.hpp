#ifndef NILPAIR_LIE_ALGEBRA_HPP
#define NILPAIR_LIE_ALGEBRA_HPP

#include <string>
#include <vector>

#include "nilpair/structure_constants.hpp"
#include "nilpair/subspace.hpp"

namespace nilpair {

/// Outcome of the Jacobi check. Violations carry the offending basis triple
/// (1-based, as printed) and the nonzero Jacobiator vector.
struct ValidationReport {
  struct Violation {
    int i, j, k;
    Vec jacobiator;
  };
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

struct NilpotencyInfo {
  bool nilpotent = false;
  int nil_class = 0;  // smallest c with L^{c+1} = 0; meaningful when nilpotent
};

/// Finite-dimensional Lie algebra given by structure constants on a basis,
/// plus an optional catalog label. Immutable after construction.
class LieAlgebra {
public:
  LieAlgebra() = default;
  LieAlgebra(StructureConstants sc, std::string label = "");

  int dim() const { return sc_.dim(); }
  const StructureConstants& sc() const { return sc_; }
  const std::string& label() const { return label_; }
  LieAlgebra with_label(std::string label) const;

  /// Basis vector e_i (0-based) as a dense coordinate vector.
  Vec basis_vector(int i) const;

  /// Bilinear bracket of dense coordinate vectors.
  Vec bracket(const Vec& x, const Vec& y) const;

  /// Jacobi identity over all basis triples.
  ValidationReport validate() const;

  /// L^2 = span of all brackets.
  SubspaceBasis derived_subalgebra() const;

  /// Z(L) = kernel of x -> (y -> [x, y]).
  SubspaceBasis center() const;

  /// Lower central series L = S_1 >= S_2 >= ... until stabilization.
  std::vector<SubspaceBasis> lower_central_series() const;

  NilpotencyInfo nilpotency() const;
  bool is_nilpotent() const { return nilpotency().nilpotent; }

  /// Same algebra with basis e_i -> e_{perm[i]}.
  LieAlgebra relabel(const std::vector<int>& perm) const;

private:
  StructureConstants sc_;
  std::string label_;
};

/// A(k): k-dimensional abelian algebra (k = 0 gives the zero algebra).
LieAlgebra abelian(int k);

/// H(r): dim 2r+1, [e_{2i-1}, e_{2i}] = e_{2r+1} for i = 1..r.
LieAlgebra heisenberg(int r);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Central product: quotient of a (+) b by the graph {(u, -ident(u))} of a
/// linear identification between central subspaces. Each pair gives one
/// identified direction (u in a-coordinates, v in b-coordinates).
LieAlgebra central_product(const LieAlgebra& a, const LieAlgebra& b,
                           const std::vector<std::pair<Vec, Vec>>& ident);

}  // namespace nilpair

#endif
