#ifndef NILPAIR_SUBSPACE_HPP
#define NILPAIR_SUBSPACE_HPP

#include <vector>

#include "nilpair/rational.hpp"

namespace nilpair {

using Vec = std::vector<Rational>;

/// Basis of a subspace of Q^ambient, stored in reduced row echelon form.
struct SubspaceBasis {
  int ambient = 0;
  std::vector<Vec> vectors;  // RREF rows, nonzero, pivot-normalized

  int rank() const { return static_cast<int>(vectors.size()); }
  bool contains(Vec v) const;
};

/// In-place Gauss-Jordan over Q. Returns the rank; rows end up in RREF with
/// zero rows removed.
int rref(std::vector<Vec>& rows);

/// Row space of the given spanning set.
SubspaceBasis row_space(std::vector<Vec> rows, int ambient);

/// Kernel of the linear map given by `rows` (each row is one equation over
/// `cols` unknowns).
SubspaceBasis null_space(const std::vector<Vec>& rows, int cols);

}  // namespace nilpair

#endif
