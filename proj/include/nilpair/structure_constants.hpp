#ifndef NILPAIR_STRUCTURE_CONSTANTS_HPP
#define NILPAIR_STRUCTURE_CONSTANTS_HPP

#include <map>
#include <utility>

#include "nilpair/rational.hpp"

namespace nilpair {

/// Sparse coordinate vector: basis index (0-based) -> coefficient.
using SparseVec = std::map<int, Rational>;

/// Structure constants of a bracket on a finite basis: [e_i, e_j] for i < j.
/// Antisymmetry is implicit; only i < j pairs are stored.
class StructureConstants {
public:
  StructureConstants() = default;
  explicit StructureConstants(int dim) : dim_(dim) {}

  int dim() const { return dim_; }

  /// Set [e_i, e_j] (0-based, i < j required).
  void set_bracket(int i, int j, SparseVec value);

  /// Accumulate a coefficient onto [e_i, e_j] (0-based, i < j required).
  void add_coefficient(int i, int j, int k, const Rational& coeff);

  /// Stored pairs only (i < j).
  const std::map<std::pair<int, int>, SparseVec>& stored() const { return entries_; }

  /// [e_i, e_j] for any i != j, with the antisymmetric sign applied.
  SparseVec bracket_of_basis(int i, int j) const;

  bool operator==(const StructureConstants& other) const {
    return dim_ == other.dim_ && entries_ == other.entries_;
  }

private:
  int dim_ = 0;
  std::map<std::pair<int, int>, SparseVec> entries_;
  void check_pair(int i, int j) const;
};

}  // namespace nilpair

#endif
