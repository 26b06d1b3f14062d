#include "nilpair/structure_constants.hpp"

#include <stdexcept>

namespace nilpair {

void StructureConstants::check_pair(int i, int j) const {
  if (i < 0 || j >= dim_ || i >= j)
    throw std::invalid_argument("StructureConstants: need 0 <= i < j < dim");
}

void StructureConstants::set_bracket(int i, int j, SparseVec value) {
  check_pair(i, j);
  for (auto it = value.begin(); it != value.end();) {
    if (it->first < 0 || it->first >= dim_)
      throw std::invalid_argument("StructureConstants: target index out of range");
    it = it->second.is_zero() ? value.erase(it) : std::next(it);
  }
  if (value.empty())
    entries_.erase({i, j});
  else
    entries_[{i, j}] = std::move(value);
}

void StructureConstants::add_coefficient(int i, int j, int k, const Rational& coeff) {
  check_pair(i, j);
  if (k < 0 || k >= dim_)
    throw std::invalid_argument("StructureConstants: target index out of range");
  SparseVec v = bracket_of_basis(i, j);
  v[k] += coeff;
  if (v[k].is_zero()) v.erase(k);
  if (v.empty())
    entries_.erase({i, j});
  else
    entries_[{i, j}] = std::move(v);
}

SparseVec StructureConstants::bracket_of_basis(int i, int j) const {
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = entries_.find({i, j});
  if (it == entries_.end()) return {};
  if (!flip) return it->second;
  SparseVec out = it->second;
  for (auto& [k, v] : out) v = -v;
  return out;
}

}  // namespace nilpair
