#ifndef NILPAIR_MATRIX_HPP
#define NILPAIR_MATRIX_HPP

#include <map>
#include <utility>

#include "nilpair/rational.hpp"

namespace nilpair {

/// Sparse rational matrix. Stored entries are nonzero.
class RationalMatrix {
public:
  using Index = std::pair<long, long>;

  RationalMatrix(long rows, long cols) : rows_(rows), cols_(cols) {}

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  size_t nonzeros() const { return entries_.size(); }
  const std::map<Index, Rational>& entries() const { return entries_; }

  Rational get(long r, long c) const;
  void set(long r, long c, Rational v);
  void add(long r, long c, const Rational& v);

  bool is_zero() const { return entries_.empty(); }

  /// Exact rank over Q: rows are scaled to integers, then fraction-free
  /// (Bareiss) elimination with partial pivoting on entry magnitude.
  /// Runs on int64 with 128-bit intermediates and falls back to
  /// arbitrary precision if any intermediate would overflow.
  long rank() const;

  friend RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

private:
  long rows_;
  long cols_;
  std::map<Index, Rational> entries_;
};

}  // namespace nilpair

#endif
