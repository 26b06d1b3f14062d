#ifndef NILPAIR_EXTERIOR_HPP
#define NILPAIR_EXTERIOR_HPP

#include <array>
#include <utility>

namespace nilpair {

/// Lexicographic indexing of 2- and 3-subsets of {0..n-1}, used as wedge
/// bases for Lambda^2 and Lambda^3.
class ExteriorBasis {
public:
  explicit ExteriorBasis(int n) : n_(n) {}

  int n() const { return n_; }
  long size2() const { return static_cast<long>(n_) * (n_ - 1) / 2; }
  long size3() const { return static_cast<long>(n_) * (n_ - 1) * (n_ - 2) / 6; }

  /// Position of e_i ^ e_j, i < j.
  long index2(int i, int j) const {
    return static_cast<long>(i) * (2 * n_ - i - 1) / 2 + (j - i - 1);
  }

  /// Position and sign of e_a ^ e_b for arbitrary a != b; {-1, 0} when a == b.
  std::pair<long, int> wedge2(int a, int b) const {
    if (a == b) return {-1, 0};
    return a < b ? std::pair<long, int>{index2(a, b), 1}
                 : std::pair<long, int>{index2(b, a), -1};
  }

  /// Position of e_i ^ e_j ^ e_k, i < j < k.
  long index3(int i, int j, int k) const {
    long skipped = size3() - static_cast<long>(n_ - i) * (n_ - i - 1) * (n_ - i - 2) / 6;
    return skipped + ExteriorBasis(n_ - i - 1).index2(j - i - 1, k - i - 1);
  }

  std::array<int, 2> pair_at(long idx) const;
  std::array<int, 3> triple_at(long idx) const;

private:
  int n_;
};

}  // namespace nilpair

#endif
