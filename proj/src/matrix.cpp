#include "nilpair/matrix.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace nilpair {

Rational RationalMatrix::get(long r, long c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Rational(0) : it->second;
}

void RationalMatrix::set(long r, long c, Rational v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("RationalMatrix: index out of range");
  if (v.is_zero())
    entries_.erase({r, c});
  else
    entries_[{r, c}] = std::move(v);
}

void RationalMatrix::add(long r, long c, const Rational& v) {
  if (v.is_zero()) return;
  set(r, c, get(r, c) + v);
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("RationalMatrix: shape mismatch in multiply");
  RationalMatrix out(a.rows(), b.cols());
  for (const auto& [ia, va] : a.entries_) {
    auto lo = b.entries_.lower_bound({ia.second, 0});
    auto hi = b.entries_.lower_bound({ia.second + 1, 0});
    for (auto it = lo; it != hi; ++it) out.add(ia.first, it->first.second, va * it->second);
  }
  return out;
}

namespace {

struct Int64Overflow {};

// One Bareiss elimination pass on a dense int64 matrix; every intermediate is
// a minor of the (row-scaled) input, so division by the previous pivot is
// exact. Throws Int64Overflow if an entry leaves the safe range.
long bareiss_rank_i64(std::vector<std::vector<long long>>& m) {
  constexpr long long kLimit = 1ll << 62;
  const long rows = static_cast<long>(m.size());
  const long cols = rows == 0 ? 0 : static_cast<long>(m[0].size());
  long long prev = 1;
  long r = 0;
  for (long c = 0; c < cols && r < rows; ++c) {
    long piv = -1;
    long long best = 0;
    for (long i = r; i < rows; ++i) {
      long long a = std::llabs(m[i][c]);
      if (a > best) {
        best = a;
        piv = i;
      }
    }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    for (long i = r + 1; i < rows; ++i) {
      for (long j = c + 1; j < cols; ++j) {
        __int128 t = static_cast<__int128>(m[r][c]) * m[i][j] -
                     static_cast<__int128>(m[i][c]) * m[r][j];
        __int128 q = t / prev;
        if (t % prev != 0) throw std::logic_error("bareiss: inexact division");
        if (q >= kLimit || q <= -kLimit) throw Int64Overflow{};
        m[i][j] = static_cast<long long>(q);
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

long bareiss_rank_big(std::vector<std::vector<BigInt>>& m) {
  const long rows = static_cast<long>(m.size());
  const long cols = rows == 0 ? 0 : static_cast<long>(m[0].size());
  BigInt prev(1);
  long r = 0;
  for (long c = 0; c < cols && r < rows; ++c) {
    long piv = -1;
    for (long i = r; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      if (piv < 0 || BigInt::cmp_abs(m[i][c], m[piv][c]) > 0) piv = i;
    }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    for (long i = r + 1; i < rows; ++i) {
      for (long j = c + 1; j < cols; ++j) {
        BigInt t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        BigInt q, rem;
        BigInt::divmod(t, prev, q, rem);
        if (!rem.is_zero()) throw std::logic_error("bareiss: inexact division");
        m[i][j] = std::move(q);
      }
      m[i][c] = BigInt(0);
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

}  // namespace

long RationalMatrix::rank() const {
  if (rows_ == 0 || cols_ == 0 || entries_.empty()) return 0;

  // scale each row to integer entries (row scaling preserves rank)
  std::vector<BigInt> row_lcm(rows_, BigInt(1));
  for (const auto& [idx, v] : entries_) {
    const BigInt& den = v.den();
    BigInt g = BigInt::gcd(row_lcm[idx.first], den);
    row_lcm[idx.first] = row_lcm[idx.first] * (den / g);
  }

  bool fits = true;
  std::vector<std::vector<long long>> small(rows_, std::vector<long long>(cols_, 0));
  for (const auto& [idx, v] : entries_) {
    BigInt scaled = v.num() * (row_lcm[idx.first] / v.den());
    if (!scaled.fits_int64()) {
      fits = false;
      break;
    }
    long long s = scaled.to_int64();
    if (s >= (1ll << 62) || s <= -(1ll << 62)) {
      fits = false;
      break;
    }
    small[idx.first][idx.second] = s;
  }

  if (fits) {
    try {
      return bareiss_rank_i64(small);
    } catch (const Int64Overflow&) {
      // fall through to arbitrary precision
    }
  }

  std::vector<std::vector<BigInt>> big(rows_, std::vector<BigInt>(cols_, BigInt(0)));
  for (const auto& [idx, v] : entries_)
    big[idx.first][idx.second] = v.num() * (row_lcm[idx.first] / v.den());
  return bareiss_rank_big(big);
}

}  // namespace nilpair
