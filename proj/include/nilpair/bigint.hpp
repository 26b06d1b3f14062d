#ifndef NILPAIR_BIGINT_HPP
#define NILPAIR_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace nilpair {

/// Arbitrary-precision signed integer (sign-magnitude, 32-bit limbs).
///
/// Covers what exact linear algebra over the rationals needs: ring
/// arithmetic, truncated division with remainder, gcd, decimal I/O.
class BigInt {
public:
  BigInt() = default;
  BigInt(long long v);
  explicit BigInt(const std::string& decimal);

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }

  bool fits_int64() const;
  long long to_int64() const;  // pre: fits_int64()
  std::string to_string() const;

  BigInt operator-() const;
  BigInt abs() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  /// Truncated toward zero. Divisor must be nonzero.
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  /// q = a/b, r = a%b with sign(r) = sign(a), |r| < |b|.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  static BigInt gcd(BigInt a, BigInt b);  // nonnegative

  static int cmp(const BigInt& a, const BigInt& b);       // -1, 0, +1
  static int cmp_abs(const BigInt& a, const BigInt& b);

  friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return cmp(a, b) != 0; }
  friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

private:
  using Mag = std::vector<uint32_t>;  // little-endian, no high zero limbs

  int sign_ = 0;
  Mag mag_;

  BigInt(int sign, Mag mag);
  void trim();

  static int cmp_mag(const Mag& a, const Mag& b);
  static Mag add_mag(const Mag& a, const Mag& b);
  static Mag sub_mag(const Mag& a, const Mag& b);  // pre: |a| >= |b|
  static Mag mul_mag(const Mag& a, const Mag& b);
  static void divmod_mag(const Mag& a, const Mag& b, Mag& q, Mag& r);
  static uint32_t div_small(Mag& a, uint32_t d);   // in place, returns remainder
  static void mul_add_small(Mag& a, uint32_t mul, uint32_t add);
};

}  // namespace nilpair

#endif
