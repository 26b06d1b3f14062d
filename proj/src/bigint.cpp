#include "nilpair/bigint.hpp"

#include <stdexcept>

namespace nilpair {

namespace {
constexpr uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v > 0 ? 1 : -1;
  // avoid UB on LLONG_MIN
  uint64_t u = v > 0 ? static_cast<uint64_t>(v) : ~static_cast<uint64_t>(v) + 1;
  while (u != 0) {
    mag_.push_back(static_cast<uint32_t>(u & 0xffffffffu));
    u >>= 32;
  }
}

BigInt::BigInt(int sign, Mag mag) : sign_(sign), mag_(std::move(mag)) { trim(); }

BigInt::BigInt(const std::string& decimal) {
  size_t pos = 0;
  int sign = 1;
  if (pos < decimal.size() && (decimal[pos] == '-' || decimal[pos] == '+')) {
    if (decimal[pos] == '-') sign = -1;
    ++pos;
  }
  if (pos == decimal.size()) throw std::invalid_argument("BigInt: empty numeral");
  Mag mag;
  for (; pos < decimal.size(); ++pos) {
    char c = decimal[pos];
    if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit in numeral");
    mul_add_small(mag, 10, static_cast<uint32_t>(c - '0'));
  }
  mag_ = std::move(mag);
  sign_ = mag_.empty() ? 0 : sign;
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

bool BigInt::fits_int64() const {
  if (mag_.size() < 2) return true;
  if (mag_.size() > 2) return false;
  uint64_t u = (static_cast<uint64_t>(mag_[1]) << 32) | mag_[0];
  return sign_ > 0 ? u <= 0x7fffffffffffffffull : u <= 0x8000000000000000ull;
}

long long BigInt::to_int64() const {
  uint64_t u = 0;
  if (!mag_.empty()) u = mag_[0];
  if (mag_.size() > 1) u |= static_cast<uint64_t>(mag_[1]) << 32;
  return sign_ >= 0 ? static_cast<long long>(u) : -static_cast<long long>(u - 1) - 1;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

int BigInt::cmp_mag(const Mag& a, const Mag& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

int BigInt::cmp_abs(const BigInt& a, const BigInt& b) { return cmp_mag(a.mag_, b.mag_); }

int BigInt::cmp(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
  int c = cmp_mag(a.mag_, b.mag_);
  return a.sign_ >= 0 ? c : -c;
}

BigInt::Mag BigInt::add_mag(const Mag& a, const Mag& b) {
  const Mag& lo = a.size() < b.size() ? a : b;
  const Mag& hi = a.size() < b.size() ? b : a;
  Mag out(hi.size() + 1, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < hi.size(); ++i) {
    uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
    out[i] = static_cast<uint32_t>(s & 0xffffffffu);
    carry = s >> 32;
  }
  out[hi.size()] = static_cast<uint32_t>(carry);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

BigInt::Mag BigInt::sub_mag(const Mag& a, const Mag& b) {
  Mag out(a.size(), 0);
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (s < 0) {
      s += static_cast<int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out[i] = static_cast<uint32_t>(s);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

BigInt::Mag BigInt::mul_mag(const Mag& a, const Mag& b) {
  if (a.empty() || b.empty()) return {};
  Mag out(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t s = static_cast<uint64_t>(a[i]) * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<uint32_t>(s & 0xffffffffu);
      carry = s >> 32;
    }
    size_t k = i + b.size();
    while (carry != 0) {
      uint64_t s = out[k] + carry;
      out[k] = static_cast<uint32_t>(s & 0xffffffffu);
      carry = s >> 32;
      ++k;
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Shift-subtract long division on magnitudes; operands stay within a few
// limbs in this code base.
void BigInt::divmod_mag(const Mag& a, const Mag& b, Mag& q, Mag& r) {
  q.assign(a.size(), 0);
  r.clear();
  for (size_t limb = a.size(); limb-- > 0;) {
    for (int bit = 31; bit >= 0; --bit) {
      // r = (r << 1) | bit_of_a
      uint32_t carry = (a[limb] >> bit) & 1u;
      for (size_t i = 0; i < r.size(); ++i) {
        uint32_t next = r[i] >> 31;
        r[i] = (r[i] << 1) | carry;
        carry = next;
      }
      if (carry != 0) r.push_back(carry);
      if (cmp_mag(r, b) >= 0) {
        r = sub_mag(r, b);
        q[limb] |= 1u << bit;
      }
    }
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
}

uint32_t BigInt::div_small(Mag& a, uint32_t d) {
  uint64_t rem = 0;
  for (size_t i = a.size(); i-- > 0;) {
    uint64_t cur = (rem << 32) | a[i];
    a[i] = static_cast<uint32_t>(cur / d);
    rem = cur % d;
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return static_cast<uint32_t>(rem);
}

void BigInt::mul_add_small(Mag& a, uint32_t mul, uint32_t add) {
  uint64_t carry = add;
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t s = static_cast<uint64_t>(a[i]) * mul + carry;
    a[i] = static_cast<uint32_t>(s & 0xffffffffu);
    carry = s >> 32;
  }
  while (carry != 0) {
    a.push_back(static_cast<uint32_t>(carry & 0xffffffffu));
    carry >>= 32;
  }
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  if (a.sign_ == b.sign_) return BigInt(a.sign_, BigInt::add_mag(a.mag_, b.mag_));
  int c = BigInt::cmp_mag(a.mag_, b.mag_);
  if (c == 0) return BigInt();
  return c > 0 ? BigInt(a.sign_, BigInt::sub_mag(a.mag_, b.mag_))
               : BigInt(b.sign_, BigInt::sub_mag(b.mag_, a.mag_));
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
  return BigInt(a.sign_ * b.sign_, BigInt::mul_mag(a.mag_, b.mag_));
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
  Mag qm, rm;
  divmod_mag(a.mag_, b.mag_, qm, rm);
  q = BigInt(a.sign_ * b.sign_, std::move(qm));
  r = BigInt(a.sign_, std::move(rm));
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.sign_ = a.mag_.empty() ? 0 : 1;
  b.sign_ = b.mag_.empty() ? 0 : 1;
  while (!b.is_zero()) {
    BigInt q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  Mag tmp = mag_;
  std::string digits;
  while (!tmp.empty()) {
    uint32_t rem = div_small(tmp, 1000000000u);
    for (int i = 0; i < 9; ++i) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  return std::string(digits.rbegin(), digits.rend());
}

}  // namespace nilpair
