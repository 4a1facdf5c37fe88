#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace grh {

// Arbitrary-precision signed integer, sign-magnitude with base 2^32 limbs.
// Only what exact rational-function arithmetic needs: ring ops, divmod, gcd,
// decimal I/O. Division is binary long division; operand sizes here stay tiny.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT(google-explicit-constructor)
  static BigInt parse(const std::string& text);

  bool is_zero() const { return sign_ == 0; }
  bool is_one() const;
  bool is_negative() const { return sign_ < 0; }
  int sign() const { return sign_; }

  BigInt operator-() const;
  BigInt abs() const;

  BigInt operator+(const BigInt& o) const;
  BigInt operator-(const BigInt& o) const;
  BigInt operator*(const BigInt& o) const;
  BigInt operator/(const BigInt& o) const;  // truncated toward zero
  BigInt operator%(const BigInt& o) const;  // sign follows dividend
  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  // quotient/remainder in one pass; throws DivisionByZero on zero divisor
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  // division that must be exact; throws InvalidRewriteSystem-free assert-style
  BigInt div_exact(const BigInt& o) const;

  static BigInt gcd(BigInt a, BigInt b);

  bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
  bool operator!=(const BigInt& o) const { return !(*this == o); }
  bool operator<(const BigInt& o) const;
  bool operator>(const BigInt& o) const { return o < *this; }
  bool operator<=(const BigInt& o) const { return !(o < *this); }
  bool operator>=(const BigInt& o) const { return !(*this < o); }

  std::string str() const;

  // fits in long long? (used for fast paths and tests)
  bool fits_ll() const;
  long long to_ll() const;

 private:
  int sign_ = 0;                // -1, 0, +1
  std::vector<uint32_t> mag_;   // little-endian, no trailing zero limbs

  void trim();
  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

}  // namespace grh
