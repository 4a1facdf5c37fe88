#pragma once

#include <string>
#include <vector>

#include "grh/bigint.hpp"

namespace grh {

// Dense integer-coefficient polynomial in q, coefficients ascending by degree,
// no trailing zeros. Degrees in this project stay tiny.
class Poly {
 public:
  Poly() = default;
  explicit Poly(BigInt constant);
  static Poly q();                         // the variable itself
  static Poly monomial(BigInt c, int deg);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const BigInt& coeff(int deg) const;
  const BigInt& leading() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  BigInt content() const;          // gcd of coefficients, >= 0
  Poly primitive_part() const;     // content divided out, sign kept
  Poly div_exact(const Poly& o) const;
  static Poly gcd(Poly a, Poly b);  // primitive, positive leading coefficient

  BigInt eval_at_one() const;      // sum of coefficients
  bool is_constant() const { return c_.size() <= 1; }
  int term_count() const;

  std::string str() const;         // e.g. "q^2 - 1", "-2*q + 3", "0"

 private:
  std::vector<BigInt> c_;
  void trim();
  static Poly pseudo_rem(const Poly& a, const Poly& b);
};

// Exact rational number, canonical (coprime, positive denominator).
struct Rational {
  BigInt num = 0;
  BigInt den = 1;
  Rational() = default;
  Rational(BigInt n, BigInt d);
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  std::string str() const;
};

// Element of Q(q): ratio of integer-coefficient polynomials in canonical form
// (gcd-reduced, denominator with positive leading coefficient, zero = 0/1).
// Equality of Scalars is plain syntactic equality of the canonical parts.
class Scalar {
 public:
  Scalar() : num_(BigInt(0)), den_(BigInt(1)) {}
  Scalar(long long v) : Scalar(Poly(BigInt(v)), Poly(BigInt(1))) {}  // NOLINT
  Scalar(Poly num, Poly den);

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }
  static Scalar integer(BigInt v) { return Scalar(Poly(std::move(v)), Poly(BigInt(1))); }
  static Scalar rational(BigInt n, BigInt d) { return Scalar(Poly(std::move(n)), Poly(std::move(d))); }
  static Scalar q() { return Scalar(Poly::q(), Poly(BigInt(1))); }
  static Scalar q_pow(int e);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws DivisionByZero
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar pow(int e) const;  // negative allowed for nonzero scalars

  bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  // true when the canonical denominator vanishes at q = 1
  bool pole_at_one() const { return den_.eval_at_one().is_zero(); }
  // value at q = 1; throws PoleAtOne when the denominator vanishes there
  Rational limit_at_one() const;

  std::string str() const;

 private:
  Poly num_, den_;
  void canonicalize();
};

}  // namespace grh
