#include "grh/scalar.hpp"

#include <cassert>

#include "grh/errors.hpp"

namespace grh {

// ---------------------------------------------------------------- Poly

Poly::Poly(BigInt constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Poly Poly::q() { return monomial(BigInt(1), 1); }

Poly Poly::monomial(BigInt c, int deg) {
  Poly p;
  if (c.is_zero()) return p;
  p.c_.assign(deg + 1, BigInt(0));
  p.c_[deg] = std::move(c);
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const BigInt& Poly::coeff(int deg) const {
  static const BigInt kZero(0);
  if (deg < 0 || deg >= static_cast<int>(c_.size())) return kZero;
  return c_[deg];
}

const BigInt& Poly::leading() const {
  static const BigInt kZero(0);
  return c_.empty() ? kZero : c_.back();
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (size_t i = 0; i < r.c_.size(); ++i) {
    if (i < c_.size()) r.c_[i] += c_[i];
    if (i < o.c_.size()) r.c_[i] += o.c_[i];
  }
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  r.trim();
  return r;
}

BigInt Poly::content() const {
  BigInt g(0);
  for (const auto& c : c_) g = BigInt::gcd(g, c);
  return g;
}

Poly Poly::primitive_part() const {
  if (is_zero()) return *this;
  BigInt g = content();
  Poly r = *this;
  for (auto& c : r.c_) c = c.div_exact(g);
  return r;
}

Poly Poly::div_exact(const Poly& o) const {
  if (o.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (is_zero()) return Poly();
  Poly rem = *this;
  Poly quot;
  quot.c_.assign(c_.size() - o.c_.size() + 1, BigInt(0));
  while (!rem.is_zero() && rem.degree() >= o.degree()) {
    int d = rem.degree() - o.degree();
    BigInt qc = rem.leading() / o.leading();
    assert(!qc.is_zero() && (rem.leading() % o.leading()).is_zero() &&
           "inexact polynomial division");
    quot.c_[d] += qc;
    rem = rem - o * monomial(qc, d);
  }
  assert(rem.is_zero() && "inexact polynomial division");
  quot.trim();
  return quot;
}

Poly Poly::pseudo_rem(const Poly& a, const Poly& b) {
  Poly r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int d = r.degree() - b.degree();
    r = r * Poly(b.leading()) - b * monomial(r.leading(), d);
  }
  return r;
}

Poly Poly::gcd(Poly a, Poly b) {
  if (a.is_zero() && b.is_zero()) return Poly();
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.is_zero()) {
    if (b.leading().is_negative()) b = -b;
    return b;
  }
  while (!b.is_zero()) {
    Poly r = pseudo_rem(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  if (a.leading().is_negative()) a = -a;
  return a;
}

BigInt Poly::eval_at_one() const {
  BigInt s(0);
  for (const auto& c : c_) s += c;
  return s;
}

int Poly::term_count() const {
  int n = 0;
  for (const auto& c : c_)
    if (!c.is_zero()) ++n;
  return n;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const BigInt& c = c_[d];
    if (c.is_zero()) continue;
    BigInt a = c.abs();
    if (first) {
      if (c.is_negative()) out += "-";
      first = false;
    } else {
      out += c.is_negative() ? " - " : " + ";
    }
    bool unit_coeff = a.is_one() && d > 0;
    if (!unit_coeff) out += a.str();
    if (d > 0) {
      if (!unit_coeff) out += "*";
      out += "q";
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

// ---------------------------------------------------------------- Rational

Rational::Rational(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw DivisionByZero("rational with zero denominator");
  if (num.is_zero()) {
    den = 1;
    return;
  }
  BigInt g = BigInt::gcd(num, den);
  num = num.div_exact(g);
  den = den.div_exact(g);
  if (den.is_negative()) {
    num = -num;
    den = -den;
  }
}

std::string Rational::str() const {
  if (den.is_one()) return num.str();
  return num.str() + "/" + den.str();
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("scalar with zero denominator");
  canonicalize();
}

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(BigInt(1));
    return;
  }
  // a unit denominator is already canonical; this is the overwhelmingly
  // common case in the h-deformed algebras, whose coefficients are integers
  if (den_.is_constant() && den_.leading().is_one()) return;
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0 || !g.leading().is_one()) {
    num_ = num_.div_exact(g);
    den_ = den_.div_exact(g);
  }
  BigInt cg = BigInt::gcd(num_.content(), den_.content());
  if (!cg.is_one()) {
    num_ = num_.div_exact(Poly(cg));
    den_ = den_.div_exact(Poly(cg));
  }
  if (den_.leading().is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
}

Scalar Scalar::q_pow(int e) {
  if (e >= 0) return Scalar(Poly::monomial(BigInt(1), e), Poly(BigInt(1)));
  return Scalar(Poly(BigInt(1)), Poly::monomial(BigInt(1), -e));
}

bool Scalar::is_one() const {
  return den_.is_constant() && den_.leading().is_one() && num_.is_constant() &&
         num_.leading().is_one();
}

Scalar Scalar::operator+(const Scalar& o) const {
  return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw DivisionByZero("scalar division by zero");
  return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::pow(int e) const {
  if (e == 0) return one();
  if (is_zero()) {
    if (e < 0) throw DivisionByZero("0 raised to a negative power");
    return zero();
  }
  Scalar base = e < 0 ? one() / *this : *this;
  int n = e < 0 ? -e : e;
  Scalar r = one();
  for (int i = 0; i < n; ++i) r = r * base;
  return r;
}

Rational Scalar::limit_at_one() const {
  BigInt d = den_.eval_at_one();
  if (d.is_zero())
    throw PoleAtOne("denominator " + den_.str() + " vanishes at q = 1");
  return Rational(num_.eval_at_one(), d);
}

std::string Scalar::str() const {
  if (den_.is_constant() && den_.leading().is_one()) return num_.str();
  std::string n = num_.term_count() > 1 ? "(" + num_.str() + ")" : num_.str();
  std::string d = den_.term_count() > 1 ? "(" + den_.str() + ")" : den_.str();
  return n + "/" + d;
}

}  // namespace grh
