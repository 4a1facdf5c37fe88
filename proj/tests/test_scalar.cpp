#include <doctest.h>

#include <random>

#include "grh/errors.hpp"
#include "grh/parser.hpp"
#include "grh/scalar.hpp"

using namespace grh;

TEST_CASE("scalar field arithmetic on the defining examples") {
  Scalar q = Scalar::q();
  Scalar qinv = Scalar::q_pow(-1);
  CHECK((q * qinv).is_one());
  CHECK((q - qinv) == parse_scalar("(q^2 - 1)/q"));
  Scalar pole = parse_scalar("1/(q - 1)");
  CHECK((pole + (-pole)).is_zero());
}

TEST_CASE("limit at q = 1") {
  CHECK(parse_scalar("(q^2 - 1)/(q - 1)").limit_at_one() == Rational(2, 1));
  CHECK(parse_scalar("q - q^-1").limit_at_one() == Rational(0, 1));
  CHECK_THROWS_AS(parse_scalar("1/(q - 1)").limit_at_one(), PoleAtOne);
  CHECK(parse_scalar("(2*q + 4)/(q + 1)").limit_at_one() == Rational(3, 1));
}

TEST_CASE("canonical form") {
  // gcd reduction and denominator sign normalization
  Scalar a(Poly(BigInt(2)) * Poly::q() - Poly(BigInt(2)),       // 2q - 2
           Poly(BigInt(4)) * Poly::q() * Poly::q() - Poly(BigInt(4)));  // 4q^2 - 4
  CHECK(a == parse_scalar("1/(2*q + 2)"));
  Scalar b = parse_scalar("(1 - q)/(1 - q^2)");  // negative leading denominator
  CHECK(b == parse_scalar("1/(q + 1)"));
  CHECK(b.den().leading() > BigInt(0));
  // canonicalization is idempotent: rebuilding from canonical parts is a no-op
  Scalar c(b.num(), b.den());
  CHECK(c == b);
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(Scalar::one() / Scalar::zero(), DivisionByZero);
  CHECK_THROWS_AS(Scalar::zero().pow(-1), DivisionByZero);
}

TEST_CASE("print and reparse round trip") {
  const char* samples[] = {"0",      "1",           "-3",          "q",
                           "q^-1",   "q - q^-1",    "1/(q - 1)",   "(q^2 + 1)/q",
                           "-2*q^3", "(q + 1)/(q - 1)", "(3*q^2 - 5)/(2*q + 7)"};
  for (const char* s : samples) {
    Scalar v = parse_scalar(s);
    CHECK(parse_scalar(v.str()) == v);
  }
}

namespace {
Scalar random_scalar(std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<int> coeff(-9, 9), deg(0, 3);
  auto poly = [&](bool require_nonzero) {
    Poly p;
    do {
      p = Poly();
      int d = deg(rng);
      for (int i = 0; i <= d; ++i)
        p = p + Poly::monomial(BigInt(coeff(rng)), i);
    } while (require_nonzero && p.is_zero());
    return p;
  };
  Scalar s(poly(nonzero), poly(true));
  if (nonzero && s.is_zero()) return Scalar::one();
  return s;
}
}  // namespace

TEST_CASE("field axioms on random rational functions") {
  std::mt19937_64 rng(0xC0FFEE);
  for (int i = 0; i < 300; ++i) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + (b + c) == (a + b) + c);
    CHECK(a - a == Scalar::zero());
    Scalar nz = random_scalar(rng, true);
    CHECK(nz * (Scalar::one() / nz) == Scalar::one());
  }
}

TEST_CASE("limit_at_one is a ring homomorphism away from poles") {
  std::mt19937_64 rng(0xBEEF);
  auto as_scalar = [](const Rational& r) { return Scalar::rational(r.num, r.den); };
  int done = 0;
  while (done < 200) {
    Scalar a = random_scalar(rng), b = random_scalar(rng);
    if (a.pole_at_one() || b.pole_at_one() || (a + b).pole_at_one() ||
        (a * b).pole_at_one())
      continue;
    CHECK(as_scalar((a + b).limit_at_one()) ==
          as_scalar(a.limit_at_one()) + as_scalar(b.limit_at_one()));
    CHECK(as_scalar((a * b).limit_at_one()) ==
          as_scalar(a.limit_at_one()) * as_scalar(b.limit_at_one()));
    ++done;
  }
}
