#include <doctest.h>

#include "grh/bigint.hpp"
#include "grh/errors.hpp"

using grh::BigInt;

TEST_CASE("bigint basic arithmetic") {
  CHECK((BigInt(7) + BigInt(-9)).str() == "-2");
  CHECK((BigInt(-7) * BigInt(-8)).str() == "56");
  CHECK((BigInt(0) - BigInt(5)).str() == "-5");
  CHECK(BigInt(0).is_zero());
  CHECK((BigInt(123456789) * BigInt(987654321)).str() == "121932631112635269");
}

TEST_CASE("bigint multi-limb products and parsing") {
  BigInt a = BigInt::parse("123456789012345678901234567890");
  BigInt b = BigInt::parse("-98765432109876543210");
  CHECK((a * b).str() == "-12193263113702179522496570642237463801111263526900");
  CHECK(BigInt::parse((a * b).str()) == a * b);
  CHECK((a + (-a)).is_zero());
}

TEST_CASE("bigint divmod with signs") {
  BigInt q, r;
  BigInt::divmod(BigInt(7), BigInt(2), q, r);
  CHECK(q.to_ll() == 3);
  CHECK(r.to_ll() == 1);
  BigInt::divmod(BigInt(-7), BigInt(2), q, r);
  CHECK(q.to_ll() == -3);
  CHECK(r.to_ll() == -1);
  BigInt::divmod(BigInt(7), BigInt(-2), q, r);
  CHECK(q.to_ll() == -3);
  CHECK(r.to_ll() == 1);
  BigInt big = BigInt::parse("340282366920938463463374607431768211456");  // 2^128
  BigInt::divmod(big, BigInt::parse("18446744073709551616"), q, r);       // 2^64
  CHECK(q.str() == "18446744073709551616");
  CHECK(r.is_zero());
  CHECK_THROWS_AS(BigInt::divmod(big, BigInt(0), q, r), grh::DivisionByZero);
}

TEST_CASE("bigint gcd") {
  CHECK(BigInt::gcd(BigInt(48), BigInt(-18)).to_ll() == 6);
  CHECK(BigInt::gcd(BigInt(0), BigInt(-5)).to_ll() == 5);
  BigInt a = BigInt::parse("2305843009213693952");  // 2^61
  BigInt b = BigInt::parse("4611686018427387904");  // 2^62
  CHECK(BigInt::gcd(a, b) == a);
}

TEST_CASE("bigint comparisons") {
  CHECK(BigInt(-3) < BigInt(2));
  CHECK(BigInt(-3) < BigInt(-2));
  CHECK(BigInt::parse("10000000000000000000") > BigInt::parse("9999999999999999999"));
}
