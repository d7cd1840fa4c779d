#include "fdalg/field.hpp"

#include "doctest.h"

#include <stdexcept>

using namespace fdalg;

TEST_CASE("rational scalars normalize and round-trip") {
  Field q = Field::rationals();
  CHECK(q.from_fraction(2, 4) == q.from_fraction(1, 2));
  CHECK(q.from_fraction(-3, -6) == q.from_fraction(1, 2));
  CHECK(q.from_string("3/2") == q.from_fraction(3, 2));
  CHECK(q.from_string("-12") == q.from_int(-12));
  CHECK(q.from_string("-12").str() == "-12");
  CHECK(q.from_fraction(10, -4).str() == "-5/2");
  CHECK(q.zero().is_zero());
  CHECK(q.one().is_one());
  CHECK(q.name() == "Q");
}

TEST_CASE("rational arithmetic is exact") {
  Field q = Field::rationals();
  Scalar a = q.from_fraction(1, 3);
  Scalar b = q.from_fraction(1, 6);
  CHECK(a + b == q.from_fraction(1, 2));
  CHECK(a - b == b);
  CHECK(a * b == q.from_fraction(1, 18));
  CHECK(a / b == q.from_int(2));
  CHECK((-a) + a == q.zero());
  CHECK(a.inv() == q.from_int(3));
  CHECK_THROWS_AS(q.zero().inv(), std::domain_error);
}

TEST_CASE("prime field validation") {
  CHECK_THROWS_AS(Field::prime(1), std::invalid_argument);
  CHECK_THROWS_AS(Field::prime(4), std::invalid_argument);
  CHECK_THROWS_AS(Field::prime(2147483648u), std::invalid_argument);  // 2^31
  CHECK(Field::prime(2).characteristic() == 2);
  CHECK(Field::prime(13).name() == "F13");
  CHECK(Field::prime(2147483647u).characteristic() == 2147483647u);  // largest allowed prime
}

TEST_CASE("prime field arithmetic") {
  Field f = Field::prime(13);
  CHECK(f.from_int(15) == f.from_int(2));
  CHECK(f.from_int(-1) == f.from_int(12));
  CHECK(f.from_int(5) + f.from_int(9) == f.from_int(1));
  CHECK(f.from_int(5) * f.from_int(8) == f.from_int(1));
  CHECK(f.from_int(5).inv() == f.from_int(8));
  CHECK(f.from_fraction(1, 2) == f.from_int(7));  // 2*7 = 14 = 1
  CHECK(f.from_string("3/2") == f.from_int(8));   // 3 * 7
  Field big = Field::prime(2147483647u);
  // (p-1)^2 mod p = 1: exercises the widest intermediate product.
  CHECK(big.from_int(-1) * big.from_int(-1) == big.one());
}

TEST_CASE("scalars from different fields refuse to mix") {
  Field q = Field::rationals();
  Field f5 = Field::prime(5);
  Field f7 = Field::prime(7);
  CHECK_THROWS_AS(q.one() + f5.one(), std::logic_error);
  CHECK_THROWS_AS(f5.one() * f7.one(), std::logic_error);
  CHECK(q != f5);
  CHECK(f5 != f7);
  CHECK(f5 == Field::prime(5));
}

TEST_CASE("from_string rejects malformed input") {
  Field q = Field::rationals();
  CHECK_THROWS_AS(q.from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(q.from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(q.from_string("a"), std::invalid_argument);
  CHECK_THROWS_AS(q.from_string("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(q.from_string("1/2/3"), std::invalid_argument);
  Field f5 = Field::prime(5);
  CHECK_THROWS_AS(f5.from_string("1/5"), std::domain_error);  // denominator is 0 mod 5
}
