#include "fdalg/pencil.hpp"

#include "doctest.h"
#include "helpers.hpp"

using namespace fdalg;
using fdalg::testing::mat_of;

TEST_CASE("a pencil with an obvious nonsingular member is found at once") {
  Field q = Field::rationals();
  Rng rng(1);
  PencilSearch s = find_nonsingular(q, {Mat::identity(q, 3)}, rng, 8);
  REQUIRE(s.found());
  CHECK(s.evidence.trials == 1);
  Mat member = Mat::identity(q, 3).scaled((*s.coeffs)[0]);
  CHECK_FALSE(member.det().is_zero());
}

TEST_CASE("an identically singular pencil over Q reports the trial bound") {
  Field q = Field::rationals();
  // Both generators kill e_2, so every member is singular.
  Mat g1 = mat_of(q, {{"1", "0"}, {"0", "0"}});
  Mat g2 = mat_of(q, {{"0", "0"}, {"0", "0"}});
  Rng rng(1);
  PencilSearch s = find_nonsingular(q, {g1, g2}, rng, 8);
  CHECK_FALSE(s.found());
  CHECK_FALSE(s.evidence.exhaustive);
  CHECK(s.evidence.trials == 8);
  mpq_class per(2);
  per /= mpq_class(mpz_class(1) + (mpz_class(1) << 60));
  mpq_class expected(1);
  for (int i = 0; i < 8; ++i) expected *= per;
  CHECK(s.evidence.failure_bound == expected);
}

TEST_CASE("small prime pencils get exhaustive certificates") {
  Field f3 = Field::prime(3);
  Mat g1 = mat_of(f3, {{"1", "0"}, {"0", "0"}});
  Mat g2 = mat_of(f3, {{"0", "0"}, {"0", "0"}});
  Rng rng(1);
  PencilSearch none = find_nonsingular(f3, {g1, g2}, rng, 8);
  CHECK_FALSE(none.found());
  CHECK(none.evidence.exhaustive);
  CHECK(none.evidence.candidates == 9);  // all of F_3^2 was scanned

  // Needs both coefficients nonzero: random trials may find it, but if they
  // do not the exhaustive pass must.
  Mat h1 = mat_of(f3, {{"1", "0"}, {"0", "0"}});
  Mat h2 = mat_of(f3, {{"0", "0"}, {"0", "1"}});
  PencilSearch some = find_nonsingular(f3, {h1, h2}, rng, 2);
  REQUIRE(some.found());
  Mat member = h1.scaled((*some.coeffs)[0]) + h2.scaled((*some.coeffs)[1]);
  CHECK_FALSE(member.det().is_zero());
}

TEST_CASE("degenerate pencils") {
  Field q = Field::rationals();
  Rng rng(1);
  PencilSearch empty = find_nonsingular(q, {}, rng, 8);
  CHECK_FALSE(empty.found());
  CHECK(empty.evidence.exhaustive);

  PencilSearch zero_by_zero = find_nonsingular(q, {Mat(q, 0, 0)}, rng, 8);
  CHECK(zero_by_zero.found());  // the empty matrix is invertible
}

TEST_CASE("prime pencils beyond the enumeration budget fall back to sampling") {
  Field f = Field::prime(2147483647u);
  std::vector<Mat> gens;
  for (int k = 0; k < 3; ++k) gens.push_back(Mat(f, 2, 2));  // all zero
  Rng rng(1);
  PencilSearch s = find_nonsingular(f, gens, rng, 4);
  CHECK_FALSE(s.found());
  CHECK_FALSE(s.evidence.exhaustive);  // p^3 is far past the enumeration limit
  mpq_class per(2);
  per /= mpq_class(2147483647);
  mpq_class expected(1);
  for (int i = 0; i < 4; ++i) expected *= per;
  CHECK(s.evidence.failure_bound == expected);
}
