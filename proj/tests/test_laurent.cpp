#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ischur/laurent.hpp"

using namespace ischur;

TEST_CASE("ring arithmetic") {
  LaurentPoly a = LaurentPoly::v(1) + LaurentPoly::v(-1);
  CHECK(a * a == LaurentPoly::v(2) + LaurentPoly(2) + LaurentPoly::v(-2));
  CHECK(a - a == LaurentPoly());
  CHECK((a - a).is_zero());
  CHECK(LaurentPoly(1).is_one());
  CHECK(a * LaurentPoly() == LaurentPoly());

  LaurentPoly b = LaurentPoly::monomial(-3, 2);
  CHECK(-b == LaurentPoly::monomial(3, 2));
  CHECK(a + b == LaurentPoly::v(-1) + LaurentPoly::v(1) +
                     LaurentPoly::monomial(-3, 2));
}

TEST_CASE("coefficient access and exponent range") {
  LaurentPoly p = LaurentPoly::monomial(2, -3) + LaurentPoly::v(5);
  CHECK(p.coeff(-3) == 2);
  CHECK(p.coeff(0) == 0);
  CHECK(p.min_exp() == -3);
  CHECK(p.max_exp() == 5);
}

TEST_CASE("bar involution") {
  LaurentPoly p = LaurentPoly::v(2) + LaurentPoly::monomial(3, -1);
  CHECK(p.bar() == LaurentPoly::v(-2) + LaurentPoly::monomial(3, 1));
  CHECK(p.bar().bar() == p);
  LaurentPoly q = LaurentPoly::v(1) - LaurentPoly(7);
  CHECK((p * q).bar() == p.bar() * q.bar());
}

TEST_CASE("shifted multiplies by a power of v") {
  LaurentPoly p = LaurentPoly(1) + LaurentPoly::v(1);
  CHECK(p.shifted(3) == p * LaurentPoly::v(3));
  CHECK(p.shifted(-2) == p * LaurentPoly::v(-2));
  CHECK(p.shifted(0) == p);
}

TEST_CASE("exact division") {
  LaurentPoly num = LaurentPoly::v(2) - LaurentPoly::v(-2);
  LaurentPoly den = LaurentPoly::v(1) - LaurentPoly::v(-1);
  CHECK(exact_div(num, den) == LaurentPoly::v(1) + LaurentPoly::v(-1));

  LaurentPoly out;
  CHECK(try_exact_div(num, den, &out));
  CHECK(out * den == num);

  LaurentPoly bad = LaurentPoly::v(1) + LaurentPoly(1);
  LaurentPoly bden = LaurentPoly::v(1) - LaurentPoly(1);
  CHECK_FALSE(try_exact_div(bad, bden, &out));
  CHECK_THROWS_AS((void)exact_div(bad, bden), std::domain_error);
  CHECK_THROWS_AS((void)exact_div(num, LaurentPoly()), std::domain_error);
}

TEST_CASE("coefficients are arbitrary precision") {
  // (1 + v)^64 by repeated squaring; the central coefficient is C(64,32),
  // which overflows 32-bit and fills most of 64-bit.
  LaurentPoly p = LaurentPoly(1) + LaurentPoly::v(1);
  for (int k = 0; k < 6; ++k) p = p * p;
  CHECK(p.coeff(32) == Int("1832624140942590534"));
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(64) == 1);
  CHECK(p.min_exp() == 0);
  CHECK(p.max_exp() == 64);
}
