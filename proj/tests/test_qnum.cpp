#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ischur/qnum.hpp"

using namespace ischur;

namespace {
const LaurentPoly q = LaurentPoly::v(2);  // q = v^2
}

TEST_CASE("balanced brackets") {
  CHECK(bracket(0) == LaurentPoly());
  CHECK(bracket(1) == LaurentPoly(1));
  CHECK(bracket(2) == LaurentPoly::v(1) + LaurentPoly::v(-1));
  CHECK(bracket(3) ==
        LaurentPoly::v(2) + LaurentPoly(1) + LaurentPoly::v(-2));
  for (int n = -4; n <= 4; ++n) {
    CHECK(bracket(-n) == -bracket(n));
    CHECK(bracket(n).bar() == bracket(n));  // bar-invariant
  }
}

TEST_CASE("one-sided brackets") {
  CHECK(bbracket(0) == LaurentPoly());
  CHECK(bbracket(1) == LaurentPoly(1));
  CHECK(bbracket(3) == LaurentPoly(1) + q + q * q);
  // [[n]] = v^(n-1) [n]
  for (int n = 0; n <= 5; ++n)
    CHECK(bbracket(n) == bracket(n).shifted(n - 1));
}

TEST_CASE("Gaussian binomials") {
  CHECK(gauss_binom(4, 0) == LaurentPoly(1));
  CHECK(gauss_binom(4, 4) == LaurentPoly(1));
  CHECK(gauss_binom(4, 5) == LaurentPoly());
  CHECK(gauss_binom(4, 2) ==
        LaurentPoly(1) + q + q * q * LaurentPoly(2) + q * q * q +
            q * q * q * q);
  // Pascal: [[n over m]] = [[n-1 over m-1]] + q^m [[n-1 over m]]
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= n; ++m)
      CHECK(gauss_binom(n, m) ==
            gauss_binom(n - 1, m - 1) +
                LaurentPoly::v(2 * m) * gauss_binom(n - 1, m));
  CHECK_THROWS(gauss_binom(-1, 1));
}

TEST_CASE("balanced binomials") {
  // [n over m] = v^{-m(n-m)} [[n over m]] for n >= 0; bar-invariant.
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= n; ++m) {
      CHECK(balanced_binom(n, m) == gauss_binom(n, m).shifted(-m * (n - m)));
      CHECK(balanced_binom(n, m).bar() == balanced_binom(n, m));
    }
  // [n over 1] = [n] for every integer n, including negatives.
  for (int n = -3; n <= 3; ++n)
    CHECK(balanced_binom(n, 1) == bracket(n));
  CHECK(balanced_binom(-2, 0) == LaurentPoly(1));
  CHECK(balanced_binom(2, 1) == bracket(2));
}

TEST_CASE("q-factorials") {
  CHECK(qfactorial(0) == LaurentPoly(1));
  CHECK(qfactorial(1) == LaurentPoly(1));
  CHECK(qfactorial(3) == bracket(1) * bracket(2) * bracket(3));
  // [n over m] [m]! [n-m]! = [n]! for a balanced-binomial cross-check.
  CHECK(balanced_binom(5, 2) * qfactorial(2) * qfactorial(3) ==
        qfactorial(5));
}
