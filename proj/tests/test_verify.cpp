#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "ischur/verify.hpp"

using namespace ischur;

TEST_CASE("xi_size closed form") {
  for (auto [n, r, expect] :
       {std::array<long long, 3>{1, 1, 2}, {1, 2, 3}, {2, 1, 8}, {2, 2, 36},
        {2, 3, 120}, {3, 2, 171}, {3, 3, 1140}, {4, 4, 52360}}) {
    CHECK(xi_size(static_cast<int>(n), static_cast<int>(r)) ==
          static_cast<unsigned long long>(expect));
    if (expect <= 1140)
      CHECK(enumerate_xi(static_cast<int>(n), static_cast<int>(r)).size() ==
            static_cast<std::size_t>(expect));
  }
}

TEST_CASE("suite registry and parameter validation") {
  auto names = suite_names();
  CHECK(names.size() == 10);
  CHECK(std::find(names.begin(), names.end(), "short") != names.end());
  CHECK(std::find(names.begin(), names.end(), "stability") != names.end());

  SuiteParams p;
  p.n = 1;
  p.r = 2;
  CHECK_THROWS_AS((void)run_suite("no-such-suite", p), std::invalid_argument);

  SuiteParams bad = p;
  bad.n = 5;
  CHECK_THROWS_AS((void)run_suite("kbinom", bad), std::invalid_argument);
  bad.n = 4;
  bad.r = 4;  // basis would have 52360 elements; refused up front
  CHECK_THROWS_AS((void)run_suite("kbinom", bad), std::invalid_argument);
  bad = p;
  bad.mmax = -1;
  CHECK_THROWS_AS((void)run_suite("kbinom", bad), std::invalid_argument);
}

TEST_CASE("a small suite runs green") {
  SuiteParams p;
  p.n = 1;
  p.r = 2;
  SuiteReport rep = run_suite("kbinom", p);
  CHECK(rep.suite == "kbinom");
  CHECK(rep.cases > 0);
  CHECK(rep.failed == 0);
  CHECK(rep.ok());
}

TEST_CASE("worker count does not change the report") {
  SuiteParams p;
  p.n = 1;
  p.r = 2;
  p.amax = 2;
  p.threads = 1;
  SuiteReport serial = run_suite("long", p);
  p.threads = 4;
  SuiteReport parallel = run_suite("long", p);
  CHECK(serial.cases == parallel.cases);
  CHECK(serial.failed == parallel.failed);
  CHECK(serial.ok());
  CHECK(parallel.ok());
}

TEST_CASE("perturbed stability is caught with evidence") {
  SuiteParams p;
  p.n = 1;
  p.r = 1;
  p.amax = 2;
  p.rset = {1, 2};
  p.perturb = true;
  SuiteReport rep = run_suite("stability", p);
  CHECK(rep.failed > 0);
  REQUIRE(!rep.failures.empty());
  CHECK(!rep.failures.front().input.empty());
  CHECK(!rep.failures.front().lhs.empty());
  CHECK(!rep.failures.front().rhs.empty());

  p.perturb = false;
  CHECK(run_suite("stability", p).ok());
}

TEST_CASE("single-step formula dispatch") {
  const SchurContext& ctx = SchurContext::get(1, 1);
  ThetaMatrix e = ThetaMatrix::e_theta(1, 1, 2);
  ThetaMatrix d = ThetaMatrix::diag({1, 1});
  CHECK(formula_product(ctx, e, e) == ctx.oracle_product(e, e));
  CHECK(formula_product(ctx, d, e) == ctx.basis_element(e));
  CHECK(formula_product(ctx, d, d) == ctx.basis_element(d));

  // left factors outside the one-hook shape are refused, not mis-multiplied
  const SchurContext& c2 = SchurContext::get(2, 2);
  ThetaMatrix far = ThetaMatrix::diag({1, 0, 0, 1}).plus_e_theta(1, 3, 1);
  CHECK_THROWS_AS(
      (void)formula_product(c2, far, ThetaMatrix::diag(far.col_sums())),
      std::invalid_argument);
  ThetaMatrix wall2 = ThetaMatrix::e_theta(2, 3, 2, 2);
  CHECK_THROWS_AS(
      (void)formula_product(c2, wall2, ThetaMatrix::diag(wall2.col_sums())),
      std::invalid_argument);
}
