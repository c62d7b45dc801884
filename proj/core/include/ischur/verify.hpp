#pragma once

#include <string>
#include <vector>

#include "ischur/schur.hpp"

namespace ischur {

// Grid parameters for a verification suite.  Fields a suite does not use are
// ignored: mmax bounds multiplicities/powers, jbox the coordinate box for the
// exponent vectors j, amax the entry sum of the off-diagonal matrices in the
// long-form sweeps, rset the evaluation points of the stability suite.
// perturb injects a deliberate coefficient error into the formal layer of the
// stability suite, so a correct run must report failures (negative control).
struct SuiteParams {
  int n = 2;
  int r = 2;
  int mmax = 3;
  int jbox = 1;
  int amax = 4;
  std::vector<int> rset;  // stability only; empty means {1, 2, 3}
  bool perturb = false;
  int threads = 0;  // 0: ISCHUR_THREADS, then hardware
};

// One failed case, with both sides expanded in full.
struct CaseFailure {
  std::string input;
  std::string lhs;
  std::string rhs;
};

// Outcome of one suite run.  `failed` counts every failing case; `failures`
// keeps the first few (in enumeration order) with complete expansions.
struct SuiteReport {
  std::string suite;
  SuiteParams params;
  long cases = 0;
  long failed = 0;
  std::vector<CaseFailure> failures;
  long wall_ms = 0;
  bool ok() const { return failed == 0; }
};

// Names of the available suites, in canonical order.
const std::vector<std::string>& suite_names();

// |Xi_{2n,2r}| without enumeration: one value per centro-symmetric orbit of
// the 2n x 2n cells (2n^2 orbits, no fixed cells), orbit values summing to r.
unsigned long long xi_size(int n, int r);

// Runs one suite; throws std::invalid_argument for an unknown name or
// out-of-range parameters.
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

// Closed-formula product dispatch: multiplies [lhs][rhs] when lhs is a weight
// idempotent diag(hat la) or diag(hat la) + m E^th_{i,j} with |i - j| = 1.
// Throws std::invalid_argument when no closed formula covers lhs.
SchurElement formula_product(const SchurContext& ctx, const ThetaMatrix& lhs,
                             const ThetaMatrix& rhs);

}  // namespace ischur
