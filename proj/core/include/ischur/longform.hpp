#pragma once

#include <map>
#include <string>
#include <vector>

#include "ischur/laurent.hpp"
#include "ischur/schur.hpp"
#include "ischur/theta.hpp"

namespace ischur {

// Rational function in v, kept as a num/den pair over Z[v, v^-1].  The long
// multiplication formulas put 1/(v - v^-1) in front of individual terms, and
// the wall divided-power expansion needs coefficients in Q(v), so Laurent
// polynomials alone do not suffice for the formal layer.  Reduction is
// opportunistic (exact division either way); equality cross-multiplies.
class RatFunc {
 public:
  RatFunc() : num_(0), den_(1) {}
  RatFunc(LaurentPoly num) : num_(std::move(num)), den_(1) {}
  RatFunc(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { a += b; return a; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { a -= b; return a; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { a *= b; return a; }
  RatFunc operator-() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  bool is_laurent() const;
  // Throws std::domain_error when the denominator does not divide out.
  LaurentPoly to_laurent() const;

  std::string str() const;

 private:
  LaurentPoly num_, den_;
  void reduce();
};

// j -> j* = (j_1 + j_2n, j_2 + j_{2n-1}, ..., j_n + j_{n+1}).  The long
// elements A(j, r) only see j through this fold, so keys store j* alone.
std::vector<int> fold_j(const std::vector<int>& j);

// A basis label A(j): a zero-diagonal centro-symmetric matrix together with
// the folded exponent vector j* (length n).
struct LongKey {
  ThetaMatrix a;
  std::vector<int> jstar;
  friend auto operator<=>(const LongKey&, const LongKey&) = default;
};

// Finite formal combination of long elements with RatFunc coefficients.
// Everything here is independent of r; evaluate() specializes.
class LongCombination {
 public:
  explicit LongCombination(int n) : n_(n) {}

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<LongKey, RatFunc>& terms() const { return terms_; }

  // j may be given in full length 2n or already folded to length n.
  void add_term(const ThetaMatrix& a, const std::vector<int>& j, const RatFunc& c);
  RatFunc coeff(const ThetaMatrix& a, const std::vector<int>& j) const;

  LongCombination& operator+=(const LongCombination& o);
  LongCombination& operator-=(const LongCombination& o);
  LongCombination operator*(const RatFunc& c) const;
  friend LongCombination operator+(LongCombination a, const LongCombination& b) {
    a += b;
    return a;
  }
  friend LongCombination operator-(LongCombination a, const LongCombination& b) {
    a -= b;
    return a;
  }
  friend bool operator==(const LongCombination& a, const LongCombination& b);

  std::string str() const;

 private:
  int n_;
  std::map<LongKey, RatFunc> terms_;
};

// A single long element as a combination; j of length 2n or n.
LongCombination long_basis(int n, const ThetaMatrix& a, const std::vector<int>& j);
// (0)(0): evaluates to the identity of every S^i(n, r).
LongCombination long_unit(int n);

// A(j, r) = sum_{la in Lambda(n, r - |A|/2)} v^{hat(la).j} [A + diag(hat la)],
// zero when |A| > 2r.  A must be zero-diagonal; j has length 2n or n.
SchurElement long_element(int n, const ThetaMatrix& a, const std::vector<int>& j,
                          int r);
// Linear extension; every accumulated coefficient must come out polynomial.
SchurElement evaluate(const LongCombination& x, int r);

// Left/right multiplication by O(j) = prod d_i^{j_i}:
//   O(j) A(j') = v^{ro(A).j} A(j + j'),   A(j') O(j) = v^{co(A).j} A(j + j').
LongCombination apply_O(const std::vector<int>& j, const LongCombination& x);
LongCombination apply_O_right(const LongCombination& x, const std::vector<int>& j);

// Left multiplication by E^th_{h,h+1}(0) / E^th_{h+1,h}(0) for h < n, and by
// the wall element E^th_{n,n+1}(0) = E^th_{n+1,n}(0).
LongCombination apply_e(int h, const LongCombination& x);
LongCombination apply_f(int h, const LongCombination& x);
LongCombination apply_wall(const LongCombination& x);

// E^th_{n,n+1}(0)^m / [m]!, expanded as (m E)(0) plus lower multiples of the
// wall matrix with explicit folded shifts.  Throws std::logic_error if the
// expansion ever leaves the span of wall multiples or the leading coefficient
// is not 1 (that shape is the content of the divided-power corollary).
LongCombination t_power_expand(int n, int m);

// (m E^th_{n,n+1})(0) * A(j) as a formal combination, by unwinding
// t_power_expand: base case m = 0 returns A(j).
LongCombination wall_multiple_mul(int n, int m, const ThetaMatrix& a,
                                  const std::vector<int>& j);

// prod_{i=1}^{n} [k_{i,r}; 0 over la_i] evaluated inside S^i(n, r), where
// k_{i,r} = O(e_i, r).  Equals the weight idempotent [diag(hat la)].
SchurElement k_binomial(const Composition& la, int r);

}  // namespace ischur
