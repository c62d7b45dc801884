#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ischur/hecke.hpp"
#include "ischur/laurent.hpp"
#include "ischur/qnum.hpp"
#include "ischur/theta.hpp"

namespace ischur {

// Element of the q-Schur algebra of type C at (n, r), expanded over the
// normalized basis {[A] : A in Xi_{2n,2r}}.
class SchurElement {
 public:
  SchurElement(int n, int r) : n_(n), r_(r) {}

  int n() const { return n_; }
  int r() const { return r_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<ThetaMatrix, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coeff(const ThetaMatrix& a) const;
  void add_term(const ThetaMatrix& a, const LaurentPoly& c);

  SchurElement& operator+=(const SchurElement& o);
  SchurElement& operator-=(const SchurElement& o);
  SchurElement operator*(const LaurentPoly& c) const;
  friend SchurElement operator+(SchurElement a, const SchurElement& b) {
    a += b;
    return a;
  }
  friend SchurElement operator-(SchurElement a, const SchurElement& b) {
    a -= b;
    return a;
  }
  friend bool operator==(const SchurElement&, const SchurElement&) = default;

  // Coefficient-wise exact division; throws std::domain_error if inexact.
  SchurElement exact_divided(const LaurentPoly& den) const;

  std::string str() const;

 private:
  int n_, r_;
  std::map<ThetaMatrix, LaurentPoly> terms_;
};

// beta_p(A, h)  = sum_{j >= p} a(h,j)   - sum_{j > p} a(h+1,j)
// beta'_p(A, h) = sum_{j <= p} a(h+1,j) - sum_{j < p} a(h,j)
int beta_p(const ThetaMatrix& a, int h, int p);
int beta_prime_p(const ThetaMatrix& a, int h, int p);

// c_A = v^{-sum_{j<=n} a(n,j)} (v^{sum_{j<=n} a(n+1,j)} - v^{-sum_{j<=n} a(n+1,j)})
LaurentPoly c_coeff(const ThetaMatrix& a);

enum class ShortKind { Up, Down, Wall };  // E^th_{h,h+1}, E^th_{h+1,h}, E^th_{n+1,n}

// Per-(n, r) context: the basis of Xi_{2n,2r}, the triple bijection, the
// normalization exponents, and memoized products.  Thread-safe; contexts are
// cached process-wide.
class SchurContext {
 public:
  static const SchurContext& get(int n, int r);

  int n() const { return n_; }
  int r() const { return r_; }
  const std::vector<ThetaMatrix>& basis() const { return basis_; }
  int basis_index(const ThetaMatrix& a) const;
  const Triple& triple_of(const ThetaMatrix& a) const;
  // Exponent of the normalization [A] = v^{-l(d+) + l(w_{mu,0})} phi_A.
  int norm_exponent(const ThetaMatrix& a) const;

  SchurElement zero() const { return SchurElement(n_, r_); }
  SchurElement basis_element(const ThetaMatrix& a) const;
  // Identity: sum of the weight idempotents [diag(hat(la))].
  SchurElement unit() const;
  SchurElement weight_idempotent(const Composition& la) const;

  // [A] [B] through the Hecke model: composes the module maps phi_A phi_B on
  // x_nu H and re-expands in the phi basis.  This is the brute-force route
  // every closed formula is tested against.
  SchurElement oracle_product(const ThetaMatrix& a, const ThetaMatrix& b) const;

  // Bilinear extension of oracle_product with a memo table.  The closed
  // formulas below never consult this cache.
  SchurElement product(const SchurElement& x, const SchurElement& y) const;

  // One-step closed multiplication formulas:
  //   Up:   [E^th_{h,h+1} + diag(hat la)] [A], la in Lambda(n, r-1), h < n
  //   Down: [E^th_{h+1,h} + diag(hat la)] [A]
  //   Wall: [E^th_{n+1,n} + diag(hat la)] [A]  (h ignored)
  SchurElement short_mul(ShortKind kind, int h, const Composition& la,
                         const ThetaMatrix& a) const;

  // Multi-step closed formulas for [m E^th_{h,h+1} + diag(hat la)] [A] (up)
  // and [m E^th_{h+1,h} + diag(hat la)] [A] (down), h < n, la in
  // Lambda(n, r-m).
  SchurElement multi_mul(bool up, int h, int m, const Composition& la,
                         const ThetaMatrix& a) const;

  // The triangular monomial m(A): the ordered product of the chain factors
  // [D_{i,h,j} + a(i,j) E^th_{h+1,h}] over the index set
  // {(i,h,j) : 1 <= j <= h < i <= 2n}.  Also exposes the factors so that the
  // wall-replacement checks can perturb them.
  struct MonomialFactor {
    int i, h, j;            // chain position
    ThetaMatrix matrix;     // D_{i,h,j} + a(i,j) E^th_{h+1,h}
    int multiplicity;       // a(i,j)
  };
  std::vector<MonomialFactor> monomial_factors(const ThetaMatrix& a) const;
  SchurElement triangular_monomial(const ThetaMatrix& a) const;
  SchurElement product_of_factors(const std::vector<ThetaMatrix>& fs) const;

  // A linear extension of the strict part of the preorder (lexicographic
  // tie-break), suitable for triangular transition matrices.
  std::vector<ThetaMatrix> topological_order() const;

 private:
  SchurContext(int n, int r);
  int n_, r_;
  std::vector<ThetaMatrix> basis_;
  std::vector<Triple> triples_;
  mutable std::vector<int> norm_;  // norm exponent per basis index (-1: unset)
  mutable std::vector<char> norm_set_;
  mutable std::map<std::pair<int, int>, SchurElement> prod_cache_;
  mutable std::mutex mu_;
};

// The index chain {(i,h,j) : 1 <= j <= h < i <= N} in its multiplication
// order: i ascending, then j ascending, then h descending.
std::vector<std::array<int, 3>> monomial_chain(int N);

}  // namespace ischur
