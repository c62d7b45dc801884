#pragma once

#include <compare>
#include <vector>

#include <string>

#include "ischur/weyl.hpp"

namespace ischur {

// Centro-symmetric natural 2n x 2n matrix: a(i,j) = a(2n+1-i, 2n+1-j) with
// nonnegative integer entries.  Those with entry sum 2r index the basis of
// the Schur algebra at (n, r).
class ThetaMatrix {
 public:
  explicit ThetaMatrix(int n);  // zero matrix
  static ThetaMatrix from_rows(int n, const std::vector<std::vector<int>>& rows);
  // m * E^theta_{i,j} where E^theta_{i,j} = E_{i,j} + E_{2n+1-i,2n+1-j}.
  // Note E^theta_{n,n+1} == E^theta_{n+1,n}.
  static ThetaMatrix e_theta(int n, int i, int j, int m = 1);
  // diag(d) for a centro-symmetric vector d of size 2n.
  static ThetaMatrix diag(const std::vector<int>& d);

  int n() const { return n_; }
  int dim() const { return 2 * n_; }
  int at(int i, int j) const { return a_[(i - 1) * 2 * n_ + (j - 1)]; }
  // A + m * E^theta_{i,j}; throws if an entry would go negative.
  ThetaMatrix plus_e_theta(int i, int j, int m) const;
  ThetaMatrix plus_diag(const std::vector<int>& d) const;

  std::vector<int> row_sums() const;  // ro(A)
  std::vector<int> col_sums() const;  // co(A)
  int total() const;                  // |A|
  bool is_diagonal() const;
  bool has_zero_diagonal() const;
  ThetaMatrix off_diagonal_part() const;
  std::vector<int> diagonal() const;

  friend auto operator<=>(const ThetaMatrix&, const ThetaMatrix&) = default;

  std::string str() const;

 private:
  int n_;
  std::vector<int> a_;  // row-major
};

// e^theta_i = e_i + e_{2n+1-i} as a vector of size 2n.
std::vector<int> e_theta_vec(int n, int i);

// All of Xi_{2n,2r} (entry sum 2r), sorted lexicographically on the row-major
// entry vector.
std::vector<ThetaMatrix> enumerate_xi(int n, int r);

// All zero-diagonal elements of Xi_2n with |A| <= max_total, sorted.
std::vector<ThetaMatrix> enumerate_xi_zero_diag(int n, int max_total);

// The partial preorder on Xi: A <= B iff for all 1 <= u < v <= 2n the corner
// sums sum_{i<=u, j>=v} a(i,j) are dominated by those of B.
bool preorder_leq(const ThetaMatrix& a, const ThetaMatrix& b);
// Equivalent two-condition form restricted to u <= n (checked in tests).
bool preorder_leq_alt(const ThetaMatrix& a, const ThetaMatrix& b);
bool preorder_lt(const ThetaMatrix& a, const ThetaMatrix& b);

// The matrix of a triple (la, d, mu) with la, mu in Lambda(n, r) and d a
// minimal double coset representative: a(i,j) = |R_i ∩ d(C_j)| for the row
// blocks R of hat(la) and column blocks C of hat(mu) in {1, ..., 2r}.
ThetaMatrix matrix_of_triple(const Composition& la, const WeylElement& d,
                             const Composition& mu, int n);

struct Triple {
  Composition la;
  WeylElement d;
  Composition mu;
};

// Inverse of matrix_of_triple; searches D_{la,mu}.  Throws when A is not a
// valid centro-symmetric matrix with palindromic marginals.
Triple triple_of_matrix(const ThetaMatrix& a);

}  // namespace ischur
