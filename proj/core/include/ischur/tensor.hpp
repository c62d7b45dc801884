#pragma once

#include <map>
#include <string>
#include <vector>

#include "ischur/laurent.hpp"
#include "ischur/schur.hpp"
#include "ischur/theta.hpp"

namespace ischur {

// A basis vector omega_{i_1} x ... x omega_{i_r} of Omega^(x r), letters in
// [1, 2n].
using MultiIndex = std::vector<int>;

std::string index_str(const MultiIndex& i);

// Finite Z[v,v^-1]-linear combination of tensor basis vectors.
class TensorVector {
 public:
  TensorVector(int n, int r) : n_(n), r_(r) {}
  static TensorVector basis(int n, int r, const MultiIndex& i);

  int n() const { return n_; }
  int r() const { return r_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<MultiIndex, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coeff(const MultiIndex& i) const;
  void add_term(const MultiIndex& i, const LaurentPoly& c);

  TensorVector& operator+=(const TensorVector& o);
  TensorVector& operator-=(const TensorVector& o);
  TensorVector operator*(const LaurentPoly& c) const;
  friend TensorVector operator+(TensorVector a, const TensorVector& b) {
    a += b;
    return a;
  }
  friend TensorVector operator-(TensorVector a, const TensorVector& b) {
    a -= b;
    return a;
  }
  friend bool operator==(const TensorVector&, const TensorVector&) = default;

  std::string str() const;

 private:
  int n_;
  int r_;
  std::map<MultiIndex, LaurentPoly> terms_;
};

// All of I(2n, r), in lexicographic order.
std::vector<MultiIndex> enumerate_indices(int n, int r);

// ---------------------------------------------------------------------------
// U(gl_{2n}) acting through the iterated comultiplication.

struct GlGenerator {
  enum class Kind { E, F, K, Kinv };
  Kind kind;
  int index;  // E_h, F_h: h in [1, 2n); K_j, K_j^-1: j in [1, 2n]
};

// One summand c * g_1 g_2 ... g_k of a formal gl expression; the word acts
// right-to-left, so g_k is applied first.
struct GlTerm {
  LaurentPoly scalar;
  std::vector<GlGenerator> word;
};

using GlExpr = std::vector<GlTerm>;

// Action of a single generator on Omega^(x r): E_h and F_h pick up the
// K-tilde twists from Delta^(r-1), K_j^{+-1} scales by v^{+-#{k : i_k = j}}.
TensorVector gl_generator_action(const GlGenerator& g, const TensorVector& x);
TensorVector gl_action(const GlExpr& expr, const TensorVector& x);

// ---------------------------------------------------------------------------
// The coideal subalgebra U^i(n).

struct UiGenerator {
  enum class Kind { D, Dinv, E, F, T };
  Kind kind;
  int index;  // D, Dinv: [1, n]; E, F: [1, n); T: unused (0)

  static UiGenerator d(int j) { return {Kind::D, j}; }
  static UiGenerator dinv(int j) { return {Kind::Dinv, j}; }
  static UiGenerator e(int h) { return {Kind::E, h}; }
  static UiGenerator f(int h) { return {Kind::F, h}; }
  static UiGenerator t() { return {Kind::T, 0}; }

  std::string str() const;
};

// The embedding of a U^i(n) generator into U(gl_{2n}):
//   d_j  -> K_j^-1 K_{2n+1-j}^-1
//   e_h  -> F_h + Ktilde_h^-1 E_{2n-h}
//   f_h  -> E_h Ktilde_{2n-h}^-1 + F_{2n-h}
//   t    -> F_n + v^-1 E_n Ktilde_n^-1 + Ktilde_n^-1
GlExpr iota_image(int n, const UiGenerator& g);

// Closed-form action of a generator on Omega^(x r); agrees with
// gl_action(iota_image(...)) on every basis vector.
TensorVector ui_action_closed(const UiGenerator& g, const TensorVector& x);

// Apply a word of generators right-to-left.
TensorVector ui_action_word(const std::vector<UiGenerator>& word,
                            const TensorVector& x);

// ---------------------------------------------------------------------------
// Right H(C_r) action by place permutation.  For j < r the rule compares
// adjacent letters; for j = r the missing neighbour is i_{r+1} := 2n+1-i_r and
// i.s_r replaces i_r by 2n+1-i_r.
TensorVector hecke_action_tensor(int j, const TensorVector& x);

// ---------------------------------------------------------------------------
// The bridge to S^i(n, r).

// The hat extension of i to length 2n, with 0 marking the empty middle
// columns; requires n >= r.
std::vector<int> hat_index(int n, const MultiIndex& i);

// The matrix A_i with a_{k,l} = 1 iff the hat extension has letter k in
// column l; requires n >= r.  Its column profile is hat(mu0) where
// mu0 = (1^r, 0^{n-r}).
ThetaMatrix a_of_index(int n, const MultiIndex& i);

Composition mu_empty(int n, int r);

// omega_i -> [A_i], extended linearly; requires n >= r.
SchurElement eta(const TensorVector& x);

// The n <= r variant: letters are shifted by r - n into [1, 2r] and the image
// lands in the corner of S^i(r, r) cut out by the column profile hat((1^r)).
SchurElement eta_embedded(const TensorVector& x);

// The element of S^i(N, r) that realizes a generator of U^i(n) under eta
// (N = max(n, r); for n < r the generator indices shift by r - n):
//   d_j -> O(-e_j, r),  e_h -> E^theta_{h+1,h}(0, r),
//   f_h -> E^theta_{h,h+1}(0, r),  t -> E^theta_{n+1,n}(0, r) + O(-e_n, r).
SchurElement schur_generator_image(int n, int r, const UiGenerator& g);

// ---------------------------------------------------------------------------
// Exhaustive desk-scale checkers.  Failures are human-readable descriptions;
// an empty list means every case passed.

struct CheckReport {
  long cases = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// The defining relations (iQG1)-(iQG7) as operator identities on Omega^(x r).
CheckReport check_relations(int n, int r);

// (a) every generator action commutes with every T_{s_j};
// (b) eta intertwines the action with left multiplication by the matching
//     S^i element (through the n < r embedding when needed);
// (c) the closed formulas agree with the comultiplication route.
CheckReport check_commuting_and_match(int n, int r);

// Quadratic, braid and length-four wall braid relations of H(C_r) for the
// place-permutation action.
CheckReport check_tensor_hecke_relations(int n, int r);

}  // namespace ischur
