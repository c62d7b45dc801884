#pragma once

#include <map>

#include "ischur/laurent.hpp"
#include "ischur/theta.hpp"
#include "ischur/weyl.hpp"

namespace ischur {

// Element of the Hecke algebra H(C_r) over Z[v, v^-1] with q = v^2, stored on
// the T_w basis.  The defining relations are T_s T_w = T_{sw} when
// l(sw) = l(w) + 1 and T_s T_w = (q-1) T_w + q T_{sw} otherwise.
class HeckeElement {
 public:
  explicit HeckeElement(int rank) : rank_(rank) {}
  static HeckeElement unit(int rank);
  static HeckeElement basis(const WeylElement& w);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<WeylElement, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coeff(const WeylElement& w) const;
  void add_term(const WeylElement& w, const LaurentPoly& c);

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  HeckeElement operator*(const LaurentPoly& c) const;
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) {
    a += b;
    return a;
  }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) {
    a -= b;
    return a;
  }
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

  // Right multiplication by T_{s_j}.
  HeckeElement times_gen(int j) const;
  // Right multiplication by T_w (w factored into a reduced word).
  HeckeElement times_basis(const WeylElement& w) const;

  std::string str() const;

 private:
  int rank_;
  std::map<WeylElement, LaurentPoly> terms_;
};

HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b);

// x_la = sum of T_w over the parabolic subgroup W_la.
HeckeElement x_lambda(const Composition& la, int rank);

// T_X = sum of T_w over a subset X.
HeckeElement subset_sum(const std::vector<WeylElement>& xs, int rank);

// Element of the component x_la H of the tensor-space module T(n,r).
struct ModuleElement {
  Composition la;
  HeckeElement value;
};

// Writes m in the basis {x_la T_d : d in D_la}: reads the coefficient at the
// minimal representative of each coset W_la w meeting the support, then
// verifies the residual vanishes.  Throws std::invalid_argument otherwise.
std::map<WeylElement, LaurentPoly> module_decompose(const Composition& la,
                                                    const HeckeElement& m);

// The right H-module map phi^d_{la,mu} attached to A = m(la, d, mu), applied
// to m in component nu: zero unless nu = mu, otherwise x_mu T_d' maps to
// T_{W_la d W_mu} T_d'.  The result lives in component la.
ModuleElement phi_apply(const ThetaMatrix& a, const ModuleElement& m);
ModuleElement phi_apply(const Triple& t, const ModuleElement& m, int n);

}  // namespace ischur
