#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

namespace ischur {

using Int = boost::multiprecision::cpp_int;

// Element of the Laurent polynomial ring Z[v, v^-1].
//
// Canonical form: the exponent -> coefficient map never stores a zero
// coefficient, so value equality is map equality.  Coefficients are
// arbitrary-precision integers; exponents are machine integers.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int c) {
    if (c != 0) c_[0] = c;
  }
  LaurentPoly(Int c) {
    if (c != 0) c_[0] = std::move(c);
  }

  // coeff * v^exp
  static LaurentPoly monomial(Int coeff, int exp);
  static LaurentPoly v(int exp = 1) { return monomial(1, exp); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  const std::map<int, Int>& coeffs() const { return c_; }
  Int coeff(int exp) const;
  int min_exp() const;  // requires a nonzero value
  int max_exp() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  // The ring automorphism v -> v^-1.
  LaurentPoly bar() const;
  // Multiplication by v^k.
  LaurentPoly shifted(int k) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Human-readable form, exponents ascending: "v^-2 + 2 + 3*v".
  std::string str() const;

 private:
  std::map<int, Int> c_;
};

// Exact division in Z[v, v^-1].  exact_div throws std::domain_error when num
// is not a multiple of den; try_exact_div reports failure instead.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);
bool try_exact_div(const LaurentPoly& num, const LaurentPoly& den,
                   LaurentPoly* quot);

}  // namespace ischur
