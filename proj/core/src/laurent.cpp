#include "ischur/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace ischur {

LaurentPoly LaurentPoly::monomial(Int coeff, int exp) {
  LaurentPoly p;
  if (coeff != 0) p.c_[exp] = std::move(coeff);
  return p;
}

bool LaurentPoly::is_one() const {
  return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
}

Int LaurentPoly::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? Int(0) : it->second;
}

int LaurentPoly::min_exp() const {
  if (c_.empty()) throw std::domain_error("min_exp of zero polynomial");
  return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (c_.empty()) throw std::domain_error("max_exp of zero polynomial");
  return c_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) {
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) c_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) {
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_[e] = -c;
    } else {
      it->second -= c;
      if (it->second == 0) c_.erase(it);
    }
  }
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) r.c_[e] = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.c_) {
    for (const auto& [eb, cb] : b.c_) {
      int e = ea + eb;
      auto it = r.c_.find(e);
      if (it == r.c_.end()) {
        Int prod = ca * cb;
        if (prod != 0) r.c_[e] = std::move(prod);
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.c_.erase(it);
      }
    }
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) r.c_[-e] = c;
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) r.c_[e + k] = c;
  return r;
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (e == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "v";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

bool try_exact_div(const LaurentPoly& num, const LaurentPoly& den,
                   LaurentPoly* quot) {
  if (den.is_zero()) return false;
  if (num.is_zero()) {
    if (quot) *quot = LaurentPoly();
    return true;
  }
  // Normalize both operands to honest polynomials (minimum exponent 0) and do
  // plain long division; the unit shift is reapplied to the quotient.
  int shift = num.min_exp() - den.min_exp();
  LaurentPoly rem = num.shifted(-num.min_exp());
  LaurentPoly d = den.shifted(-den.min_exp());
  int dd = d.max_exp();
  Int dlead = d.coeff(dd);
  LaurentPoly q;
  while (!rem.is_zero()) {
    int rd = rem.max_exp();
    if (rd < dd) return false;
    Int rlead = rem.coeff(rd);
    if (rlead % dlead != 0) return false;
    LaurentPoly term = LaurentPoly::monomial(rlead / dlead, rd - dd);
    q += term;
    rem -= term * d;
  }
  if (quot) *quot = q.shifted(shift);
  return true;
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  LaurentPoly q;
  if (!try_exact_div(num, den, &q))
    throw std::domain_error("exact_div: " + num.str() +
                            " is not divisible by " + den.str());
  return q;
}

}  // namespace ischur
