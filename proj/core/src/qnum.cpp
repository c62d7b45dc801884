#include "ischur/qnum.hpp"

#include <stdexcept>

namespace ischur {

LaurentPoly bracket(int n) {
  if (n == 0) return LaurentPoly();
  bool neg = n < 0;
  int m = neg ? -n : n;
  // [m] = v^(m-1) + v^(m-3) + ... + v^(1-m)
  LaurentPoly r;
  for (int e = 1 - m; e <= m - 1; e += 2) r += LaurentPoly::v(e);
  return neg ? -r : r;
}

LaurentPoly bbracket(int n) {
  if (n < 0) throw std::invalid_argument("bbracket: n must be >= 0");
  LaurentPoly r;
  for (int k = 0; k < n; ++k) r += LaurentPoly::v(2 * k);
  return r;
}

LaurentPoly gauss_binom(int n, int m) {
  if (n < 0) throw std::invalid_argument("gauss_binom: n must be >= 0");
  if (m < 0) return LaurentPoly();
  if (m == 0) return LaurentPoly(1);
  auto qpow_minus_1 = [](int k) {  // q^k - 1
    return LaurentPoly::v(2 * k) - LaurentPoly(1);
  };
  LaurentPoly num(1), den(1);
  for (int i = 0; i < m; ++i) num *= qpow_minus_1(n - i);
  for (int i = 1; i <= m; ++i) den *= qpow_minus_1(i);
  return exact_div(num, den);
}

LaurentPoly balanced_binom(int n, int m) {
  if (m < 0) return LaurentPoly();
  if (m == 0) return LaurentPoly(1);
  auto vdiff = [](int k) {  // v^k - v^-k
    return LaurentPoly::v(k) - LaurentPoly::v(-k);
  };
  LaurentPoly num(1), den(1);
  for (int i = 1; i <= m; ++i) {
    num *= vdiff(n - i + 1);
    den *= vdiff(i);
  }
  return exact_div(num, den);
}

LaurentPoly qfactorial(int m) {
  if (m < 0) throw std::invalid_argument("qfactorial: m must be >= 0");
  LaurentPoly r(1);
  for (int k = 2; k <= m; ++k) r *= bracket(k);
  return r;
}

}  // namespace ischur
