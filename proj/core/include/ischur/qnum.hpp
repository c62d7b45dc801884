#pragma once

#include "ischur/laurent.hpp"

namespace ischur {

// Quantum scalars inside Z[v, v^-1], with q = v^2.
//
//   bracket(n)          [n]  = (v^n - v^-n) / (v - v^-1), any integer n
//   bbracket(n)         [[n]] = 1 + q + ... + q^(n-1), n >= 0
//   gauss_binom(n, m)   [[n over m]], the Gaussian binomial in q, n >= 0
//   balanced_binom(n,m) [n over m], the balanced binomial, any integer n
//   qfactorial(m)       [m]! = [1][2]...[m]
//
// gauss_binom rejects negative n (the defining product is not a Laurent
// polynomial there); balanced_binom is defined for every integer n.

LaurentPoly bracket(int n);
LaurentPoly bbracket(int n);
LaurentPoly gauss_binom(int n, int m);
LaurentPoly balanced_binom(int n, int m);
LaurentPoly qfactorial(int m);

}  // namespace ischur
