#include "ischur/longform.hpp"

#include <sstream>
#include <stdexcept>

#include "ischur/qnum.hpp"

namespace ischur {

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  LaurentPoly q(0);
  if (try_exact_div(num_, den_, &q)) {
    num_ = q;
    den_ = LaurentPoly(1);
    return;
  }
  if (try_exact_div(den_, num_, &q)) {
    num_ = LaurentPoly(1);
    den_ = q;
  }
  // Anchor the denominator at exponent 0 so representations do not drift.
  int e = den_.min_exp();
  if (e != 0) {
    den_ = den_.shifted(-e);
    num_ = num_.shifted(-e);
  }
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFunc RatFunc::operator-() const {
  RatFunc out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

bool RatFunc::is_laurent() const {
  LaurentPoly q(0);
  return try_exact_div(num_, den_, &q);
}

LaurentPoly RatFunc::to_laurent() const { return exact_div(num_, den_); }

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  std::ostringstream os;
  os << "(" << num_.str() << ")/(" << den_.str() << ")";
  return os.str();
}

std::vector<int> fold_j(const std::vector<int>& j) {
  if (j.size() % 2 != 0)
    throw std::invalid_argument("fold_j: vector length must be even");
  const int n = static_cast<int>(j.size()) / 2;
  std::vector<int> out(n);
  for (int k = 0; k < n; ++k) out[k] = j[k] + j[2 * n - 1 - k];
  return out;
}

namespace {

// Accept j either folded (length n) or full (length 2n).
std::vector<int> normalize_j(int n, const std::vector<int>& j) {
  if (static_cast<int>(j.size()) == n) return j;
  if (static_cast<int>(j.size()) == 2 * n) return fold_j(j);
  throw std::invalid_argument("j must have length n or 2n");
}

void require_zero_diag(int n, const ThetaMatrix& a) {
  if (a.n() != n) throw std::invalid_argument("matrix size does not match n");
  if (!a.has_zero_diagonal())
    throw std::invalid_argument("long element label must have zero diagonal");
}

// ro(A).j for full j, computed from the folded form: row sums of a
// centro-symmetric matrix are palindromic, so ro(A).j = sum_i ro_i j*_i.
long ro_dot(const ThetaMatrix& a, const std::vector<int>& jstar) {
  auto ro = a.row_sums();
  long s = 0;
  for (int i = 0; i < a.n(); ++i) s += static_cast<long>(ro[i]) * jstar[i];
  return s;
}

long co_dot(const ThetaMatrix& a, const std::vector<int>& jstar) {
  auto co = a.col_sums();
  long s = 0;
  for (int i = 0; i < a.n(); ++i) s += static_cast<long>(co[i]) * jstar[i];
  return s;
}

RatFunc v_pow(long e) { return RatFunc(LaurentPoly::v(static_cast<int>(e))); }

const LaurentPoly& v_minus_vinv() {
  static const LaurentPoly p = LaurentPoly::v(1) - LaurentPoly::v(-1);
  return p;
}

std::vector<int> shifted_j(std::vector<int> j, int pos1, int d1, int pos2 = 0,
                           int d2 = 0) {
  j[pos1 - 1] += d1;
  if (pos2) j[pos2 - 1] += d2;
  return j;
}

}  // namespace

void LongCombination::add_term(const ThetaMatrix& a, const std::vector<int>& j,
                               const RatFunc& c) {
  if (c.is_zero()) return;
  require_zero_diag(n_, a);
  LongKey key{a, normalize_j(n_, j)};
  auto [it, fresh] = terms_.try_emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RatFunc LongCombination::coeff(const ThetaMatrix& a,
                               const std::vector<int>& j) const {
  auto it = terms_.find(LongKey{a, normalize_j(n_, j)});
  return it == terms_.end() ? RatFunc() : it->second;
}

LongCombination& LongCombination::operator+=(const LongCombination& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.a, k.jstar, c);
  return *this;
}

LongCombination& LongCombination::operator-=(const LongCombination& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.a, k.jstar, -c);
  return *this;
}

LongCombination LongCombination::operator*(const RatFunc& c) const {
  LongCombination out(n_);
  if (c.is_zero()) return out;
  for (const auto& [k, x] : terms_) out.add_term(k.a, k.jstar, x * c);
  return out;
}

bool operator==(const LongCombination& a, const LongCombination& b) {
  if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  return true;
}

std::string LongCombination::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << k.a.str() << "(";
    for (std::size_t i = 0; i < k.jstar.size(); ++i)
      os << (i ? "," : "") << k.jstar[i];
    os << ")";
  }
  return os.str();
}

LongCombination long_basis(int n, const ThetaMatrix& a,
                           const std::vector<int>& j) {
  LongCombination out(n);
  out.add_term(a, j, RatFunc(LaurentPoly(1)));
  return out;
}

LongCombination long_unit(int n) {
  return long_basis(n, ThetaMatrix(n), std::vector<int>(n, 0));
}

SchurElement long_element(int n, const ThetaMatrix& a,
                          const std::vector<int>& j, int r) {
  require_zero_diag(n, a);
  auto jstar = normalize_j(n, j);
  SchurElement out(n, r);
  const int total = a.total();
  if (total % 2 != 0) throw std::logic_error("zero-diagonal matrix of odd size");
  if (total > 2 * r) return out;
  for (const auto& la : compositions(n, r - total / 2)) {
    long e = 0;
    for (int i = 0; i < n; ++i) e += static_cast<long>(la.parts[i]) * jstar[i];
    out.add_term(a.plus_diag(hat(la)), LaurentPoly::v(static_cast<int>(e)));
  }
  return out;
}

SchurElement evaluate(const LongCombination& x, int r) {
  const int n = x.n();
  std::map<ThetaMatrix, RatFunc> acc;
  for (const auto& [k, c] : x.terms()) {
    const int total = k.a.total();
    if (total > 2 * r) continue;
    for (const auto& la : compositions(n, r - total / 2)) {
      long e = 0;
      for (int i = 0; i < n; ++i)
        e += static_cast<long>(la.parts[i]) * k.jstar[i];
      auto [it, fresh] = acc.try_emplace(k.a.plus_diag(hat(la)), c * v_pow(e));
      if (!fresh) it->second += c * v_pow(e);
    }
  }
  SchurElement out(n, r);
  for (const auto& [m, c] : acc) out.add_term(m, c.to_laurent());
  return out;
}

LongCombination apply_O(const std::vector<int>& j, const LongCombination& x) {
  const int n = x.n();
  auto js = normalize_j(n, j);
  LongCombination out(n);
  for (const auto& [k, c] : x.terms()) {
    std::vector<int> jnew = k.jstar;
    for (int i = 0; i < n; ++i) jnew[i] += js[i];
    out.add_term(k.a, jnew, c * v_pow(ro_dot(k.a, js)));
  }
  return out;
}

LongCombination apply_O_right(const LongCombination& x,
                              const std::vector<int>& j) {
  const int n = x.n();
  auto js = normalize_j(n, j);
  LongCombination out(n);
  for (const auto& [k, c] : x.terms()) {
    std::vector<int> jnew = k.jstar;
    for (int i = 0; i < n; ++i) jnew[i] += js[i];
    out.add_term(k.a, jnew, c * v_pow(co_dot(k.a, js)));
  }
  return out;
}

LongCombination apply_e(int h, const LongCombination& x) {
  const int n = x.n();
  if (h < 1 || h >= n) throw std::invalid_argument("apply_e: h out of [1, n)");
  const int nn = 2 * n;
  LongCombination out(n);
  for (const auto& [k, c] : x.terms()) {
    const ThetaMatrix& a = k.a;
    const std::vector<int>& js = k.jstar;
    for (int p = 1; p < h; ++p) {
      if (a.at(h + 1, p) < 1) continue;
      RatFunc coef = c * v_pow(beta_p(a, h, p)) * RatFunc(bbracket(a.at(h, p) + 1).bar());
      out.add_term(a.plus_e_theta(h, p, 1).plus_e_theta(h + 1, p, -1),
                   shifted_j(js, h, 1, h + 1, -1), coef);
    }
    if (a.at(h + 1, h) >= 1) {
      RatFunc s = c * RatFunc(LaurentPoly::v(beta_p(a, h, h) - js[h - 1]),
                              v_minus_vinv());
      ThetaMatrix m = a.plus_e_theta(h + 1, h, -1);
      out.add_term(m, shifted_j(js, h, 1, h + 1, -1), s);
      out.add_term(m, shifted_j(js, h, -1, h + 1, -1), -s);
    }
    {
      RatFunc coef = c * v_pow(beta_p(a, h, h + 1) + js[h]) *
                     RatFunc(bbracket(a.at(h, h + 1) + 1).bar());
      out.add_term(a.plus_e_theta(h, h + 1, 1), js, coef);
    }
    for (int p = h + 2; p <= nn; ++p) {
      if (a.at(h + 1, p) < 1) continue;
      RatFunc coef = c * v_pow(beta_p(a, h, p)) * RatFunc(bbracket(a.at(h, p) + 1).bar());
      out.add_term(a.plus_e_theta(h, p, 1).plus_e_theta(h + 1, p, -1), js, coef);
    }
  }
  return out;
}

LongCombination apply_f(int h, const LongCombination& x) {
  const int n = x.n();
  if (h < 1 || h >= n) throw std::invalid_argument("apply_f: h out of [1, n)");
  const int nn = 2 * n;
  LongCombination out(n);
  for (const auto& [k, c] : x.terms()) {
    const ThetaMatrix& a = k.a;
    const std::vector<int>& js = k.jstar;
    for (int p = 1; p < h; ++p) {
      if (a.at(h, p) < 1) continue;
      RatFunc coef =
          c * v_pow(beta_prime_p(a, h, p)) * RatFunc(bbracket(a.at(h + 1, p) + 1).bar());
      out.add_term(a.plus_e_theta(h, p, -1).plus_e_theta(h + 1, p, 1), js, coef);
    }
    {
      RatFunc coef = c * v_pow(beta_prime_p(a, h, h) + js[h - 1]) *
                     RatFunc(bbracket(a.at(h + 1, h) + 1).bar());
      out.add_term(a.plus_e_theta(h + 1, h, 1), js, coef);
    }
    if (a.at(h, h + 1) >= 1) {
      RatFunc s = c * RatFunc(LaurentPoly::v(beta_prime_p(a, h, h + 1) - js[h]),
                              v_minus_vinv());
      ThetaMatrix m = a.plus_e_theta(h, h + 1, -1);
      out.add_term(m, shifted_j(js, h, -1, h + 1, 1), s);
      out.add_term(m, shifted_j(js, h, -1, h + 1, -1), -s);
    }
    for (int p = h + 2; p <= nn; ++p) {
      if (a.at(h, p) < 1) continue;
      RatFunc coef =
          c * v_pow(beta_prime_p(a, h, p)) * RatFunc(bbracket(a.at(h + 1, p) + 1).bar());
      out.add_term(a.plus_e_theta(h, p, -1).plus_e_theta(h + 1, p, 1),
                   shifted_j(js, h, -1, h + 1, 1), coef);
    }
  }
  return out;
}

LongCombination apply_wall(const LongCombination& x) {
  const int n = x.n();
  const int nn = 2 * n;
  LongCombination out(n);
  for (const auto& [k, c] : x.terms()) {
    const ThetaMatrix& a = k.a;
    const std::vector<int>& js = k.jstar;
    for (int i = 1; i <= nn; ++i) {
      if (i == n || i == n + 1 || a.at(n, i) < 1) continue;
      int eps = (n + 1 <= i) ? 1 : 0;
      RatFunc coef = c * v_pow(beta_prime_p(a, n, i) - eps) *
                     RatFunc(bbracket(a.at(n + 1, i) + 1).bar());
      out.add_term(a.plus_e_theta(n, i, -1).plus_e_theta(n + 1, i, 1), js, coef);
    }
    {
      RatFunc coef = c * v_pow(beta_prime_p(a, n, n) + js[n - 1]) *
                     RatFunc(bbracket(a.at(n + 1, n) + 1).bar());
      out.add_term(a.plus_e_theta(n + 1, n, 1), js, coef);
    }
    if (a.at(n, n + 1) >= 1) {
      RatFunc s = c * RatFunc(LaurentPoly::v(beta_prime_p(a, n, n + 1) - js[n - 1]),
                              v_minus_vinv());
      ThetaMatrix m = a.plus_e_theta(n, n + 1, -1);
      out.add_term(m, js, s);
      out.add_term(m, shifted_j(js, n, -2), -s);
    }
    {
      RatFunc coef = c * RatFunc(c_coeff(a));
      out.add_term(a, shifted_j(js, n, -1), coef);
    }
  }
  return out;
}

LongCombination t_power_expand(int n, int m) {
  if (m < 0) throw std::invalid_argument("t_power_expand: m must be >= 0");
  LongCombination x = long_unit(n);
  for (int k = 0; k < m; ++k) x = apply_wall(x);
  x = x * RatFunc(LaurentPoly(1), qfactorial(m));

  // Shape assertions from the divided-power corollary: the expansion stays in
  // the span of wall multiples (s E^th)(j) with s <= m, and the top term
  // (m E^th)(0) carries coefficient exactly 1.
  const ThetaMatrix top = ThetaMatrix::e_theta(n, n, n + 1, m);
  bool saw_top = false;
  for (const auto& [k, c] : x.terms()) {
    int s = k.a.at(n, n + 1);
    if (!(k.a == ThetaMatrix::e_theta(n, n, n + 1, s)))
      throw std::logic_error("t_power_expand: term outside wall multiples");
    if (s > m || (s == m && !(k.a == top)))
      throw std::logic_error("t_power_expand: unexpected multiplicity");
    if (k.a == top) {
      saw_top = true;
      bool zero_j = true;
      for (int e : k.jstar) zero_j = zero_j && e == 0;
      if (!zero_j || !(c == RatFunc(LaurentPoly(1))))
        throw std::logic_error("t_power_expand: leading term is not (mE)(0)");
    }
  }
  if (!saw_top && m > 0)
    throw std::logic_error("t_power_expand: missing leading term");
  return x;
}

LongCombination wall_multiple_mul(int n, int m, const ThetaMatrix& a,
                                  const std::vector<int>& j) {
  if (m == 0) return long_basis(n, a, j);
  auto js = normalize_j(n, j);

  // E^{(m)} A(j), expanded through the wall formula m times.
  LongCombination x = long_basis(n, a, js);
  for (int k = 0; k < m; ++k) x = apply_wall(x);
  x = x * RatFunc(LaurentPoly(1), qfactorial(m));

  // Subtract f_{s,t} (sE)(j_{s,t}) A(j) for the lower terms of the expansion,
  // rewriting (sE)(j') A(j) = v^{ro(A).j' - s j'_n} (sE)(0) A(j + j').
  const ThetaMatrix top = ThetaMatrix::e_theta(n, n, n + 1, m);
  LongCombination expansion = t_power_expand(n, m);
  for (const auto& [k, f] : expansion.terms()) {
    if (k.a == top) continue;
    int s = k.a.at(n, n + 1);
    std::vector<int> jrec = js;
    for (int i = 0; i < n; ++i) jrec[i] += k.jstar[i];
    RatFunc scale =
        f * v_pow(ro_dot(a, k.jstar) - static_cast<long>(s) * k.jstar[n - 1]);
    x -= wall_multiple_mul(n, s, a, jrec) * scale;
  }
  return x;
}

SchurElement k_binomial(const Composition& la, int r) {
  const int n = la.size();
  if (la.weight() != r)
    throw std::invalid_argument("k_binomial: la must lie in Lambda(n, r)");
  const auto& ctx = SchurContext::get(n, r);
  const auto lams = compositions(n, r);

  SchurElement acc = ctx.unit();
  for (int i = 1; i <= n; ++i) {
    const int t = la.parts[i - 1];
    if (t == 0) continue;
    SchurElement prod = ctx.unit();
    LaurentPoly den(1);
    for (int u = 1; u <= t; ++u) {
      // K v^{1-u} - K^{-1} v^{u-1} with K = O(e_i, r), diagonal on weights.
      SchurElement factor(n, r);
      for (const auto& mu : lams) {
        LaurentPoly coef = LaurentPoly::v(mu.parts[i - 1] + 1 - u) -
                           LaurentPoly::v(-mu.parts[i - 1] + u - 1);
        factor.add_term(ThetaMatrix::diag(hat(mu)), coef);
      }
      prod = ctx.product(prod, factor);
      den *= LaurentPoly::v(u) - LaurentPoly::v(-u);
    }
    acc = ctx.product(acc, prod.exact_divided(den));
  }
  return acc;
}

}  // namespace ischur
