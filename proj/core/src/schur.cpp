#include "ischur/schur.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ischur {

LaurentPoly SchurElement::coeff(const ThetaMatrix& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void SchurElement::add_term(const ThetaMatrix& a, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(a, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SchurElement& SchurElement::operator+=(const SchurElement& o) {
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

SchurElement& SchurElement::operator-=(const SchurElement& o) {
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

SchurElement SchurElement::operator*(const LaurentPoly& c) const {
  SchurElement out(n_, r_);
  if (c.is_zero()) return out;
  for (const auto& [a, x] : terms_) out.add_term(a, x * c);
  return out;
}

SchurElement SchurElement::exact_divided(const LaurentPoly& den) const {
  SchurElement out(n_, r_);
  for (const auto& [a, x] : terms_) out.add_term(a, exact_div(x, den));
  return out;
}

std::string SchurElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*[" << a.str() << "]";
  }
  return os.str();
}

int beta_p(const ThetaMatrix& a, int h, int p) {
  const int nn = 2 * a.n();
  int s = 0;
  for (int j = p; j <= nn; ++j) s += a.at(h, j);
  for (int j = p + 1; j <= nn; ++j) s -= a.at(h + 1, j);
  return s;
}

int beta_prime_p(const ThetaMatrix& a, int h, int p) {
  int s = 0;
  for (int j = 1; j <= p; ++j) s += a.at(h + 1, j);
  for (int j = 1; j < p; ++j) s -= a.at(h, j);
  return s;
}

LaurentPoly c_coeff(const ThetaMatrix& a) {
  const int n = a.n();
  int top = 0, bot = 0;
  for (int j = 1; j <= n; ++j) {
    top += a.at(n, j);
    bot += a.at(n + 1, j);
  }
  LaurentPoly c = LaurentPoly::v(bot) - LaurentPoly::v(-bot);
  return c.shifted(-top);
}

namespace {

// Weak compositions of m into k parts bounded entrywise by cap.
void bounded_compositions(int k, int m, const std::vector<int>& cap, int pos,
                          std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (pos == k) {
    if (m == 0) out.push_back(cur);
    return;
  }
  int hi = std::min(m, cap[pos]);
  for (int x = 0; x <= hi; ++x) {
    cur[pos] = x;
    bounded_compositions(k, m - x, cap, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

SchurContext::SchurContext(int n, int r) : n_(n), r_(r) {
  basis_ = enumerate_xi(n, r);
  triples_.assign(basis_.size(), Triple{Composition{}, WeylElement(r), Composition{}});
  norm_.assign(basis_.size(), 0);
  norm_set_.assign(basis_.size(), 0);

  // The triple bijection: walk every (la, d, mu) once and check it lands on a
  // distinct basis matrix.  This is the content of the basis lemma and is
  // cheap enough to assert every time a context is built.
  std::size_t seen = 0;
  std::vector<char> hit(basis_.size(), 0);
  auto lams = compositions(n, r);
  for (const auto& la : lams)
    for (const auto& mu : lams)
      for (const auto& d : double_coset_reps(la, mu, r)) {
        ThetaMatrix a = matrix_of_triple(la, d, mu, n);
        int idx = basis_index(a);
        if (hit[idx]) throw std::logic_error("triple map not injective");
        hit[idx] = 1;
        triples_[idx] = Triple{la, d, mu};
        ++seen;
      }
  if (seen != basis_.size())
    throw std::logic_error("triple map not surjective onto Xi_{2n,2r}");
}

const SchurContext& SchurContext::get(int n, int r) {
  static std::mutex reg_mu;
  static std::map<std::pair<int, int>, std::unique_ptr<SchurContext>> reg;
  std::scoped_lock lk(reg_mu);
  auto& slot = reg[{n, r}];
  if (!slot) slot.reset(new SchurContext(n, r));
  return *slot;
}

int SchurContext::basis_index(const ThetaMatrix& a) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), a);
  if (it == basis_.end() || !(*it == a))
    throw std::invalid_argument("matrix not in Xi_{2n,2r}");
  return static_cast<int>(it - basis_.begin());
}

const Triple& SchurContext::triple_of(const ThetaMatrix& a) const {
  return triples_[basis_index(a)];
}

int SchurContext::norm_exponent(const ThetaMatrix& a) const {
  int idx = basis_index(a);
  {
    std::scoped_lock lk(mu_);
    if (norm_set_[idx]) return norm_[idx];
  }
  const Triple& t = triples_[idx];
  auto dc = double_coset(t.la, t.d, t.mu);
  int e = -length(dc.d_plus) + length(longest_element(t.mu, r_));
  std::scoped_lock lk(mu_);
  norm_[idx] = e;
  norm_set_[idx] = 1;
  return e;
}

SchurElement SchurContext::basis_element(const ThetaMatrix& a) const {
  SchurElement out(n_, r_);
  basis_index(a);  // validate
  out.add_term(a, LaurentPoly(1));
  return out;
}

SchurElement SchurContext::weight_idempotent(const Composition& la) const {
  return basis_element(ThetaMatrix::diag(hat(la)));
}

SchurElement SchurContext::unit() const {
  SchurElement out(n_, r_);
  for (const auto& la : compositions(n_, r_))
    out.add_term(ThetaMatrix::diag(hat(la)), LaurentPoly(1));
  return out;
}

SchurElement SchurContext::oracle_product(const ThetaMatrix& a,
                                          const ThetaMatrix& b) const {
  SchurElement out(n_, r_);
  if (!(a.col_sums() == b.row_sums())) return out;
  const Triple& ta = triples_[basis_index(a)];
  const Triple& tb = triples_[basis_index(b)];

  // phi_B applied to its defining generator x_nu: the double coset sum
  // T_{W_mu' d' W_nu} living in the mu'-component of the module.
  HeckeElement tb_sum =
      subset_sum(double_coset(tb.la, tb.d, tb.mu).elements, r_);
  ModuleElement mb{tb.la, tb_sum};

  // phi_A of that: decompose over x_{mu'} T_e and map each x_{mu'} T_e to
  // T_{W_la d W_mu'} T_e.
  ModuleElement comp = phi_apply(ta, mb, n_);

  // Re-expand phi_A phi_B over the phi basis: decompose over x_la T_f and
  // group the f by their double coset.  Every f in D_la within one coset must
  // carry the same coefficient (the coset sum has unit coefficients at the
  // x_la T_f level); anything else means the composition left the span.
  auto coeffs = module_decompose(comp.la, comp.value);
  const std::size_t wla_size = parabolic_subgroup(comp.la, r_).size();
  std::map<WeylElement, std::pair<LaurentPoly, std::size_t>> groups;
  for (const auto& [f, c] : coeffs) {
    WeylElement f0 = min_double_coset_rep(comp.la, f, tb.mu);
    auto [it, fresh] = groups.try_emplace(f0, std::make_pair(c, std::size_t{1}));
    if (!fresh) {
      if (!(it->second.first == c))
        throw std::logic_error("oracle product: uneven coset coefficients");
      ++it->second.second;
    }
  }
  const int ea = norm_exponent(a), eb = norm_exponent(b);
  for (const auto& [f0, pr] : groups) {
    auto dc = double_coset(comp.la, f0, tb.mu);
    if (pr.second * wla_size != dc.elements.size())
      throw std::logic_error("oracle product: incomplete coset coverage");
    ThetaMatrix c = matrix_of_triple(comp.la, f0, tb.mu, n_);
    int ec = norm_exponent(c);
    out.add_term(c, pr.first.shifted(ea + eb - ec));
  }
  return out;
}

SchurElement SchurContext::product(const SchurElement& x,
                                   const SchurElement& y) const {
  SchurElement out(n_, r_);
  for (const auto& [a, ca] : x.terms()) {
    int ia = basis_index(a);
    for (const auto& [b, cb] : y.terms()) {
      int ib = basis_index(b);
      std::pair<int, int> key{ia, ib};
      const SchurElement* hitp = nullptr;
      SchurElement hit(n_, r_);
      {
        std::scoped_lock lk(mu_);
        auto it = prod_cache_.find(key);
        if (it != prod_cache_.end()) {
          hit = it->second;
          hitp = &hit;
        }
      }
      if (!hitp) {
        hit = oracle_product(a, b);
        std::scoped_lock lk(mu_);
        prod_cache_.try_emplace(key, hit);
      }
      out += hit * (ca * cb);
    }
  }
  return out;
}

SchurElement SchurContext::short_mul(ShortKind kind, int h,
                                     const Composition& la,
                                     const ThetaMatrix& a) const {
  const int nn = 2 * n_;
  if (kind == ShortKind::Wall) h = n_;
  if (h < 1 || (kind != ShortKind::Wall && h >= n_) ||
      (kind == ShortKind::Wall && n_ < 1))
    throw std::invalid_argument("short_mul: h out of range");
  if (la.size() != n_ || la.weight() != r_ - 1)
    throw std::invalid_argument("short_mul: la must lie in Lambda(n, r-1)");
  basis_index(a);

  SchurElement out(n_, r_);
  // Vanishing test: the left factor has column profile hat(la) + e^th_src.
  int src = (kind == ShortKind::Up) ? h + 1 : h;
  std::vector<int> need = hat(la);
  auto et = e_theta_vec(n_, src);
  for (int i = 0; i < nn; ++i) need[i] += et[i];
  if (!(need == a.row_sums())) return out;

  switch (kind) {
    case ShortKind::Up:
      for (int p = 1; p <= nn; ++p) {
        if (a.at(h + 1, p) < 1) continue;
        LaurentPoly c = bbracket(a.at(h, p) + 1).bar();
        ThetaMatrix m = a.plus_e_theta(h, p, 1).plus_e_theta(h + 1, p, -1);
        out.add_term(m, c.shifted(beta_p(a, h, p)));
      }
      break;
    case ShortKind::Down:
      for (int p = 1; p <= nn; ++p) {
        if (a.at(h, p) < 1) continue;
        LaurentPoly c = bbracket(a.at(h + 1, p) + 1).bar();
        ThetaMatrix m = a.plus_e_theta(h, p, -1).plus_e_theta(h + 1, p, 1);
        out.add_term(m, c.shifted(beta_prime_p(a, h, p)));
      }
      break;
    case ShortKind::Wall:
      out.add_term(a, c_coeff(a));
      for (int p = 1; p <= nn; ++p) {
        if (a.at(n_, p) < 1) continue;
        int eps = (n_ + 1 <= p) ? 1 : 0;
        LaurentPoly c = bbracket(a.at(n_ + 1, p) + 1).bar();
        ThetaMatrix m = a.plus_e_theta(n_, p, -1).plus_e_theta(n_ + 1, p, 1);
        out.add_term(m, c.shifted(beta_prime_p(a, n_, p) - eps));
      }
      break;
  }
  return out;
}

SchurElement SchurContext::multi_mul(bool up, int h, int m,
                                     const Composition& la,
                                     const ThetaMatrix& a) const {
  const int nn = 2 * n_;
  if (h < 1 || h >= n_) throw std::invalid_argument("multi_mul: h out of range");
  if (m < 1) throw std::invalid_argument("multi_mul: m must be positive");
  if (la.size() != n_ || la.weight() != r_ - m)
    throw std::invalid_argument("multi_mul: la must lie in Lambda(n, r-m)");
  basis_index(a);

  SchurElement out(n_, r_);
  int src = up ? h + 1 : h;
  std::vector<int> need = hat(la);
  auto et = e_theta_vec(n_, src);
  for (int i = 0; i < nn; ++i) need[i] += m * et[i];
  if (!(need == a.row_sums())) return out;

  // Row the units are drawn from / deposited into.
  const int from = up ? h + 1 : h;
  const int to = up ? h : h + 1;
  std::vector<int> cap(nn);
  for (int u = 1; u <= nn; ++u) cap[u - 1] = a.at(from, u);
  std::vector<std::vector<int>> nus;
  std::vector<int> cur(nn, 0);
  bounded_compositions(nn, m, cap, 0, cur, nus);

  for (const auto& nu : nus) {
    // beta_nu / beta'_nu: the single-step exponent summed over the moved
    // units, plus the interaction term between moved columns.
    long expo = 0;
    for (int p = 1; p <= nn; ++p) {
      if (nu[p - 1] == 0) continue;
      expo += static_cast<long>(nu[p - 1]) *
              (up ? beta_p(a, h, p) : beta_prime_p(a, h, p));
      if (up) {
        for (int j = 1; j < p; ++j) expo += static_cast<long>(nu[j - 1]) * nu[p - 1];
      } else {
        for (int j = p + 1; j <= nn; ++j)
          expo += static_cast<long>(nu[j - 1]) * nu[p - 1];
      }
    }
    LaurentPoly c(1);
    for (int u = 1; u <= nn; ++u) {
      if (nu[u - 1] == 0) continue;
      c *= gauss_binom(a.at(to, u) + nu[u - 1], nu[u - 1]).bar();
    }
    ThetaMatrix mmat = a;
    for (int u = 1; u <= nn; ++u) {
      if (nu[u - 1] == 0) continue;
      mmat = mmat.plus_e_theta(to, u, nu[u - 1]).plus_e_theta(from, u, -nu[u - 1]);
    }
    out.add_term(mmat, c.shifted(static_cast<int>(expo)));
  }
  return out;
}

std::vector<std::array<int, 3>> monomial_chain(int N) {
  std::vector<std::array<int, 3>> out;
  for (int i = 2; i <= N; ++i)
    for (int j = 1; j < i; ++j)
      for (int h = i - 1; h >= j; --h) out.push_back({i, h, j});
  return out;
}

std::vector<SchurContext::MonomialFactor> SchurContext::monomial_factors(
    const ThetaMatrix& a) const {
  basis_index(a);
  const int nn = 2 * n_;
  auto chain = monomial_chain(nn);

  // Walk the chain backwards: the last factor's column profile is co(A), and
  // each earlier diagonal is fixed by matching its factor's column profile to
  // the row profile of the successor factor.
  std::vector<ThetaMatrix> mats(chain.size(), ThetaMatrix(n_));
  std::vector<int> carry = a.col_sums();
  for (int k = static_cast<int>(chain.size()) - 1; k >= 0; --k) {
    auto [i, h, j] = chain[k];
    int mult = a.at(i, j);
    // D = diag(carry - mult * e^th_h); factor = D + mult E^th_{h+1,h}.
    std::vector<int> diag = carry;
    auto et = e_theta_vec(n_, h);
    for (int u = 0; u < nn; ++u) {
      diag[u] -= mult * et[u];
      if (diag[u] < 0)
        throw std::logic_error("monomial factor with negative diagonal");
    }
    ThetaMatrix f = ThetaMatrix::diag(diag);
    if (mult != 0) f = f.plus_e_theta(h + 1, h, mult);
    mats[k] = f;
    carry = f.row_sums();
  }
  if (!(carry == a.row_sums()))
    throw std::logic_error("monomial chain does not reproduce ro(A)");

  std::vector<MonomialFactor> out;
  out.reserve(chain.size());
  for (std::size_t k = 0; k < chain.size(); ++k)
    out.push_back({chain[k][0], chain[k][1], chain[k][2], mats[k], a.at(chain[k][0], chain[k][2])});
  return out;
}

SchurElement SchurContext::product_of_factors(
    const std::vector<ThetaMatrix>& fs) const {
  if (fs.empty()) return unit();
  SchurElement acc = basis_element(fs.front());
  for (std::size_t k = 1; k < fs.size(); ++k)
    acc = product(acc, basis_element(fs[k]));
  return acc;
}

SchurElement SchurContext::triangular_monomial(const ThetaMatrix& a) const {
  auto fac = monomial_factors(a);
  std::vector<ThetaMatrix> fs;
  fs.reserve(fac.size());
  for (const auto& f : fac) fs.push_back(f.matrix);
  return product_of_factors(fs);
}

std::vector<ThetaMatrix> SchurContext::topological_order() const {
  // Kahn's algorithm over the strict preorder part, smallest matrix first
  // among the ready ones so the order is reproducible.
  const std::size_t n = basis_.size();
  std::vector<std::vector<int>> succ(n);
  std::vector<int> indeg(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (preorder_lt(basis_[i], basis_[j])) {
        succ[i].push_back(static_cast<int>(j));
        ++indeg[j];
      }
    }
  std::vector<ThetaMatrix> out;
  out.reserve(n);
  std::vector<char> done(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    int pick = -1;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && indeg[i] == 0) {
        pick = static_cast<int>(i);
        break;
      }
    if (pick < 0) throw std::logic_error("preorder has a strict cycle");
    done[pick] = 1;
    out.push_back(basis_[pick]);
    for (int j : succ[pick]) --indeg[j];
  }
  return out;
}

}  // namespace ischur
