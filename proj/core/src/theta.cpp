#include "ischur/theta.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ischur {

ThetaMatrix::ThetaMatrix(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("ThetaMatrix: n must be >= 1");
  a_.assign(4 * n * n, 0);
}

ThetaMatrix ThetaMatrix::from_rows(int n,
                                   const std::vector<std::vector<int>>& rows) {
  ThetaMatrix m(n);
  int d = 2 * n;
  if (static_cast<int>(rows.size()) != d)
    throw std::invalid_argument("from_rows: need 2n rows");
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(rows[i].size()) != d)
      throw std::invalid_argument("from_rows: need 2n columns");
    for (int j = 0; j < d; ++j) {
      if (rows[i][j] < 0)
        throw std::invalid_argument("from_rows: negative entry");
      m.a_[i * d + j] = rows[i][j];
    }
  }
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      if (m.at(i, j) != m.at(d + 1 - i, d + 1 - j))
        throw std::invalid_argument("from_rows: not centro-symmetric");
  return m;
}

ThetaMatrix ThetaMatrix::e_theta(int n, int i, int j, int m) {
  return ThetaMatrix(n).plus_e_theta(i, j, m);
}

ThetaMatrix ThetaMatrix::diag(const std::vector<int>& d) {
  int dim = static_cast<int>(d.size());
  if (dim < 2 || dim % 2 != 0)
    throw std::invalid_argument("diag: need even size");
  ThetaMatrix m(dim / 2);
  for (int i = 1; i <= dim; ++i) {
    if (d[i - 1] < 0) throw std::invalid_argument("diag: negative entry");
    if (d[i - 1] != d[dim - i])
      throw std::invalid_argument("diag: not centro-symmetric");
    m.a_[(i - 1) * dim + (i - 1)] = d[i - 1];
  }
  return m;
}

ThetaMatrix ThetaMatrix::plus_e_theta(int i, int j, int m) const {
  int d = dim();
  if (i < 1 || i > d || j < 1 || j > d)
    throw std::invalid_argument("plus_e_theta: index out of range");
  ThetaMatrix r = *this;
  r.a_[(i - 1) * d + (j - 1)] += m;
  r.a_[(d - i) * d + (d - j)] += m;
  for (int v : r.a_)
    if (v < 0) throw std::invalid_argument("plus_e_theta: negative entry");
  return r;
}

ThetaMatrix ThetaMatrix::plus_diag(const std::vector<int>& d) const {
  ThetaMatrix dd = ThetaMatrix::diag(d);
  if (dd.n() != n_) throw std::invalid_argument("plus_diag: size mismatch");
  ThetaMatrix r = *this;
  for (int i = 0; i < dim(); ++i) {
    r.a_[i * dim() + i] += d[i];
    if (r.a_[i * dim() + i] < 0)
      throw std::invalid_argument("plus_diag: negative entry");
  }
  return r;
}

std::vector<int> ThetaMatrix::row_sums() const {
  int d = dim();
  std::vector<int> s(d, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) s[i] += a_[i * d + j];
  return s;
}

std::vector<int> ThetaMatrix::col_sums() const {
  int d = dim();
  std::vector<int> s(d, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) s[j] += a_[i * d + j];
  return s;
}

int ThetaMatrix::total() const {
  int t = 0;
  for (int v : a_) t += v;
  return t;
}

bool ThetaMatrix::is_diagonal() const {
  int d = dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j && a_[i * d + j] != 0) return false;
  return true;
}

bool ThetaMatrix::has_zero_diagonal() const {
  for (int i = 0; i < dim(); ++i)
    if (a_[i * dim() + i] != 0) return false;
  return true;
}

ThetaMatrix ThetaMatrix::off_diagonal_part() const {
  ThetaMatrix r = *this;
  for (int i = 0; i < dim(); ++i) r.a_[i * dim() + i] = 0;
  return r;
}

std::vector<int> ThetaMatrix::diagonal() const {
  std::vector<int> d(dim());
  for (int i = 0; i < dim(); ++i) d[i] = a_[i * dim() + i];
  return d;
}

std::string ThetaMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 1; i <= dim(); ++i) {
    os << (i == 1 ? "[" : ",[");
    for (int j = 1; j <= dim(); ++j) {
      if (j > 1) os << ",";
      os << at(i, j);
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<int> e_theta_vec(int n, int i) {
  std::vector<int> v(2 * n, 0);
  v[i - 1] += 1;
  v[2 * n - i] += 1;
  return v;
}

std::vector<ThetaMatrix> enumerate_xi(int n, int r) {
  // Orbits of the centro flip on cells all have size two, and each orbit has
  // exactly one cell in the top n rows; fill those freely with sum r.
  int d = 2 * n;
  int cells = 2 * n * n;
  std::vector<ThetaMatrix> out;
  std::vector<int> val(cells, 0);
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == cells - 1) {
      val[pos] = rem;
      std::vector<std::vector<int>> rows(d, std::vector<int>(d, 0));
      for (int c = 0; c < cells; ++c) {
        int i = c / d, j = c % d;
        rows[i][j] = val[c];
        rows[d - 1 - i][d - 1 - j] = val[c];
      }
      out.push_back(ThetaMatrix::from_rows(n, rows));
      return;
    }
    for (int k = 0; k <= rem; ++k) {
      val[pos] = k;
      self(self, pos + 1, rem - k);
    }
  };
  rec(rec, 0, r);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ThetaMatrix> enumerate_xi_zero_diag(int n, int max_total) {
  int d = 2 * n;
  std::vector<std::pair<int, int>> reps;  // orbit reps among off-diag cells
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      if (i == j) continue;
      int pi = d + 1 - i, pj = d + 1 - j;
      if (std::make_pair(i, j) <= std::make_pair(pi, pj))
        reps.emplace_back(i, j);
    }
  }
  int half = max_total / 2;  // each orbit value contributes twice to |A|
  std::vector<ThetaMatrix> out;
  std::vector<int> val(reps.size(), 0);
  auto rec = [&](auto&& self, size_t pos, int rem) -> void {
    if (pos == reps.size()) {
      ThetaMatrix m(n);
      for (size_t k = 0; k < reps.size(); ++k)
        if (val[k] > 0)
          m = m.plus_e_theta(reps[k].first, reps[k].second, val[k]);
      out.push_back(m);
      return;
    }
    for (int k = 0; k <= rem; ++k) {
      val[pos] = k;
      self(self, pos + 1, rem - k);
    }
  };
  rec(rec, 0, half);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {
// corner(u, v) = sum_{i <= u, j >= v} a(i,j)
std::vector<std::vector<int>> corner_sums(const ThetaMatrix& a) {
  int d = a.dim();
  std::vector<std::vector<int>> c(d + 2, std::vector<int>(d + 2, 0));
  for (int u = 1; u <= d; ++u)
    for (int v = d; v >= 1; --v)
      c[u][v] = c[u - 1][v] + c[u][v + 1] - c[u - 1][v + 1] + a.at(u, v);
  return c;
}

// lower(u, v) = sum_{i >= u, j <= v} a(i,j)
std::vector<std::vector<int>> lower_sums(const ThetaMatrix& a) {
  int d = a.dim();
  std::vector<std::vector<int>> c(d + 2, std::vector<int>(d + 2, 0));
  for (int u = d; u >= 1; --u)
    for (int v = 1; v <= d; ++v)
      c[u][v] = c[u + 1][v] + c[u][v - 1] - c[u + 1][v - 1] + a.at(u, v);
  return c;
}
}  // namespace

bool preorder_leq(const ThetaMatrix& a, const ThetaMatrix& b) {
  if (a.n() != b.n()) throw std::invalid_argument("preorder_leq: n mismatch");
  int d = a.dim();
  auto ca = corner_sums(a), cb = corner_sums(b);
  for (int u = 1; u < d; ++u)
    for (int v = u + 1; v <= d; ++v)
      if (ca[u][v] > cb[u][v]) return false;
  return true;
}

bool preorder_leq_alt(const ThetaMatrix& a, const ThetaMatrix& b) {
  if (a.n() != b.n()) throw std::invalid_argument("preorder_leq_alt: n mismatch");
  int n = a.n(), d = a.dim();
  auto ca = corner_sums(a), cb = corner_sums(b);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= d; ++v)
      if (ca[u][v] > cb[u][v]) return false;
  auto la = lower_sums(a), lb = lower_sums(b);
  for (int u = 2; u <= n; ++u)
    for (int v = 1; v < u; ++v)
      if (la[u][v] > lb[u][v]) return false;
  return true;
}

bool preorder_lt(const ThetaMatrix& a, const ThetaMatrix& b) {
  // Strictness is the asymmetric part of the preorder, not mere inequality:
  // distinct matrices can dominate each other (e.g. any two diagonal ones,
  // whose corner sums all vanish).
  return preorder_leq(a, b) && !preorder_leq(b, a);
}

ThetaMatrix matrix_of_triple(const Composition& la, const WeylElement& d,
                             const Composition& mu, int n) {
  int r = la.weight();
  if (mu.weight() != r || d.rank() != r)
    throw std::invalid_argument("matrix_of_triple: weight/rank mismatch");
  if (la.size() != n || mu.size() != n)
    throw std::invalid_argument("matrix_of_triple: compositions need n parts");
  std::vector<int> lh = hat(la), mh = hat(mu);
  // block index of a point in {1, ..., 2r} under a hat composition
  auto block_of = [&](const std::vector<int>& h, int x) {
    int s = 0;
    for (size_t b = 0; b < h.size(); ++b) {
      s += h[b];
      if (x <= s) return static_cast<int>(b) + 1;
    }
    throw std::logic_error("block_of: point out of range");
  };
  std::vector<std::vector<int>> rows(2 * n, std::vector<int>(2 * n, 0));
  for (int c = 1; c <= 2 * r; ++c) {
    int j = block_of(mh, c);
    int i = block_of(lh, d.image_of(c));
    rows[i - 1][j - 1] += 1;
  }
  return ThetaMatrix::from_rows(n, rows);
}

Triple triple_of_matrix(const ThetaMatrix& a) {
  int n = a.n(), d2 = a.dim();
  std::vector<int> ro = a.row_sums(), co = a.col_sums();
  for (int i = 0; i < d2; ++i)
    if (ro[i] != ro[d2 - 1 - i] || co[i] != co[d2 - 1 - i])
      throw std::invalid_argument("triple_of_matrix: marginals not palindromic");
  if (a.total() % 2 != 0)
    throw std::invalid_argument("triple_of_matrix: odd entry sum");
  int r = a.total() / 2;
  Composition la{std::vector<int>(ro.begin(), ro.begin() + n)};
  Composition mu{std::vector<int>(co.begin(), co.begin() + n)};
  for (const WeylElement& d : double_coset_reps(la, mu, r)) {
    if (matrix_of_triple(la, d, mu, n) == a) return Triple{la, d, mu};
  }
  throw std::logic_error("triple_of_matrix: no representative found");
}

}  // namespace ischur
