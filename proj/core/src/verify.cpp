#include "ischur/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

#include "ischur/longform.hpp"
#include "ischur/parallel.hpp"
#include "ischur/qnum.hpp"
#include "ischur/tensor.hpp"

namespace ischur {

namespace {

constexpr std::size_t kMaxStoredFailures = 25;

std::string vec_str(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string comp_str(const Composition& la) { return vec_str(la.parts); }

// All vectors of the given length with entries in [lo, hi], lexicographic.
std::vector<std::vector<int>> int_boxes(int len, int lo, int hi) {
  std::vector<std::vector<int>> out;
  if (hi < lo) return out;
  std::vector<int> cur(len, lo);
  for (;;) {
    out.push_back(cur);
    int k = len - 1;
    while (k >= 0 && cur[k] == hi) cur[k--] = lo;
    if (k < 0) break;
    ++cur[k];
  }
  return out;
}

// One verification case: run() returns pass, filling both sides on failure.
struct Case {
  std::string label;
  std::function<bool(std::string&, std::string&)> run;
};

SuiteReport execute(const std::string& name, const SuiteParams& p,
                    std::vector<Case> cases) {
  SuiteReport rep;
  rep.suite = name;
  rep.params = p;
  rep.cases = static_cast<long>(cases.size());
  const auto t0 = std::chrono::steady_clock::now();

  std::vector<char> pass(cases.size(), 1);
  std::vector<std::array<std::string, 2>> sides(cases.size());
  parallel_for(static_cast<long>(cases.size()), p.threads, [&](long i) {
    try {
      pass[i] = cases[i].run(sides[i][0], sides[i][1]) ? 1 : 0;
    } catch (const std::exception& e) {
      pass[i] = 0;
      sides[i][0] = std::string("exception: ") + e.what();
    }
  });

  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (pass[i]) continue;
    ++rep.failed;
    if (rep.failures.size() < kMaxStoredFailures)
      rep.failures.push_back({cases[i].label, sides[i][0], sides[i][1]});
  }
  rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

bool equal_or_report(const SchurElement& lhs, const SchurElement& rhs,
                     std::string& L, std::string& R) {
  if (lhs == rhs) return true;
  L = lhs.str();
  R = rhs.str();
  return false;
}

// ---------------------------------------------------------------- short ----

std::vector<Case> build_short(const SuiteParams& p) {
  std::vector<Case> cs;
  const SchurContext* ctx = &SchurContext::get(p.n, p.r);
  const auto las = compositions(p.n, p.r - 1);
  struct Spec {
    ShortKind kind;
    const char* name;
  };
  for (Spec spec : {Spec{ShortKind::Up, "up"}, Spec{ShortKind::Down, "down"},
                    Spec{ShortKind::Wall, "wall"}}) {
    std::vector<int> hs;
    if (spec.kind == ShortKind::Wall) {
      hs.push_back(p.n);
    } else {
      for (int h = 1; h < p.n; ++h) hs.push_back(h);
    }
    for (int h : hs) {
      for (const Composition& la : las) {
        ThetaMatrix d = ThetaMatrix::diag(hat(la));
        ThetaMatrix left = spec.kind == ShortKind::Up
                               ? d.plus_e_theta(h, h + 1, 1)
                               : spec.kind == ShortKind::Down
                                     ? d.plus_e_theta(h + 1, h, 1)
                                     : d.plus_e_theta(p.n + 1, p.n, 1);
        for (const ThetaMatrix& a : ctx->basis()) {
          std::string label = std::string("short ") + spec.name +
                              " h=" + std::to_string(h) +
                              " la=" + comp_str(la) + " left=" + left.str() +
                              " A=" + a.str();
          ShortKind kind = spec.kind;
          cs.push_back({std::move(label),
                        [ctx, kind, h, la, left, a](std::string& L,
                                                    std::string& R) {
                          SchurElement lhs = ctx->short_mul(kind, h, la, a);
                          SchurElement rhs = ctx->oracle_product(left, a);
                          if (lhs == rhs) return true;
                          L = "formula: " + lhs.str();
                          R = "oracle: " + rhs.str();
                          return false;
                        }});
        }
      }
    }
  }
  return cs;
}

// ---------------------------------------------------------------- multi ----

std::vector<Case> build_multi(const SuiteParams& p) {
  std::vector<Case> cs;
  const SchurContext* ctx = &SchurContext::get(p.n, p.r);
  for (int m = 1; m <= p.mmax && m <= p.r; ++m) {
    const auto las = compositions(p.n, p.r - m);
    for (bool up : {true, false}) {
      for (int h = 1; h < p.n; ++h) {
        for (const Composition& la : las) {
          ThetaMatrix d = ThetaMatrix::diag(hat(la));
          ThetaMatrix left = up ? d.plus_e_theta(h, h + 1, m)
                                : d.plus_e_theta(h + 1, h, m);
          for (const ThetaMatrix& a : ctx->basis()) {
            std::string label = std::string("multi ") + (up ? "up" : "down") +
                                " h=" + std::to_string(h) +
                                " m=" + std::to_string(m) +
                                " la=" + comp_str(la) + " left=" + left.str() +
                                " A=" + a.str();
            cs.push_back({std::move(label),
                          [ctx, up, h, m, la, left, a](std::string& L,
                                                       std::string& R) {
                            SchurElement lhs = ctx->multi_mul(up, h, m, la, a);
                            SchurElement rhs = ctx->oracle_product(left, a);
                            if (lhs == rhs) return true;
                            L = "formula: " + lhs.str();
                            R = "oracle: " + rhs.str();
                            return false;
                          }});
          }
        }
      }
    }
  }
  return cs;
}

// ----------------------------------------------------------------- long ----

std::vector<Case> build_long(const SuiteParams& p) {
  std::vector<Case> cs;
  const int n = p.n, r = p.r;
  const SchurContext* ctx = &SchurContext::get(n, r);
  const std::vector<int> zeros(2 * n, 0);
  std::vector<int> ones(2 * n, 1), e1(2 * n, 0);
  e1[0] = 1;

  for (const ThetaMatrix& a : enumerate_xi_zero_diag(n, p.amax)) {
    if (a.total() > 2 * r) continue;
    for (const std::vector<int>& j : int_boxes(2 * n, -p.jbox, p.jbox)) {
      const std::string tail = " A=" + a.str() + " j=" + vec_str(j);
      for (const std::vector<int>& jp : {ones, e1}) {
        cs.push_back({"long O-left j'=" + vec_str(jp) + tail,
                      [ctx, n, r, a, j, jp](std::string& L, std::string& R) {
                        SchurElement aj = long_element(n, a, j, r);
                        SchurElement o =
                            long_element(n, ThetaMatrix(n), jp, r);
                        return equal_or_report(
                            ctx->product(o, aj),
                            evaluate(apply_O(jp, long_basis(n, a, j)), r), L,
                            R);
                      }});
        cs.push_back({"long O-right j'=" + vec_str(jp) + tail,
                      [ctx, n, r, a, j, jp](std::string& L, std::string& R) {
                        SchurElement aj = long_element(n, a, j, r);
                        SchurElement o =
                            long_element(n, ThetaMatrix(n), jp, r);
                        return equal_or_report(
                            ctx->product(aj, o),
                            evaluate(apply_O_right(long_basis(n, a, j), jp),
                                     r),
                            L, R);
                      }});
      }
      for (int h = 1; h < n; ++h) {
        cs.push_back({"long e h=" + std::to_string(h) + tail,
                      [ctx, n, r, h, a, j, zeros](std::string& L,
                                                  std::string& R) {
                        SchurElement g = long_element(
                            n, ThetaMatrix::e_theta(n, h, h + 1), zeros, r);
                        return equal_or_report(
                            ctx->product(g, long_element(n, a, j, r)),
                            evaluate(apply_e(h, long_basis(n, a, j)), r), L,
                            R);
                      }});
        cs.push_back({"long f h=" + std::to_string(h) + tail,
                      [ctx, n, r, h, a, j, zeros](std::string& L,
                                                  std::string& R) {
                        SchurElement g = long_element(
                            n, ThetaMatrix::e_theta(n, h + 1, h), zeros, r);
                        return equal_or_report(
                            ctx->product(g, long_element(n, a, j, r)),
                            evaluate(apply_f(h, long_basis(n, a, j)), r), L,
                            R);
                      }});
      }
      cs.push_back({"long wall" + tail,
                    [ctx, n, r, a, j, zeros](std::string& L, std::string& R) {
                      SchurElement g = long_element(
                          n, ThetaMatrix::e_theta(n, n, n + 1), zeros, r);
                      return equal_or_report(
                          ctx->product(g, long_element(n, a, j, r)),
                          evaluate(apply_wall(long_basis(n, a, j)), r), L, R);
                    }});
    }
  }
  return cs;
}

// ----------------------------------------------------------- triangular ----

// The wall-replacement of a chain factor D + a E^th_{n+1,n}: move s units
// from the off-diagonal pair onto the diagonal, keeping both marginals.
ThetaMatrix wall_replaced(int n, const ThetaMatrix& factor, int s) {
  std::vector<int> d = e_theta_vec(n, n);
  for (int& x : d) x *= s;
  return factor.plus_e_theta(n + 1, n, -s).plus_diag(d);
}

std::vector<Case> build_triangular(const SuiteParams& p) {
  std::vector<Case> cs;
  const int n = p.n;
  const SchurContext* ctx = &SchurContext::get(p.n, p.r);

  for (const ThetaMatrix& a : ctx->basis()) {
    cs.push_back(
        {"triangular leading A=" + a.str(),
         [ctx, a](std::string& L, std::string& R) {
           SchurElement m = ctx->triangular_monomial(a);
           bool ok = m.coeff(a) == LaurentPoly(1);
           for (const auto& [b, c] : m.terms())
             if (!(b == a) && !preorder_lt(b, a)) ok = false;
           if (ok) return true;
           L = "m(A) = " + m.str();
           R = "expected coefficient 1 at A and all other support strictly "
               "below A";
           return false;
         }});

    const auto factors = ctx->monomial_factors(a);
    std::vector<int> wall_idx;
    for (std::size_t k = 0; k < factors.size(); ++k)
      if (factors[k].h == n && factors[k].multiplicity > 0)
        wall_idx.push_back(static_cast<int>(k));

    auto replaced_check = [ctx, n, a, factors](
                              const std::vector<std::pair<int, int>>& repl,
                              std::string& L, std::string& R) {
      std::vector<ThetaMatrix> fs;
      fs.reserve(factors.size());
      for (const auto& f : factors) fs.push_back(f.matrix);
      for (auto [k, s] : repl) fs[k] = wall_replaced(n, fs[k], s);
      SchurElement prod = ctx->product_of_factors(fs);
      bool ok = true;
      for (const auto& [b, c] : prod.terms())
        if (!preorder_lt(b, a)) ok = false;
      if (ok) return true;
      L = "replaced product = " + prod.str();
      R = "expected zero or support strictly below A";
      return false;
    };

    for (int k : wall_idx) {
      for (int s = 1; s <= factors[k].multiplicity; ++s) {
        cs.push_back({"triangular wall-replacement A=" + a.str() +
                          " factor=(" + std::to_string(factors[k].i) + "," +
                          std::to_string(factors[k].h) + "," +
                          std::to_string(factors[k].j) +
                          ") s=" + std::to_string(s),
                      [replaced_check, k, s](std::string& L, std::string& R) {
                        return replaced_check({{k, s}}, L, R);
                      }});
      }
    }
    if (wall_idx.size() >= 2) {
      int k0 = wall_idx[0], k1 = wall_idx[1];
      cs.push_back({"triangular wall-replacement A=" + a.str() +
                        " factors=" + std::to_string(k0) + "," +
                        std::to_string(k1) + " s=1,1",
                    [replaced_check, k0, k1](std::string& L, std::string& R) {
                      return replaced_check({{k0, 1}, {k1, 1}}, L, R);
                    }});
    }
  }

  // One aggregate case: the transition matrix from {m(A)} to {[A]} is lower
  // unitriangular along a linear extension of the order, hence invertible.
  // At small dimensions the inverse is computed by back-substitution and
  // checked by multiplying back.
  cs.push_back({"triangular unitriangular inversion",
                [ctx](std::string& L, std::string& R) {
                  const auto topo = ctx->topological_order();
                  if (topo.size() != ctx->basis().size()) {
                    L = "topological order covers " +
                        std::to_string(topo.size()) + " of " +
                        std::to_string(ctx->basis().size()) + " elements";
                    R = "expected a full linear extension";
                    return false;
                  }
                  std::map<ThetaMatrix, int> pos;
                  for (std::size_t i = 0; i < topo.size(); ++i)
                    pos[topo[i]] = static_cast<int>(i);

                  const bool invert = topo.size() <= 200;
                  std::map<ThetaMatrix, std::map<ThetaMatrix, LaurentPoly>>
                      rep;
                  for (const ThetaMatrix& a : topo) {
                    SchurElement m = ctx->triangular_monomial(a);
                    if (!(m.coeff(a) == LaurentPoly(1))) {
                      L = "m(A) = " + m.str();
                      R = "expected unit diagonal at A=" + a.str();
                      return false;
                    }
                    std::map<ThetaMatrix, LaurentPoly> cur;
                    cur[a] = LaurentPoly(1);
                    for (const auto& [b, c] : m.terms()) {
                      if (b == a) continue;
                      if (pos[b] >= pos[a]) {
                        L = "m(A) for A=" + a.str() + " reaches B=" + b.str();
                        R = "expected B strictly earlier in the linear "
                            "extension";
                        return false;
                      }
                      if (!invert) continue;
                      for (const auto& [mk, mc] : rep[b]) {
                        LaurentPoly upd = cur[mk] - c * mc;
                        if (upd.is_zero())
                          cur.erase(mk);
                        else
                          cur[mk] = upd;
                      }
                    }
                    if (!invert) continue;
                    SchurElement acc = ctx->zero();
                    for (const auto& [mk, mc] : cur)
                      acc += ctx->triangular_monomial(mk) * mc;
                    if (!(acc == ctx->basis_element(a))) {
                      L = "back-substituted combination = " + acc.str();
                      R = "expected [A] for A=" + a.str();
                      return false;
                    }
                    rep[a] = std::move(cur);
                  }
                  return true;
                }});
  return cs;
}

// -------------------------------------------------------------- leading ----

std::vector<Case> build_leading(const SuiteParams& p) {
  std::vector<Case> cs;
  const int n = p.n;
  const SchurContext* ctx = &SchurContext::get(p.n, p.r);
  const int nn = 2 * n;

  auto push = [&cs, ctx](const std::string& label, const ThetaMatrix& left,
                         const ThetaMatrix& a, const ThetaMatrix& lead) {
    cs.push_back({label, [ctx, left, a, lead](std::string& L, std::string& R) {
                    SchurElement prod = ctx->product(
                        ctx->basis_element(left), ctx->basis_element(a));
                    bool ok = prod.coeff(lead) == LaurentPoly(1);
                    for (const auto& [b, c] : prod.terms())
                      if (!(b == lead) && !preorder_lt(b, lead)) ok = false;
                    if (ok) return true;
                    L = "product = " + prod.str();
                    R = "expected coefficient 1 at " + lead.str() +
                        " and all other support strictly below it";
                    return false;
                  }});
  };

  auto diag_minus = [nn](const std::vector<int>& ro, int i, int m) {
    // ro - m * e^th_i, as a diagonal vector; empty when it goes negative.
    std::vector<int> d = ro;
    d[i - 1] -= m;
    d[nn - i] -= m;
    if (d[i - 1] < 0 || d[nn - i] < 0) d.clear();
    return d;
  };

  for (const ThetaMatrix& a : ctx->basis()) {
    const std::vector<int> ro = a.row_sums();

    for (int h = 1; h < n; ++h) {
      // Class (1): row h vanishes from k on, row h+1 vanishes beyond its
      // last entry k.
      int k1 = 0;
      for (int j = nn; j >= 1; --j)
        if (a.at(h + 1, j) > 0) {
          k1 = j;
          break;
        }
      if (k1 > 0) {
        bool hyp = true;
        for (int j = k1; j <= nn; ++j)
          if (a.at(h, j) != 0) hyp = false;
        if (hyp) {
          for (int m = 1; m <= ro[h]; ++m) {
            auto d = diag_minus(ro, h + 1, m);
            if (d.empty()) break;
            ThetaMatrix left = ThetaMatrix::diag(d).plus_e_theta(h, h + 1, m);
            ThetaMatrix lead = a;
            int rem = m;
            for (int j = k1; j >= 1 && rem > 0; --j) {
              int take = std::min(rem, a.at(h + 1, j));
              if (take == 0) continue;
              lead = lead.plus_e_theta(h, j, take)
                         .plus_e_theta(h + 1, j, -take);
              rem -= take;
            }
            push("leading class=1 h=" + std::to_string(h) +
                     " k=" + std::to_string(k1) + " m=" + std::to_string(m) +
                     " A=" + a.str(),
                 left, a, lead);
          }
        }
      }

      // Class (2): row h starts at k, row h+1 vanishes up to k.
      int k2 = 0;
      for (int j = 1; j <= nn; ++j)
        if (a.at(h, j) > 0) {
          k2 = j;
          break;
        }
      if (k2 > 0) {
        bool hyp = true;
        for (int j = 1; j <= k2; ++j)
          if (a.at(h + 1, j) != 0) hyp = false;
        if (hyp) {
          for (int m = 1; m <= ro[h - 1]; ++m) {
            auto d = diag_minus(ro, h, m);
            if (d.empty()) break;
            ThetaMatrix left = ThetaMatrix::diag(d).plus_e_theta(h + 1, h, m);
            ThetaMatrix lead = a;
            int rem = m;
            for (int j = k2; j <= nn && rem > 0; ++j) {
              int take = std::min(rem, a.at(h, j));
              if (take == 0) continue;
              lead = lead.plus_e_theta(h + 1, j, take)
                         .plus_e_theta(h, j, -take);
              rem -= take;
            }
            push("leading class=2 h=" + std::to_string(h) +
                     " k=" + std::to_string(k2) + " m=" + std::to_string(m) +
                     " A=" + a.str(),
                 left, a, lead);
          }
        }
      }
    }

    // Class (3): the wall row n starts at k <= n and vanishes from 2n+1-k on.
    int k3 = 0;
    for (int j = 1; j <= nn; ++j)
      if (a.at(n, j) > 0) {
        k3 = j;
        break;
      }
    if (k3 > 0 && k3 <= n) {
      bool hyp = true;
      for (int j = nn + 1 - k3; j <= nn; ++j)
        if (a.at(n, j) != 0) hyp = false;
      if (hyp) {
        for (int m = 1; m <= a.at(n, k3); ++m) {
          auto d = diag_minus(ro, n, m);
          if (d.empty()) break;
          ThetaMatrix left = ThetaMatrix::diag(d).plus_e_theta(n + 1, n, m);
          ThetaMatrix lead =
              a.plus_e_theta(n + 1, k3, m).plus_e_theta(n, k3, -m);
          push("leading class=3 k=" + std::to_string(k3) +
                   " m=" + std::to_string(m) + " A=" + a.str(),
               left, a, lead);
        }
      }
    }
  }
  return cs;
}

// ---------------------------------------------- relations and commuting ----

SuiteReport wrap_check(const std::string& name, const SuiteParams& p,
                       CheckReport (*fn)(int, int)) {
  SuiteReport rep;
  rep.suite = name;
  rep.params = p;
  const auto t0 = std::chrono::steady_clock::now();
  CheckReport cr = fn(p.n, p.r);
  rep.cases = cr.cases;
  rep.failed = static_cast<long>(cr.failures.size());
  for (const std::string& f : cr.failures) {
    if (rep.failures.size() >= kMaxStoredFailures) break;
    rep.failures.push_back({f, "", ""});
  }
  rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

// -------------------------------------------------------------- divided ----

std::vector<Case> build_divided(const SuiteParams& p) {
  std::vector<Case> cs;
  const int n = p.n, r = p.r;
  const SchurContext* ctx = &SchurContext::get(n, r);
  const std::vector<int> zeros(2 * n, 0);
  const LaurentPoly vm = LaurentPoly::v(1) - LaurentPoly::v(-1);

  auto power_of = [](const SchurContext* c, const SchurElement& g, int m) {
    SchurElement acc = c->unit();
    for (int k = 0; k < m; ++k) acc = c->product(g, acc);
    return acc;
  };

  // DP(1): off-wall divided powers are termwise integral.
  for (int h = 1; h < n; ++h) {
    for (bool up : {true, false}) {
      for (int m = 1; m <= p.mmax; ++m) {
        cs.push_back(
            {std::string("divided DP1 ") + (up ? "e" : "f") +
                 " h=" + std::to_string(h) + " m=" + std::to_string(m),
             [ctx, n, r, h, up, m, zeros, power_of](std::string& L,
                                                    std::string& R) {
               ThetaMatrix g1 = up ? ThetaMatrix::e_theta(n, h, h + 1)
                                   : ThetaMatrix::e_theta(n, h + 1, h);
               ThetaMatrix gm = up ? ThetaMatrix::e_theta(n, h, h + 1, m)
                                   : ThetaMatrix::e_theta(n, h + 1, h, m);
               SchurElement g = long_element(n, g1, zeros, r);
               SchurElement lhs = ctx->zero();
               try {
                 lhs = power_of(ctx, g, m).exact_divided(qfactorial(m));
               } catch (const std::domain_error& e) {
                 L = std::string("division by [m]! inexact: ") + e.what();
                 R = "expected a termwise-integral divided power";
                 return false;
               }
               return equal_or_report(lhs, long_element(n, gm, zeros, r), L,
                                      R);
             }});
      }
    }
  }

  // EaE: the wall recursion with the 1/(v - v^-1) corrections.
  for (int a = 1; a <= p.mmax; ++a) {
    cs.push_back(
        {"divided EaE a=" + std::to_string(a),
         [ctx, n, r, a, zeros, vm](std::string& L, std::string& R) {
           std::vector<int> minus_en(2 * n, 0), minus_eth(2 * n, 0);
           minus_en[n - 1] = -1;
           minus_eth[n - 1] = -1;
           minus_eth[n] = -1;
           LongCombination rhs(n);
           rhs.add_term(ThetaMatrix::e_theta(n, n, n + 1, a + 1), zeros,
                        RatFunc(bracket(a + 1)));
           rhs.add_term(ThetaMatrix::e_theta(n, n, n + 1, a), minus_en,
                        RatFunc(LaurentPoly::v(a) - LaurentPoly::v(-a)));
           RatFunc c(LaurentPoly::v(a), vm);
           rhs.add_term(ThetaMatrix::e_theta(n, n, n + 1, a - 1), zeros, c);
           rhs.add_term(ThetaMatrix::e_theta(n, n, n + 1, a - 1), minus_eth,
                        -c);
           SchurElement lhs = ctx->product(
               long_element(n, ThetaMatrix::e_theta(n, n, n + 1), zeros, r),
               long_element(n, ThetaMatrix::e_theta(n, n, n + 1, a), zeros,
                            r));
           return equal_or_report(lhs, evaluate(rhs, r), L, R);
         }});
  }

  // DP(2): the wall power expansion, compared with [m]! cleared (the wall
  // divided power is not termwise integral, so no exact_divided here).
  for (int m = 1; m <= p.mmax; ++m) {
    cs.push_back(
        {"divided wall-expand m=" + std::to_string(m),
         [ctx, n, r, m, zeros, power_of](std::string& L, std::string& R) {
           LongCombination xm =
               t_power_expand(n, m) * RatFunc(qfactorial(m));
           SchurElement g = long_element(
               n, ThetaMatrix::e_theta(n, n, n + 1), zeros, r);
           return equal_or_report(power_of(ctx, g, m), evaluate(xm, r), L, R);
         }});
  }

  // DP(3): the formal wall-multiple product evaluated at two adjacent r.
  {
    std::vector<int> rs{r};
    if (r + 1 <= 4) rs.push_back(r + 1);
    std::vector<int> spike(2 * n, 0);
    spike[0] = 1;
    spike[n] = -1;  // e_1 - e_{n+1}
    for (int rr : rs) SchurContext::get(n, rr);
    for (int m = 1; m <= std::min(p.mmax, 2); ++m) {
      for (const ThetaMatrix& a :
           enumerate_xi_zero_diag(n, std::min(p.amax, 2))) {
        for (const std::vector<int>& j : {zeros, spike}) {
          for (int rr : rs) {
            if (a.total() > 2 * rr || m > rr) continue;
            cs.push_back(
                {"divided two-point m=" + std::to_string(m) +
                     " A=" + a.str() + " j=" + vec_str(j) +
                     " r=" + std::to_string(rr),
                 [n, m, a, j, rr, zeros](std::string& L, std::string& R) {
                   const SchurContext& c = SchurContext::get(n, rr);
                   SchurElement lhs = c.product(
                       long_element(
                           n, ThetaMatrix::e_theta(n, n, n + 1, m), zeros,
                           rr),
                       long_element(n, a, j, rr));
                   return equal_or_report(
                       lhs, evaluate(wall_multiple_mul(n, m, a, j), rr), L,
                       R);
                 }});
          }
        }
      }
    }
  }

  // CF: commutation with the wall element, for every exponent vector.
  {
    std::vector<int> ones(2 * n, 1), spiky(2 * n, 0);
    spiky[0] = 1;
    if (2 * n >= 2) spiky[1] = -1;
    if (2 * n - 2 > 1) spiky[2 * n - 2] = 1;
    for (const std::vector<int>& j : {ones, spiky}) {
      cs.push_back({"divided CF1 j=" + vec_str(j),
                    [ctx, n, r, j, zeros](std::string& L, std::string& R) {
                      SchurElement wall = long_element(
                          n, ThetaMatrix::e_theta(n, n, n + 1), zeros, r);
                      SchurElement o =
                          long_element(n, ThetaMatrix(n), j, r);
                      return equal_or_report(ctx->product(o, wall),
                                             ctx->product(wall, o), L, R);
                    }});
    }
    for (int h = 1; h + 1 < n; ++h) {
      cs.push_back({"divided CF2 h=" + std::to_string(h),
                    [ctx, n, r, h, zeros](std::string& L, std::string& R) {
                      SchurElement wall = long_element(
                          n, ThetaMatrix::e_theta(n, n, n + 1), zeros, r);
                      SchurElement e = long_element(
                          n, ThetaMatrix::e_theta(n, h, h + 1), zeros, r);
                      return equal_or_report(ctx->product(e, wall),
                                             ctx->product(wall, e), L, R);
                    }});
      cs.push_back({"divided CF3 h=" + std::to_string(h),
                    [ctx, n, r, h, zeros](std::string& L, std::string& R) {
                      SchurElement wall = long_element(
                          n, ThetaMatrix::e_theta(n, n, n + 1), zeros, r);
                      SchurElement f = long_element(
                          n, ThetaMatrix::e_theta(n, h + 1, h), zeros, r);
                      return equal_or_report(ctx->product(f, wall),
                                             ctx->product(wall, f), L, R);
                    }});
    }
  }
  return cs;
}

// --------------------------------------------------------------- kbinom ----

std::vector<Case> build_kbinom(const SuiteParams& p) {
  std::vector<Case> cs;
  const SchurContext* ctx = &SchurContext::get(p.n, p.r);
  for (const Composition& la : compositions(p.n, p.r)) {
    cs.push_back({"kbinom la=" + comp_str(la),
                  [ctx, la](std::string& L, std::string& R) {
                    return equal_or_report(k_binomial(la, ctx->r()),
                                           ctx->weight_idempotent(la), L, R);
                  }});
  }
  return cs;
}

// ------------------------------------------------------------ stability ----

std::vector<Case> build_stability(const SuiteParams& p) {
  std::vector<Case> cs;
  const int n = p.n;
  std::vector<int> rset = p.rset;
  if (rset.empty()) rset = {1, 2, 3};
  std::sort(rset.begin(), rset.end());
  rset.erase(std::unique(rset.begin(), rset.end()), rset.end());
  for (int rr : rset) {
    if (rr < 1 || rr > 4)
      throw std::invalid_argument("stability: rset entries must be in [1,4]");
    SchurContext::get(n, rr);
  }

  const std::vector<int> zeros(2 * n, 0), ones(2 * n, 1);
  const RatFunc twist = RatFunc(LaurentPoly::v(1));

  struct Identity {
    std::string name;
    ThetaMatrix gen;  // left factor at weight-zero exponents
    std::vector<int> gen_j;
    std::function<LongCombination(const LongCombination&)> apply;
  };
  std::vector<Identity> ids;
  ids.push_back({"O(ones)", ThetaMatrix(n), ones,
                 [ones](const LongCombination& b) { return apply_O(ones, b); }});
  for (int h = 1; h < n; ++h) {
    ids.push_back({"e_" + std::to_string(h),
                   ThetaMatrix::e_theta(n, h, h + 1), zeros,
                   [h](const LongCombination& b) { return apply_e(h, b); }});
    ids.push_back({"f_" + std::to_string(h),
                   ThetaMatrix::e_theta(n, h + 1, h), zeros,
                   [h](const LongCombination& b) { return apply_f(h, b); }});
  }
  ids.push_back({"wall", ThetaMatrix::e_theta(n, n, n + 1), zeros,
                 [](const LongCombination& b) { return apply_wall(b); }});

  for (const ThetaMatrix& a : enumerate_xi_zero_diag(n, p.amax)) {
    for (const std::vector<int>& j : int_boxes(2 * n, -p.jbox, p.jbox)) {
      LongCombination base = long_basis(n, a, j);
      for (const Identity& id : ids) {
        LongCombination formal = id.apply(base);
        if (p.perturb) formal = formal * twist;
        for (int rr : rset) {
          if (a.total() > 2 * rr) continue;
          cs.push_back(
              {"stability " + id.name + " A=" + a.str() + " j=" + vec_str(j) +
                   " r=" + std::to_string(rr),
               [n, a, j, rr, gen = id.gen, gen_j = id.gen_j, formal](
                   std::string& L, std::string& R) {
                 const SchurContext& c = SchurContext::get(n, rr);
                 SchurElement lhs =
                     c.product(long_element(n, gen, gen_j, rr),
                               long_element(n, a, j, rr));
                 return equal_or_report(lhs, evaluate(formal, rr), L, R);
               }});
        }
      }
    }
  }
  return cs;
}

// ------------------------------------------------------------ dispatch -----

void validate_params(const SuiteParams& p) {
  if (p.n < 1 || p.n > 4 || p.r < 1 || p.r > 4)
    throw std::invalid_argument("n and r must lie in [1,4]");
  if (p.mmax < 0 || p.jbox < 0 || p.amax < 0)
    throw std::invalid_argument("mmax, jbox, amax must be nonnegative");
  if (xi_size(p.n, p.r) > 10000)
    throw std::invalid_argument(
        "basis size " + std::to_string(xi_size(p.n, p.r)) +
        " exceeds the 10^4 cap at (n,r)=(" + std::to_string(p.n) + "," +
        std::to_string(p.r) + ")");
}

}  // namespace

unsigned long long xi_size(int n, int r) {
  unsigned long long c = 1;
  const int cells = 2 * n * n;
  for (int i = 1; i <= r; ++i)
    c = c * static_cast<unsigned long long>(cells - 1 + i) /
        static_cast<unsigned long long>(i);
  return c;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "short",    "multi",     "long",   "triangular", "leading",
      "relations", "commuting", "divided", "kbinom",     "stability"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
  validate_params(params);
  if (name == "relations")
    return wrap_check(name, params, &check_relations);
  if (name == "commuting")
    return wrap_check(name, params, &check_commuting_and_match);

  std::vector<Case> cases;
  if (name == "short")
    cases = build_short(params);
  else if (name == "multi")
    cases = build_multi(params);
  else if (name == "long")
    cases = build_long(params);
  else if (name == "triangular")
    cases = build_triangular(params);
  else if (name == "leading")
    cases = build_leading(params);
  else if (name == "divided")
    cases = build_divided(params);
  else if (name == "kbinom")
    cases = build_kbinom(params);
  else if (name == "stability")
    cases = build_stability(params);
  else
    throw std::invalid_argument("unknown suite: " + name);
  return execute(name, params, std::move(cases));
}

SchurElement formula_product(const SchurContext& ctx, const ThetaMatrix& lhs,
                             const ThetaMatrix& rhs) {
  const int n = ctx.n(), r = ctx.r();
  if (lhs.n() != n || rhs.n() != n)
    throw std::invalid_argument("formula_product: matrix size mismatch");
  if (lhs.total() != 2 * r || rhs.total() != 2 * r)
    throw std::invalid_argument(
        "formula_product: matrices must have entry sum 2r");

  ThetaMatrix off = lhs.off_diagonal_part();
  if (off == ThetaMatrix(n)) {
    // Weight idempotent: [diag] [A] is [A] or 0 by row profile.
    return lhs.diagonal() == rhs.row_sums() ? ctx.basis_element(rhs)
                                            : ctx.zero();
  }

  int fi = 0, fj = 0, m = 0;
  for (int i = 1; i <= 2 * n && m == 0; ++i)
    for (int j = 1; j <= 2 * n && m == 0; ++j)
      if (i != j && off.at(i, j) > 0) {
        fi = i;
        fj = j;
        m = off.at(i, j);
      }
  if (!(off == ThetaMatrix::e_theta(n, fi, fj, m)))
    throw std::invalid_argument(
        "formula_product: left factor must be diag(hat la) + m E^theta for "
        "a single off-diagonal pair");

  std::vector<int> d = lhs.diagonal();
  Composition la{std::vector<int>(d.begin(), d.begin() + n)};
  if ((fi == n && fj == n + 1) || (fi == n + 1 && fj == n)) {
    if (m != 1)
      throw std::invalid_argument(
          "formula_product: no closed one-step formula for wall "
          "multiplicity > 1");
    return ctx.short_mul(ShortKind::Wall, n, la, rhs);
  }
  if (fj == fi + 1 && fi < n)
    return m == 1 ? ctx.short_mul(ShortKind::Up, fi, la, rhs)
                  : ctx.multi_mul(true, fi, m, la, rhs);
  if (fi == fj + 1 && fj < n)
    return m == 1 ? ctx.short_mul(ShortKind::Down, fj, la, rhs)
                  : ctx.multi_mul(false, fj, m, la, rhs);
  throw std::invalid_argument(
      "formula_product: off-diagonal part must sit on adjacent rows");
}

}  // namespace ischur
