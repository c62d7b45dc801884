#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ischur/theta.hpp"

using namespace ischur;

TEST_CASE("construction and validation") {
  ThetaMatrix z(2);
  CHECK(z.total() == 0);
  CHECK(z.is_diagonal());

  // E^theta puts a 1 at (i,j) and its flip; at the wall both placements agree.
  ThetaMatrix e = ThetaMatrix::e_theta(2, 1, 2);
  CHECK(e.at(1, 2) == 1);
  CHECK(e.at(4, 3) == 1);
  CHECK(e.total() == 2);
  CHECK(ThetaMatrix::e_theta(1, 1, 2) == ThetaMatrix::e_theta(1, 2, 1));
  CHECK(ThetaMatrix::e_theta(1, 1, 2).at(1, 2) == 1);
  CHECK(ThetaMatrix::e_theta(1, 1, 2).at(2, 1) == 1);
  CHECK(ThetaMatrix::e_theta(2, 1, 3, 0) == ThetaMatrix(2));

  CHECK(ThetaMatrix::diag({1, 0, 0, 1}).at(1, 1) == 1);
  CHECK_THROWS(ThetaMatrix::diag({1, 0, 1, 0}));   // not flip-symmetric
  CHECK_THROWS(ThetaMatrix::diag({-1, 0, 0, -1}));
  CHECK_THROWS(ThetaMatrix::from_rows(1, {{1, 0}, {1, 0}}));
  CHECK_THROWS(ThetaMatrix::from_rows(1, {{1, 0}}));

  ThetaMatrix a = ThetaMatrix::from_rows(1, {{1, 2}, {2, 1}});
  CHECK(a.plus_e_theta(1, 2, -2) == ThetaMatrix::diag({1, 1}));
  CHECK_THROWS(a.plus_e_theta(1, 1, -2));  // entry would go negative
  CHECK(a.plus_diag({1, 1}).diagonal() == std::vector<int>{2, 2});
  CHECK_THROWS(a.plus_diag({1, 0}));
  CHECK(ThetaMatrix::diag(a.diagonal()).plus_e_theta(1, 2, 2) == a);
  CHECK(a.off_diagonal_part() == ThetaMatrix::e_theta(1, 1, 2, 2));
  CHECK(e_theta_vec(2, 1) == std::vector<int>{1, 0, 0, 1});
  CHECK(e_theta_vec(2, 2) == std::vector<int>{0, 1, 1, 0});
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_xi(1, 1).size() == 2);
  CHECK(enumerate_xi(1, 2).size() == 3);
  CHECK(enumerate_xi(2, 1).size() == 8);
  CHECK(enumerate_xi(2, 2).size() == 36);
  CHECK(enumerate_xi(2, 3).size() == 120);
  CHECK(enumerate_xi(3, 2).size() == 171);
  CHECK(enumerate_xi(3, 3).size() == 1140);
  // zero matrix plus the six off-diagonal flip-orbits of a 4x4 grid
  CHECK(enumerate_xi_zero_diag(2, 2).size() == 7);
}

TEST_CASE("marginals are palindromic") {
  for (const ThetaMatrix& a : enumerate_xi(2, 2)) {
    CHECK(a.total() == 4);
    auto ro = a.row_sums(), co = a.col_sums();
    for (int i = 0; i < 4; ++i) {
      CHECK(ro[i] == ro[3 - i]);
      CHECK(co[i] == co[3 - i]);
    }
  }
}

TEST_CASE("preorder definitions agree") {
  auto xi = enumerate_xi(2, 2);
  for (const ThetaMatrix& a : xi)
    for (const ThetaMatrix& b : xi) {
      bool le = preorder_leq(a, b);
      CHECK(le == preorder_leq_alt(a, b));
      CHECK(preorder_lt(a, b) == (le && !preorder_leq(b, a)));
    }
  // Diagonal matrices are minimal: every corner sum sum_{i<=u, j>=v} a(i,j)
  // with u < v vanishes, so they sit below anything with off-diagonal mass.
  ThetaMatrix d = ThetaMatrix::diag({1, 1, 1, 1});
  ThetaMatrix w = ThetaMatrix::diag({1, 0, 0, 1}).plus_e_theta(2, 3, 1);
  CHECK(preorder_lt(d, w));
  CHECK_FALSE(preorder_leq(w, d));
}

TEST_CASE("matrix/triple bijection") {
  for (const ThetaMatrix& a : enumerate_xi(2, 2)) {
    Triple t = triple_of_matrix(a);
    CHECK(t.la.weight() == 2);
    CHECK(t.mu.weight() == 2);
    CHECK(min_double_coset_rep(t.la, t.d, t.mu) == t.d);
    CHECK(matrix_of_triple(t.la, t.d, t.mu, 2) == a);
  }
  // and the reverse direction covers Xi exactly once
  std::size_t count = 0;
  for (const Composition& la : compositions(2, 2))
    for (const Composition& mu : compositions(2, 2))
      count += double_coset_reps(la, mu, 2).size();
  CHECK(count == 36);
}
