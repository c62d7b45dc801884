#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "ischur/weyl.hpp"

using namespace ischur;

TEST_CASE("generators and relations") {
  for (int rank : {1, 2, 3}) {
    WeylElement id(rank);
    for (int j = 1; j <= rank; ++j) {
      WeylElement s = WeylElement::generator(rank, j);
      CHECK(s * s == id);
      CHECK(s.inverse() == s);
    }
    // Braid orders: wall pair has order 4, adjacent short pairs order 3,
    // distant pairs commute.
    for (int i = 1; i <= rank; ++i)
      for (int j = i + 1; j <= rank; ++j) {
        WeylElement p = WeylElement::generator(rank, i) *
                        WeylElement::generator(rank, j);
        int order = 1;
        WeylElement acc = p;
        while (!acc.is_identity()) {
          acc = acc * p;
          ++order;
        }
        int expect = j - i > 1 ? 2 : (j == rank ? 4 : 3);
        CHECK(order == expect);
      }
  }
}

TEST_CASE("group sizes") {
  CHECK(WeylGroup::get(1).elements().size() == 2);
  CHECK(WeylGroup::get(2).elements().size() == 8);
  CHECK(WeylGroup::get(3).elements().size() == 48);
  CHECK(WeylGroup::get(4).elements().size() == 384);
}

TEST_CASE("greedy length agrees with BFS length") {
  for (int rank : {1, 2, 3}) {
    const WeylGroup& g = WeylGroup::get(rank);
    int max_len = 0;
    for (const WeylElement& w : g.elements()) {
      CHECK(length(w) == g.bfs_length(w));
      max_len = std::max(max_len, length(w));
    }
    CHECK(max_len == rank * rank);  // longest element of W(C_r)
  }
}

TEST_CASE("reduced words") {
  const WeylGroup& g = WeylGroup::get(3);
  for (const WeylElement& w : g.elements()) {
    std::vector<int> word = reduced_word(w);
    CHECK(static_cast<int>(word.size()) == length(w));
    CHECK(word_to_element(3, word) == w);
  }
}

TEST_CASE("from_images validates the flip symmetry") {
  CHECK(WeylElement::from_images({2, 1, 4, 3}) ==
        WeylElement::generator(2, 1));
  // A permutation not commuting with x -> 2r+1-x is rejected.
  CHECK_THROWS(WeylElement::from_images({2, 3, 1, 4}));
  CHECK_THROWS(WeylElement::from_images({1, 1, 2, 4}));
}

TEST_CASE("compositions and hat") {
  auto c22 = compositions(2, 2);
  REQUIRE(c22.size() == 3);
  CHECK(c22[0].parts == std::vector<int>{0, 2});
  CHECK(c22[2].parts == std::vector<int>{2, 0});
  CHECK(compositions(3, 2).size() == 6);
  CHECK(hat(Composition{{1, 0}}) == std::vector<int>{1, 0, 0, 1});
  CHECK(hat(Composition{{2, 1}}) == std::vector<int>{2, 1, 1, 2});
  CHECK(Composition{{2, 1}}.weight() == 3);
}

TEST_CASE("parabolic data") {
  // W_la never contains the wall generator.
  CHECK(parabolic_generators(Composition{{1, 1}}, 2).empty());
  CHECK(parabolic_generators(Composition{{2}}, 2) == std::vector<int>{1});
  CHECK(parabolic_subgroup(Composition{{2}}, 2).size() == 2);
  CHECK(parabolic_subgroup(Composition{{1, 1}}, 2).size() == 1);
  CHECK(longest_element(Composition{{1, 1}}, 2).is_identity());
  CHECK(longest_element(Composition{{2}}, 2) == WeylElement::generator(2, 1));

  // |D_la| |W_la| = |W| and representatives are minimal in their cosets.
  for (const Composition& la : compositions(2, 2)) {
    auto sub = parabolic_subgroup(la, 2);
    auto reps = min_coset_reps(la, 2);
    CHECK(reps.size() * sub.size() == 8);
    std::set<WeylElement> seen;
    for (const WeylElement& d : reps)
      for (const WeylElement& w : sub) {
        CHECK(length(w * d) == length(w) + length(d));
        seen.insert(w * d);
      }
    CHECK(seen.size() == 8);  // cosets partition the group
  }
}

TEST_CASE("double cosets") {
  Composition la{{2, 0}}, mu{{1, 1}};
  auto reps = double_coset_reps(la, mu, 2);
  std::size_t covered = 0;
  for (const WeylElement& d : reps) {
    DoubleCoset dc = double_coset(la, d, mu);
    CHECK(dc.d_min == d);
    CHECK(std::count(dc.elements.begin(), dc.elements.end(), dc.d_plus) == 1);
    for (const WeylElement& w : dc.elements) {
      CHECK(min_double_coset_rep(la, w, mu) == d);
      CHECK(length(d) <= length(w));
      CHECK(length(w) <= length(dc.d_plus));
    }
    covered += dc.elements.size();
  }
  CHECK(covered == 8);  // double cosets partition W(C_2)

  // Trivial parabolics: every element is its own double coset.
  Composition triv{{1, 1}};
  CHECK(double_coset_reps(triv, triv, 2).size() == 8);
}
