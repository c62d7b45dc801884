#pragma once

#include <compare>
#include <span>
#include <vector>

namespace ischur {

// Element of the type-C Weyl group W(C_r), realized as the permutations w of
// {1, ..., 2r} fixed by the flip theta: w(2r+1-x) = 2r+1 - w(x).
//
// Generators, as permutations of {1, ..., 2r}:
//   s_j = (j, j+1)(2r-j, 2r+1-j)   for 1 <= j < r
//   s_r = (r, r+1)
//
// Composition is (w * u)(x) = w(u(x)); a word [j1, ..., jk] denotes the
// product s_j1 * ... * s_jk read left to right.
class WeylElement {
 public:
  explicit WeylElement(int rank);  // identity
  static WeylElement generator(int rank, int j);
  static WeylElement from_images(std::vector<int> images);  // validates

  int rank() const { return static_cast<int>(img_.size()) / 2; }
  int degree() const { return static_cast<int>(img_.size()); }
  int image_of(int x) const { return img_[x - 1]; }
  const std::vector<int>& images() const { return img_; }
  bool is_identity() const;

  WeylElement operator*(const WeylElement& o) const;
  WeylElement inverse() const;
  WeylElement times_gen(int j) const;  // w * s_j
  WeylElement gen_times(int j) const;  // s_j * w

  // Coxeter descent tests: right_descent(j) iff l(w s_j) < l(w), and
  // left_descent(j) iff l(s_j w) < l(w).  Both reduce to window comparisons
  // of the underlying permutation.
  bool right_descent(int j) const;
  bool left_descent(int j) const;

  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

 private:
  WeylElement() = default;
  std::vector<int> img_;
};

WeylElement word_to_element(int rank, std::span<const int> word);

// Coxeter length via descent-greedy reduction to the identity.
int length(const WeylElement& w);

// A reduced word for w: word_to_element(rank, reduced_word(w)) == w and the
// word length equals length(w).
std::vector<int> reduced_word(const WeylElement& w);

// Composition of r into n nonnegative parts.
struct Composition {
  std::vector<int> parts;

  int size() const { return static_cast<int>(parts.size()); }
  int weight() const;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

// All of Lambda(n, r) in lexicographic order on the parts vectors.
std::vector<Composition> compositions(int n, int r);

// The palindromic doubling (la_1, ..., la_n, la_n, ..., la_1).
std::vector<int> hat(const Composition& la);

// Generators of the parabolic subgroup W_la: all s_k except those at partial
// sums la_1 + ... + la_i.  Never contains s_r, so W_la avoids the wall.
std::vector<int> parabolic_generators(const Composition& la, int rank);

// Exhaustively enumerated group data for one rank (rank <= 5), cached
// process-wide.  elements() is sorted and bfs_length comes from a
// breadth-first search, independent of the greedy length above.
class WeylGroup {
 public:
  static const WeylGroup& get(int rank);

  int rank() const { return rank_; }
  const std::vector<WeylElement>& elements() const { return elements_; }
  int index_of(const WeylElement& w) const;
  int bfs_length(const WeylElement& w) const { return bfs_len_[index_of(w)]; }
  const std::vector<int>& word_of(const WeylElement& w) const {
    return words_[index_of(w)];
  }

 private:
  explicit WeylGroup(int rank);
  int rank_;
  std::vector<WeylElement> elements_;
  std::vector<int> bfs_len_;
  std::vector<std::vector<int>> words_;
};

// Closure of the parabolic generators: the subgroup W_la, sorted.
std::vector<WeylElement> parabolic_subgroup(const Composition& la, int rank);

// Minimal-length right coset representatives D_la for W_la \ W: the d with no
// left descent among the parabolic generators.  Sorted.
std::vector<WeylElement> min_coset_reps(const Composition& la, int rank);

// D_{la,mu} = D_la intersect D_mu^{-1}, the minimal double coset reps.
std::vector<WeylElement> double_coset_reps(const Composition& la,
                                           const Composition& mu, int rank);

struct DoubleCoset {
  std::vector<WeylElement> elements;  // sorted
  WeylElement d_min;
  WeylElement d_plus;
};

// The full double coset W_la d W_mu with its unique shortest and longest
// elements (uniqueness is asserted).
DoubleCoset double_coset(const Composition& la, const WeylElement& d,
                         const Composition& mu);

// The minimal representative of W_la w W_mu containing w.
WeylElement min_double_coset_rep(const Composition& la, const WeylElement& w,
                                 const Composition& mu);

// The longest element of W_la.
WeylElement longest_element(const Composition& la, int rank);

}  // namespace ischur
