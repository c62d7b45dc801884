#include "ischur/weyl.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ischur {

WeylElement::WeylElement(int rank) {
  if (rank < 1) throw std::invalid_argument("WeylElement: rank must be >= 1");
  img_.resize(2 * rank);
  std::iota(img_.begin(), img_.end(), 1);
}

WeylElement WeylElement::generator(int rank, int j) {
  if (j < 1 || j > rank)
    throw std::invalid_argument("WeylElement::generator: index out of range");
  WeylElement s(rank);
  int n2 = 2 * rank;
  std::swap(s.img_[j - 1], s.img_[j]);
  if (j < rank) std::swap(s.img_[n2 - j - 1], s.img_[n2 - j]);
  return s;
}

WeylElement WeylElement::from_images(std::vector<int> images) {
  int n2 = static_cast<int>(images.size());
  if (n2 < 2 || n2 % 2 != 0)
    throw std::invalid_argument("from_images: need even degree >= 2");
  std::vector<bool> seen(n2, false);
  for (int x : images) {
    if (x < 1 || x > n2 || seen[x - 1])
      throw std::invalid_argument("from_images: not a permutation");
    seen[x - 1] = true;
  }
  for (int x = 1; x <= n2; ++x) {
    if (images[n2 - x] != n2 + 1 - images[x - 1])
      throw std::invalid_argument("from_images: not theta-fixed");
  }
  WeylElement w;
  w.img_ = std::move(images);
  return w;
}

bool WeylElement::is_identity() const {
  for (int x = 1; x <= degree(); ++x)
    if (img_[x - 1] != x) return false;
  return true;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  if (degree() != o.degree())
    throw std::invalid_argument("WeylElement product: rank mismatch");
  WeylElement r;
  r.img_.resize(img_.size());
  for (size_t x = 0; x < img_.size(); ++x) r.img_[x] = img_[o.img_[x] - 1];
  return r;
}

WeylElement WeylElement::inverse() const {
  WeylElement r;
  r.img_.resize(img_.size());
  for (size_t x = 0; x < img_.size(); ++x) r.img_[img_[x] - 1] = x + 1;
  return r;
}

WeylElement WeylElement::times_gen(int j) const {
  // Right multiplication permutes positions.
  if (j < 1 || j > rank()) throw std::invalid_argument("times_gen: bad index");
  WeylElement r = *this;
  int n2 = degree();
  std::swap(r.img_[j - 1], r.img_[j]);
  if (j < rank()) std::swap(r.img_[n2 - j - 1], r.img_[n2 - j]);
  return r;
}

WeylElement WeylElement::gen_times(int j) const {
  // Left multiplication renames values.
  if (j < 1 || j > rank()) throw std::invalid_argument("gen_times: bad index");
  int n2 = degree();
  auto swap_values = [&](std::vector<int>& v, int a, int b) {
    for (int& x : v) {
      if (x == a)
        x = b;
      else if (x == b)
        x = a;
    }
  };
  WeylElement r = *this;
  swap_values(r.img_, j, j + 1);
  if (j < rank()) swap_values(r.img_, n2 - j, n2 + 1 - j);
  return r;
}

bool WeylElement::right_descent(int j) const {
  if (j < 1 || j > rank())
    throw std::invalid_argument("right_descent: bad index");
  return img_[j - 1] > img_[j];
}

bool WeylElement::left_descent(int j) const {
  return inverse().right_descent(j);
}

WeylElement word_to_element(int rank, std::span<const int> word) {
  WeylElement w(rank);
  for (int j : word) w = w.times_gen(j);
  return w;
}

int length(const WeylElement& w) {
  WeylElement u = w;
  int len = 0;
  while (!u.is_identity()) {
    int j = 1;
    while (!u.right_descent(j)) ++j;  // a non-identity element has a descent
    u = u.times_gen(j);
    ++len;
  }
  return len;
}

std::vector<int> reduced_word(const WeylElement& w) {
  // Peeling right descents yields w = s_{j_k} ... s_{j_1}; reverse to read the
  // word left to right.
  std::vector<int> rev;
  WeylElement u = w;
  while (!u.is_identity()) {
    int j = 1;
    while (!u.right_descent(j)) ++j;
    u = u.times_gen(j);
    rev.push_back(j);
  }
  return {rev.rbegin(), rev.rend()};
}

int Composition::weight() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

std::vector<Composition> compositions(int n, int r) {
  if (n < 1 || r < 0) throw std::invalid_argument("compositions: bad n or r");
  std::vector<Composition> out;
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == n - 1) {
      cur[pos] = rem;
      out.push_back(Composition{cur});
      return;
    }
    for (int k = 0; k <= rem; ++k) {
      cur[pos] = k;
      self(self, pos + 1, rem - k);
    }
  };
  rec(rec, 0, r);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> hat(const Composition& la) {
  std::vector<int> h = la.parts;
  h.insert(h.end(), la.parts.rbegin(), la.parts.rend());
  return h;
}

std::vector<int> parabolic_generators(const Composition& la, int rank) {
  if (la.weight() != rank)
    throw std::invalid_argument("parabolic_generators: |la| must equal rank");
  std::set<int> removed;
  int s = 0;
  for (int p : la.parts) {
    s += p;
    if (s >= 1 && s <= rank) removed.insert(s);
  }
  std::vector<int> gens;
  for (int k = 1; k <= rank; ++k)
    if (!removed.count(k)) gens.push_back(k);
  return gens;
}

WeylGroup::WeylGroup(int rank) : rank_(rank) {
  if (rank < 1 || rank > 5)
    throw std::invalid_argument("WeylGroup: rank must be in [1, 5]");
  std::map<WeylElement, int> dist;
  std::vector<WeylElement> queue{WeylElement(rank)};
  dist[queue[0]] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    WeylElement w = queue[head];
    int d = dist[w];
    for (int j = 1; j <= rank; ++j) {
      WeylElement u = w.times_gen(j);
      if (dist.emplace(u, d + 1).second) queue.push_back(u);
    }
  }
  elements_.reserve(dist.size());
  for (const auto& [w, d] : dist) elements_.push_back(w);  // sorted (map key)
  bfs_len_.resize(elements_.size());
  words_.resize(elements_.size());
  for (size_t i = 0; i < elements_.size(); ++i) {
    bfs_len_[i] = dist[elements_[i]];
    words_[i] = reduced_word(elements_[i]);
  }
}

const WeylGroup& WeylGroup::get(int rank) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<WeylGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(rank);
  if (it == cache.end())
    it = cache.emplace(rank, std::unique_ptr<WeylGroup>(new WeylGroup(rank)))
             .first;
  return *it->second;
}

int WeylGroup::index_of(const WeylElement& w) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), w);
  if (it == elements_.end() || !(*it == w))
    throw std::invalid_argument("WeylGroup::index_of: element not in group");
  return static_cast<int>(it - elements_.begin());
}

std::vector<WeylElement> parabolic_subgroup(const Composition& la, int rank) {
  std::vector<int> gens = parabolic_generators(la, rank);
  std::set<WeylElement> seen{WeylElement(rank)};
  std::vector<WeylElement> queue{WeylElement(rank)};
  for (size_t head = 0; head < queue.size(); ++head) {
    WeylElement w = queue[head];
    for (int j : gens) {
      WeylElement u = w.times_gen(j);
      if (seen.insert(u).second) queue.push_back(u);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<WeylElement> min_coset_reps(const Composition& la, int rank) {
  std::vector<int> gens = parabolic_generators(la, rank);
  std::vector<WeylElement> out;
  for (const WeylElement& w : WeylGroup::get(rank).elements()) {
    bool ok = true;
    for (int j : gens) {
      if (w.left_descent(j)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(w);
  }
  return out;
}

std::vector<WeylElement> double_coset_reps(const Composition& la,
                                           const Composition& mu, int rank) {
  std::vector<int> gl = parabolic_generators(la, rank);
  std::vector<int> gm = parabolic_generators(mu, rank);
  std::vector<WeylElement> out;
  for (const WeylElement& w : WeylGroup::get(rank).elements()) {
    bool ok = true;
    for (int j : gl) {
      if (w.left_descent(j)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (int j : gm) {
      if (w.right_descent(j)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(w);
  }
  return out;
}

DoubleCoset double_coset(const Composition& la, const WeylElement& d,
                         const Composition& mu) {
  int rank = d.rank();
  std::vector<WeylElement> wl = parabolic_subgroup(la, rank);
  std::vector<WeylElement> wm = parabolic_subgroup(mu, rank);
  std::set<WeylElement> elems;
  for (const WeylElement& u : wl) {
    WeylElement ud = u * d;
    for (const WeylElement& w : wm) elems.insert(ud * w);
  }
  DoubleCoset dc{std::vector<WeylElement>(elems.begin(), elems.end()),
                 WeylElement(rank), WeylElement(rank)};
  int lmin = -1, lmax = -1;
  bool min_unique = true, max_unique = true;
  for (const WeylElement& w : dc.elements) {
    int l = length(w);
    if (lmin < 0 || l < lmin) {
      lmin = l;
      dc.d_min = w;
      min_unique = true;
    } else if (l == lmin) {
      min_unique = false;
    }
    if (lmax < 0 || l > lmax) {
      lmax = l;
      dc.d_plus = w;
      max_unique = true;
    } else if (l == lmax) {
      max_unique = false;
    }
  }
  if (!min_unique || !max_unique)
    throw std::logic_error("double_coset: extremal element not unique");
  return dc;
}

WeylElement min_double_coset_rep(const Composition& la, const WeylElement& w,
                                 const Composition& mu) {
  int rank = w.rank();
  std::vector<int> gl = parabolic_generators(la, rank);
  std::vector<int> gm = parabolic_generators(mu, rank);
  WeylElement u = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j : gl) {
      if (u.left_descent(j)) {
        u = u.gen_times(j);
        moved = true;
      }
    }
    for (int j : gm) {
      if (u.right_descent(j)) {
        u = u.times_gen(j);
        moved = true;
      }
    }
  }
  return u;
}

WeylElement longest_element(const Composition& la, int rank) {
  std::vector<WeylElement> sub = parabolic_subgroup(la, rank);
  WeylElement best(rank);
  int lbest = -1;
  bool unique = true;
  for (const WeylElement& w : sub) {
    int l = length(w);
    if (l > lbest) {
      lbest = l;
      best = w;
      unique = true;
    } else if (l == lbest) {
      unique = false;
    }
  }
  if (!unique) throw std::logic_error("longest_element: not unique");
  return best;
}

}  // namespace ischur
