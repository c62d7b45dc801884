#include "ischur/hecke.hpp"

#include <sstream>
#include <stdexcept>

namespace ischur {

HeckeElement HeckeElement::unit(int rank) {
  HeckeElement h(rank);
  h.terms_[WeylElement(rank)] = LaurentPoly(1);
  return h;
}

HeckeElement HeckeElement::basis(const WeylElement& w) {
  HeckeElement h(w.rank());
  h.terms_[w] = LaurentPoly(1);
  return h;
}

LaurentPoly HeckeElement::coeff(const WeylElement& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElement::add_term(const WeylElement& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_[w] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  if (rank_ != o.rank_) throw std::invalid_argument("Hecke +: rank mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  if (rank_ != o.rank_) throw std::invalid_argument("Hecke -: rank mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

HeckeElement HeckeElement::operator*(const LaurentPoly& c) const {
  HeckeElement r(rank_);
  if (c.is_zero()) return r;
  for (const auto& [w, t] : terms_) r.terms_[w] = t * c;
  return r;
}

HeckeElement HeckeElement::times_gen(int j) const {
  const LaurentPoly q = LaurentPoly::v(2);
  const LaurentPoly qm1 = q - LaurentPoly(1);
  HeckeElement r(rank_);
  for (const auto& [w, c] : terms_) {
    if (!w.right_descent(j)) {
      r.add_term(w.times_gen(j), c);
    } else {
      r.add_term(w, c * qm1);
      r.add_term(w.times_gen(j), c * q);
    }
  }
  return r;
}

HeckeElement HeckeElement::times_basis(const WeylElement& w) const {
  const std::vector<int>& word = WeylGroup::get(rank_).word_of(w);
  HeckeElement r = *this;
  for (int j : word) r = r.times_gen(j);
  return r;
}

std::string HeckeElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")*T";
    os << "[";
    for (size_t i = 0; i < w.images().size(); ++i) {
      if (i) os << ",";
      os << w.images()[i];
    }
    os << "]";
    first = false;
  }
  return os.str();
}

HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("hecke_mul: rank mismatch");
  HeckeElement r(a.rank());
  for (const auto& [w, c] : b.terms()) {
    HeckeElement part = a.times_basis(w);
    r += part * c;
  }
  return r;
}

HeckeElement x_lambda(const Composition& la, int rank) {
  return subset_sum(parabolic_subgroup(la, rank), rank);
}

HeckeElement subset_sum(const std::vector<WeylElement>& xs, int rank) {
  HeckeElement h(rank);
  for (const WeylElement& w : xs) h.add_term(w, LaurentPoly(1));
  return h;
}

std::map<WeylElement, LaurentPoly> module_decompose(const Composition& la,
                                                    const HeckeElement& m) {
  int rank = m.rank();
  // Coefficients are read off at the minimal coset representatives: for
  // d in D_la, x_la T_d = sum_{w in W_la} T_{w d} has unit coefficients, and
  // T_d itself occurs in no other x_la T_{d'}.
  std::map<WeylElement, LaurentPoly> coeffs;
  std::vector<int> gens = parabolic_generators(la, rank);
  auto min_rep = [&](const WeylElement& w) {
    WeylElement u = w;
    bool moved = true;
    while (moved) {
      moved = false;
      for (int j : gens) {
        if (u.left_descent(j)) {
          u = u.gen_times(j);
          moved = true;
        }
      }
    }
    return u;
  };
  for (const auto& [w, c] : m.terms()) {
    WeylElement d = min_rep(w);
    if (!coeffs.count(d)) coeffs[d] = m.coeff(d);
  }
  HeckeElement residual = m;
  for (const auto& [d, c] : coeffs) {
    HeckeElement xd = x_lambda(la, rank).times_basis(d);
    residual -= xd * c;
  }
  if (!residual.is_zero())
    throw std::invalid_argument(
        "module_decompose: element not in the x_la T_d span");
  for (auto it = coeffs.begin(); it != coeffs.end();) {
    if (it->second.is_zero())
      it = coeffs.erase(it);
    else
      ++it;
  }
  return coeffs;
}

ModuleElement phi_apply(const Triple& t, const ModuleElement& m, int n) {
  (void)n;
  int rank = t.la.weight();
  if (!(t.mu == m.la)) return ModuleElement{t.la, HeckeElement(rank)};
  std::map<WeylElement, LaurentPoly> coeffs = module_decompose(m.la, m.value);
  HeckeElement dcs =
      subset_sum(double_coset(t.la, t.d, t.mu).elements, rank);
  HeckeElement out(rank);
  for (const auto& [d, c] : coeffs) out += dcs.times_basis(d) * c;
  return ModuleElement{t.la, out};
}

ModuleElement phi_apply(const ThetaMatrix& a, const ModuleElement& m) {
  return phi_apply(triple_of_matrix(a), m, a.n());
}

}  // namespace ischur
