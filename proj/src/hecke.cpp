#include "iwahori/hecke.hpp"

namespace iwahori {

PrincipalSeriesVector PrincipalSeriesVector::phi(const UnramifiedCharacter& chi, const WeylElement& w) {
  PrincipalSeriesVector v{chi, {}};
  v.coeffs.emplace(w, Scalar(1));
  return v;
}

PrincipalSeriesVector PrincipalSeriesVector::phi_one(const UnramifiedCharacter& chi) {
  return phi(chi, WeylElement::identity(chi.n));
}

PrincipalSeriesVector PrincipalSeriesVector::phi_plus(const UnramifiedCharacter& chi) {
  PrincipalSeriesVector v{chi, {}};
  for (auto& w : all_elements(chi.n)) v.coeffs.emplace(std::move(w), Scalar(1));
  return v;
}

Scalar PrincipalSeriesVector::coeff(const WeylElement& w) const {
  auto it = coeffs.find(w);
  return it == coeffs.end() ? Scalar() : it->second;
}

void PrincipalSeriesVector::add(const WeylElement& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = coeffs.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

PrincipalSeriesVector& PrincipalSeriesVector::operator+=(const PrincipalSeriesVector& o) {
  for (const auto& [w, c] : o.coeffs) add(w, c);
  return *this;
}

PrincipalSeriesVector& PrincipalSeriesVector::operator*=(const Scalar& c) {
  for (auto& [w, x] : coeffs) x *= c;
  prune();
  return *this;
}

void PrincipalSeriesVector::prune() {
  std::erase_if(coeffs, [](const auto& kv) { return kv.second.is_zero(); });
}

bool PrincipalSeriesVector::equals(const PrincipalSeriesVector& o) const {
  if (!(chi == o.chi)) return false;
  for (const auto& [w, c] : coeffs)
    if (!(c == o.coeff(w))) return false;
  for (const auto& [w, c] : o.coeffs)
    if (!coeffs.count(w) && !c.is_zero()) return false;
  return true;
}

HeckeElement HeckeElement::basis(const WeylElement& w) {
  HeckeElement h{w.rank(), {}};
  h.coeffs.emplace(w, Scalar(1));
  return h;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [w, c] : o.coeffs) {
    auto [it, fresh] = coeffs.try_emplace(w, c);
    if (!fresh) it->second += c;
  }
  prune();
  return *this;
}

HeckeElement& HeckeElement::operator*=(const Scalar& c) {
  for (auto& [w, x] : coeffs) x *= c;
  prune();
  return *this;
}

void HeckeElement::prune() {
  std::erase_if(coeffs, [](const auto& kv) { return kv.second.is_zero(); });
}

bool HeckeElement::equals(const HeckeElement& o) const {
  for (const auto& [w, c] : coeffs) {
    auto it = o.coeffs.find(w);
    if (!(c == (it == o.coeffs.end() ? Scalar() : it->second))) return false;
  }
  for (const auto& [w, c] : o.coeffs)
    if (!coeffs.count(w) && !c.is_zero()) return false;
  return true;
}

PrincipalSeriesVector t_simple_action(int i, const PrincipalSeriesVector& v) {
  const int n = v.rank();
  const WeylElement s = WeylElement::simple(n, i);
  const Scalar l = Scalar::l();
  const Scalar lm1 = l - Scalar(1);
  PrincipalSeriesVector out{v.chi, {}};
  for (const auto& [w, c] : v.coeffs) {
    WeylElement ws = w * s;
    if (w(i - 1) < w(i)) {  // ws > w
      out.add(ws, c);
    } else {
      out.add(ws, l * c);
      out.add(w, lm1 * c);
    }
  }
  return out;
}

PrincipalSeriesVector t_word_action(const ReducedWord& word, const PrincipalSeriesVector& v) {
  require_reduced(v.rank(), word);
  PrincipalSeriesVector out = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = t_simple_action(*it, out);
  return out;
}

PrincipalSeriesVector t_word_action(const WeylElement& w, const PrincipalSeriesVector& v) {
  return t_word_action(reduced_word(w), v);
}

PrincipalSeriesVector hecke_act(const HeckeElement& h, const PrincipalSeriesVector& v) {
  PrincipalSeriesVector out{v.chi, {}};
  for (const auto& [w, c] : h.coeffs) {
    PrincipalSeriesVector part = t_word_action(w, v);
    part *= c;
    out += part;
  }
  return out;
}

HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b) {
  const int n = a.n ? a.n : b.n;
  const UnramifiedCharacter chi = formal_character(n);
  // T_w phi_1 = phi_{w^{-1}}, so the coefficient of phi_u in h phi_1 is the T_{u^{-1}} coefficient of h.
  PrincipalSeriesVector v = hecke_act(a, hecke_act(b, PrincipalSeriesVector::phi_one(chi)));
  HeckeElement out{n, {}};
  for (const auto& [u, c] : v.coeffs)
    if (!c.is_zero()) out.coeffs.emplace(u.inverse(), c);
  return out;
}

HeckeElement involution(const HeckeElement& a) {
  HeckeElement out{a.n, {}};
  for (const auto& [w, c] : a.coeffs) out.coeffs.emplace(w.inverse(), c);
  return out;
}

std::vector<WeylElement> iwahori_fixed_basis(int n) { return all_elements(n); }

int cyclic_module_rank(int n) {
  const auto elems = all_elements(n);
  std::map<WeylElement, int> index;
  for (size_t j = 0; j < elems.size(); ++j) index.emplace(elems[j], static_cast<int>(j));
  const UnramifiedCharacter chi = formal_character(n);
  const auto one = PrincipalSeriesVector::phi_one(chi);

  // Sparse exact elimination; rows keyed by pivot column.
  std::map<int, std::map<int, Rational>> pivots;
  int rank = 0;
  for (const auto& w : elems) {
    std::map<int, Rational> row;
    for (const auto& [u, c] : t_word_action(w, one).coeffs) {
      if (!c.numerator().is_constant() || !c.denominator().empty())
        throw std::logic_error("cyclic_module_rank: non-constant coefficient");
      row[index.at(u)] = c.numerator().constant_term();
    }
    while (!row.empty()) {
      auto lead = row.begin();
      auto p = pivots.find(lead->first);
      if (p == pivots.end()) {
        pivots.emplace(lead->first, row);
        ++rank;
        break;
      }
      const Rational f = lead->second / p->second.begin()->second;
      for (const auto& [col, val] : p->second) {
        row[col] -= f * val;
        if (row[col] == 0) row.erase(col);
      }
    }
  }
  return rank;
}

}  // namespace iwahori
