#pragma once

#include <map>

#include "iwahori/character.hpp"

namespace iwahori {

using WeylCoeffs = std::map<WeylElement, Scalar>;

// Element of I(chi)^{I_0} in the standard basis phi_w.
struct PrincipalSeriesVector {
  UnramifiedCharacter chi;
  WeylCoeffs coeffs;

  static PrincipalSeriesVector phi(const UnramifiedCharacter& chi, const WeylElement& w);
  static PrincipalSeriesVector phi_one(const UnramifiedCharacter& chi);
  static PrincipalSeriesVector phi_plus(const UnramifiedCharacter& chi);

  int rank() const { return chi.n; }
  Scalar coeff(const WeylElement& w) const;
  void add(const WeylElement& w, const Scalar& c);
  PrincipalSeriesVector& operator+=(const PrincipalSeriesVector& o);
  PrincipalSeriesVector& operator*=(const Scalar& c);
  void prune();
  // Same character and equal coefficients (zeros ignored).
  bool equals(const PrincipalSeriesVector& o) const;
};

struct HeckeElement {
  int n = 0;
  WeylCoeffs coeffs;  // T_w basis, coefficients polynomial in l = t^{-1}

  static HeckeElement basis(const WeylElement& w);
  static HeckeElement one(int n) { return basis(WeylElement::identity(n)); }
  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator*=(const Scalar& c);
  void prune();
  bool equals(const HeckeElement& o) const;
};

PrincipalSeriesVector t_simple_action(int i, const PrincipalSeriesVector& v);
// T_w through a reduced word; letters act right to left so T_{w1 w2} = T_{w1} o T_{w2}.
PrincipalSeriesVector t_word_action(const WeylElement& w, const PrincipalSeriesVector& v);
PrincipalSeriesVector t_word_action(const ReducedWord& word, const PrincipalSeriesVector& v);
PrincipalSeriesVector hecke_act(const HeckeElement& h, const PrincipalSeriesVector& v);

HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b);
HeckeElement involution(const HeckeElement& a);

// Standard basis of I(chi)^{I_0}: one phi_w per Bruhat cell, all w in W.
std::vector<WeylElement> iwahori_fixed_basis(int n);
// Rank over Q of {T_w phi_1 : w in W}; equals n! iff phi_1 generates a free rank-one H_W-module.
int cyclic_module_rank(int n);

}  // namespace iwahori
