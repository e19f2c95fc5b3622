#pragma once

#include <cstdint>

#include "iwahori/crucial.hpp"
#include "iwahori/hecke.hpp"

namespace iwahori {

class SingularCharacter : public std::domain_error {
 public:
  SingularCharacter(const std::string& what, WeightVector root) : std::domain_error(what), root(std::move(root)) {}
  WeightVector root;
};

class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// c_alpha(chi) = (1 - t) / (1 - alpha(chi)).
Scalar c_alpha(const Monomial& alpha_chi);

// A_{s_i}: I(chi) -> I(s_i.chi), chi read from v.
PrincipalSeriesVector a_simple(int i, const PrincipalSeriesVector& v);
// Letters consumed left to right: A_{s_a w'} = A_{w'}^{s_a.chi} A_{s_a}^chi.
PrincipalSeriesVector a_word(const ReducedWord& word, const PrincipalSeriesVector& v);
PrincipalSeriesVector a_word(const WeylElement& w, const PrincipalSeriesVector& v);
PrincipalSeriesVector a_word(const WeylElement& w, const UnramifiedCharacter& chi, const PrincipalSeriesVector& v);

Scalar gk_coefficient(const WeylElement& w, const UnramifiedCharacter& chi);
Scalar value_at_identity(const PrincipalSeriesVector& v);

struct ExpansionTerm {
  RootSubset subset;
  int exponent2 = 0;  // twice the l-exponent (#S - l(w) - l(w_S))
  Scalar dS;
  WeightVector betaS;
  WeylElement target;
  Scalar value;  // l^{exponent} dS chi(betaS)
};

struct Expansion {
  std::vector<ExpansionTerm> terms;
  Scalar identity_value;
  PrincipalSeriesVector vector;  // sum of all terms
};

constexpr std::uint64_t kDefaultSubsetCap = std::uint64_t{1} << 20;

Expansion subset_expansion(const ReducedWord& word, const UnramifiedCharacter& chi,
                           std::uint64_t cap = kDefaultSubsetCap, bool keep_terms = true);
Expansion subset_expansion(const WeylElement& w, const UnramifiedCharacter& chi,
                           std::uint64_t cap = kDefaultSubsetCap, bool keep_terms = true);

}  // namespace iwahori
