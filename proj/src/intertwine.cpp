#include "iwahori/intertwine.hpp"

namespace iwahori {

Scalar c_alpha(const Monomial& alpha_chi) {
  return (Scalar(1) - Scalar::t()) * Scalar::one_minus_inverse(alpha_chi);
}

PrincipalSeriesVector a_simple(int i, const PrincipalSeriesVector& v) {
  const int n = v.rank();
  const Monomial x = v.chi.values.at(i - 1);
  if (x.is_one())
    throw SingularCharacter("a_simple: alpha_" + std::to_string(i) + "(chi) = 1", WeightVector::simple_root(n, i));
  const WeylElement s = WeylElement::simple(n, i);
  const Scalar c = c_alpha(x);
  const Scalar xc = Scalar::monomial(x) * c;
  const Scalar t = Scalar::t();
  PrincipalSeriesVector out{weyl_act_char(s, v.chi), {}};
  for (const auto& [w, a] : v.coeffs) {
    WeylElement sw = s * w;
    if (sw.length() > w.length()) {
      out.add(w, xc * a);
      out.add(sw, t * a);
    } else {
      out.add(w, c * a);
      out.add(sw, a);
    }
  }
  return out;
}

PrincipalSeriesVector a_word(const ReducedWord& word, const PrincipalSeriesVector& v) {
  const int n = v.rank();
  require_reduced(n, word);
  PrincipalSeriesVector out = v;
  WeylElement prefix = WeylElement::identity(n);
  for (size_t j = 0; j < word.size(); ++j) {
    try {
      out = a_simple(word[j], out);
    } catch (const SingularCharacter&) {
      WeightVector beta = act(prefix, WeightVector::simple_root(n, word[j]));
      throw SingularCharacter("a_word: beta_" + std::to_string(j + 1) + " = " + beta.str() + " has beta(chi) = 1",
                              beta);
    }
    prefix = prefix * WeylElement::simple(n, word[j]);
  }
  return out;
}

PrincipalSeriesVector a_word(const WeylElement& w, const PrincipalSeriesVector& v) {
  return a_word(reduced_word(w), v);
}

PrincipalSeriesVector a_word(const WeylElement& w, const UnramifiedCharacter& chi, const PrincipalSeriesVector& v) {
  if (!(v.chi == chi)) throw std::invalid_argument("a_word: vector is not in I(chi)");
  return a_word(w, v);
}

Scalar gk_coefficient(const WeylElement& w, const UnramifiedCharacter& chi) {
  Scalar out(1);
  for (const auto& alpha : length_and_inversions(w).roots) {
    const Monomial m = chi.eval(alpha);
    if (m.is_one()) throw SingularCharacter("gk_coefficient: alpha(chi) = 1 at " + alpha.str(), alpha);
    out *= (Scalar(1) - Scalar::t() * Scalar::monomial(m)) * Scalar::one_minus_inverse(m);
  }
  return out;
}

Scalar value_at_identity(const PrincipalSeriesVector& v) { return v.coeff(WeylElement::identity(v.rank())); }

Expansion subset_expansion(const ReducedWord& word, const UnramifiedCharacter& chi, std::uint64_t cap,
                           bool keep_terms) {
  const int n = chi.n;
  const int L = static_cast<int>(word.size());
  if (L >= 63 || (std::uint64_t{1} << L) > cap)
    throw CapExceeded("subset_expansion: 2^" + std::to_string(L) + " subsets exceed the cap of " +
                      std::to_string(cap));
  const auto betas = beta_enumeration(n, word);
  std::vector<Monomial> beta_chi;
  std::vector<Scalar> c;
  for (const auto& b : betas) {
    beta_chi.push_back(chi.eval(b));
    if (beta_chi.back().is_one()) throw SingularCharacter("subset_expansion: beta(chi) = 1 at " + b.str(), b);
    c.push_back(c_alpha(beta_chi.back()));
  }

  Expansion out;
  out.vector = PrincipalSeriesVector{weyl_act_char(evaluate_word(n, word), chi), {}};
  const WeylElement one = WeylElement::identity(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << L); ++mask) {
    ExpansionTerm term;
    term.subset = subset_from_mask(n, word, mask);
    term.target = term.subset.w_S;
    term.exponent2 = static_cast<int>(term.subset.members.size()) - L - term.target.length();
    if (!term.subset.parity_ok()) throw std::logic_error("subset_expansion: parity violated");
    term.dS = Scalar(1);
    for (int j : term.subset.members) term.dS *= c[j - 1];
    term.betaS = WeightVector::zero(n);
    for (int j : term.subset.up) term.betaS += betas[j - 1];
    term.value = Scalar::var(kVarT, -term.exponent2 / 2) * term.dS * eval_weight(term.betaS, chi);
    out.vector.add(term.target, term.value);
    if (term.target == one) out.identity_value += term.value;
    if (keep_terms) out.terms.push_back(std::move(term));
  }
  return out;
}

Expansion subset_expansion(const WeylElement& w, const UnramifiedCharacter& chi, std::uint64_t cap,
                           bool keep_terms) {
  return subset_expansion(reduced_word(w), chi, cap, keep_terms);
}

}  // namespace iwahori
