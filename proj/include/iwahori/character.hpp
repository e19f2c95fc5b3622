#pragma once

#include "iwahori/scalar.hpp"
#include "iwahori/weyl.hpp"

namespace iwahori {

// alpha_i(chi) for each simple root, as a monomial in the Scalar variables.
struct UnramifiedCharacter {
  int n = 0;
  std::vector<Monomial> values;  // values[i-1] = alpha_i(chi)

  Monomial eval(const WeightVector& gamma) const;
  friend bool operator==(const UnramifiedCharacter& a, const UnramifiedCharacter& b) {
    return a.n == b.n && a.values == b.values;
  }
};

Scalar eval_weight(const WeightVector& gamma, const UnramifiedCharacter& chi);
UnramifiedCharacter weyl_act_char(const WeylElement& w, const UnramifiedCharacter& chi);

// alpha_i -> x_i. All symbolic intertwiner computations run over this character.
UnramifiedCharacter formal_character(int n);

enum class CharMode { generic, admissible };

// generic: alpha_i(chi_s) = p^{s_{n-i}}, variable v stands for p^{s_v}.
// admissible(d): alpha_{D_i} = l^{-s_i} (variable i) for boundary indices D_i = d_1+...+d_i, else 1.
UnramifiedCharacter make_char(CharMode mode, int n, const Composition* d = nullptr);
UnramifiedCharacter admissible_character(const Composition& d);

// Images of (t, x_1..x_{n-1}) taking the formal character to chi^ad; t is kept unless l > 0.
std::vector<Polynomial> admissible_specialization(const Composition& d, long l = 0);

// Numeric simple-root values.
std::vector<Complex> generic_values(double p, const std::vector<Complex>& s);             // alpha_i = p^{s_{n-i}}
std::vector<Complex> admissible_values(double l, const Composition& d, const std::vector<Complex>& s);

int v_ad(const WeightVector& gamma, const Composition& d);

// c_i = p^{k_i}.
struct TorusCoordinate {
  std::vector<int> k;

  int rank() const { return static_cast<int>(k.size()) + 1; }
  // Valuations of the diagonal entries of c* = diag(1/c_{n-1}, c_{n-1}/c_{n-2}, ..., c_1).
  std::vector<int> cstar_valuations() const;
  // c* = h_gamma(p).
  WeightVector cstar_weight() const;
  int total() const;
};

Scalar cstar_values(const TorusCoordinate& c, const UnramifiedCharacter& chi);
// (c_1 ... c_{n-1})^{-1}; with p-adic absolute values this is delta_B^{-1/2}(c*).
Rational delta_half_on_cstar(const TorusCoordinate& c, long p);
// delta_B(c*) = prod |t_i|_p^{n-2i+1}.
Rational delta_B_padic(const TorusCoordinate& c, long p);

}  // namespace iwahori
