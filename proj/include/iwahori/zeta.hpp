#pragma once

#include <map>

#include "iwahori/intertwine.hpp"

namespace iwahori {

struct TestFunction {
  enum Kind { spherical, hecke } kind = spherical;
  WeylElement u;  // for hecke

  static TestFunction make_spherical() { return {spherical, {}}; }
  static TestFunction make_hecke(WeylElement u) { return {hecke, std::move(u)}; }
};

// [K:I_0] = prod_{k=1}^n (l^k - 1)/(l - 1), as a Laurent polynomial in t = l^{-1}.
Scalar flag_count_symbolic(int n);
Rational flag_count(int n, long l);

struct Phi {
  Rational constant;           // exact flag count at l (1 for spherical)
  Scalar constant_symbolic;    // the same as a function of t
  Rational asymptotic_volume;  // V_l = l^{n(n-1)/2}
  PrincipalSeriesVector vector;
};

Phi build_phi(const TestFunction& T, long l, const UnramifiedCharacter& chi);

// Z_w(F;chi) = [A_w Phi_T](1) with the flag count kept symbolic in t.
Scalar kloosterman_zeta(const TestFunction& T, const WeylElement& w, const UnramifiedCharacter& chi);

// Coefficients indexed by torus valuations k (k_{n-i} is the exponent of x_i), Laurent in t.
struct CoefficientTable {
  int n = 0;
  int kmax = 0;
  std::map<std::vector<int>, Polynomial> entries;  // only nonzero entries

  Polynomial at(const std::vector<int>& k) const;
  Rational value_at(const std::vector<int>& k, long p) const;
  friend bool operator==(const CoefficientTable& a, const CoefficientTable& b) {
    return a.n == b.n && a.kmax == b.kmax && a.entries == b.entries;
  }
};

// Geometric expansion of s in the x variables (denominators must be 1 - x^beta with beta >= 0, beta != 0).
CoefficientTable series_expand(const Scalar& s, int n, int kmax);
// Expansion of Z_w(spherical) = [A_w phi_+](1) computed through the intertwiner recursion.
CoefficientTable series_coefficients(const WeylElement& w, int kmax);

bool support_check(const TestFunction& T, const std::vector<Rational>& c, long p);
int padic_valuation(const Rational& q, long p);

struct TrivialBoundReport {
  long p = 0;
  double eps = 0;
  double constant = 0;  // max over k of entry / (prod p^{k_i})^eps
  std::vector<int> argmax;
  bool nonnegative = true;
};
TrivialBoundReport trivial_bound(const CoefficientTable& table, long p, double eps);

enum class GammaNorm { literal, conventional };  // pi^{-s} Gamma(s/2) vs pi^{-s/2} Gamma(s/2)
enum class CFactor { minus_one, plus_one };      // prod 1/(s_i - 1) vs prod 1/(s_i + 1)

Complex gamma_r(Complex z, GammaNorm norm);
Complex archimedean_gk(const WeylElement& w, const std::vector<Complex>& s, GammaNorm norm = GammaNorm::literal,
                       CFactor cf = CFactor::minus_one);

// n = 2: int_R int_{c>0} f_1(c* w x) [delta_B^{-1/2} chi_s](c*) d^x c dx by nested adaptive quadrature,
// with real absolute values (delta_B^{-1/2} chi_s (c*) = c^{s+1}).
Complex arch_lhs_quadrature_n2(Complex s, double rel_tol = 1e-10);

}  // namespace iwahori
