#include "iwahori/zeta.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>
#include <gsl/gsl_sf_gamma.h>

#include <cmath>
#include <limits>
#include <numbers>

namespace iwahori {

Scalar flag_count_symbolic(int n) {
  Scalar out(1);
  for (int k = 1; k <= n; ++k) {
    Polynomial qk;
    for (int j = 0; j < k; ++j) qk += Polynomial::monomial(Monomial::var(kVarT, -j));
    out *= Scalar(qk);
  }
  return out;
}

Rational flag_count(int n, long l) {
  Rational out(1);
  for (int k = 1; k <= n; ++k) {
    Rational qk(0);
    for (int j = 0; j < k; ++j) qk += rational_pow(Rational(l), j);
    out *= qk;
  }
  return out;
}

Phi build_phi(const TestFunction& T, long l, const UnramifiedCharacter& chi) {
  const int n = chi.n;
  Phi phi;
  phi.asymptotic_volume = rational_pow(Rational(l), n * (n - 1) / 2);
  if (T.kind == TestFunction::spherical) {
    phi.constant = 1;
    phi.constant_symbolic = Scalar(1);
    phi.vector = PrincipalSeriesVector::phi_plus(chi);
  } else {
    if (T.u.rank() != n) throw std::invalid_argument("build_phi: Weyl element rank mismatch");
    phi.constant = flag_count(n, l);
    phi.constant_symbolic = flag_count_symbolic(n);
    phi.vector = PrincipalSeriesVector::phi(chi, T.u);
  }
  return phi;
}

Scalar kloosterman_zeta(const TestFunction& T, const WeylElement& w, const UnramifiedCharacter& chi) {
  const Phi phi = build_phi(T, 2, chi);
  return phi.constant_symbolic * value_at_identity(a_word(w, phi.vector));
}

Polynomial CoefficientTable::at(const std::vector<int>& k) const {
  auto it = entries.find(k);
  return it == entries.end() ? Polynomial() : it->second;
}

Rational CoefficientTable::value_at(const std::vector<int>& k, long p) const {
  Rational v(0);
  const Polynomial poly = at(k);
  for (const auto& term : poly.terms()) v += term.c * rational_pow(Rational(1, p), term.m.e[kVarT]);
  return v;
}

CoefficientTable series_expand(const Scalar& s, int n, int kmax) {
  if (kmax < 0) throw std::invalid_argument("series_expand: kmax must be nonnegative");
  const int dims = n - 1;
  const long side = kmax + 1;
  long size = 1;
  for (int i = 0; i < dims; ++i) size *= side;

  auto x_exponents = [&](const Monomial& m) {
    std::vector<int> e(dims);
    for (int v = 1; v < kMaxVars; ++v) {
      if (m.e[v] == 0) continue;
      if (v > dims) throw std::invalid_argument("series_expand: variable beyond x_{n-1}");
      e[v - 1] = m.e[v];
    }
    return e;
  };
  auto flat = [&](const std::vector<int>& e) {
    long f = 0;
    for (int i = 0; i < dims; ++i) f = f * side + e[i];
    return f;
  };

  std::vector<Polynomial> a(size);
  for (const auto& term : s.numerator().terms()) {
    auto e = x_exponents(term.m);
    bool inside = true;
    for (int v : e) {
      if (v < 0) throw std::invalid_argument("series_expand: negative x exponent in numerator");
      if (v > kmax) inside = false;
    }
    if (inside) a[flat(e)] += Polynomial::monomial(Monomial::var(kVarT, term.m.e[kVarT]), term.c);
  }
  for (const auto& f : s.denominator()) {
    const auto& ft = f.terms();
    if (ft.size() != 2 || !ft[0].m.is_one() || ft[0].c != 1 || ft[1].c != -1 || ft[1].m.e[kVarT] != 0)
      throw std::invalid_argument("series_expand: denominator factor " + f.str() + " is not 1 - x^beta");
    const auto b = x_exponents(ft[1].m);
    for (int v : b)
      if (v < 0) throw std::invalid_argument("series_expand: factor " + f.str() + " is not small");
    std::vector<int> e(dims, 0);
    for (long idx = 0; idx < size; ++idx) {
      long rest = idx;
      bool ok = true;
      for (int i = dims - 1; i >= 0; --i) {
        e[i] = static_cast<int>(rest % side) - b[i];
        rest /= side;
        if (e[i] < 0) ok = false;
      }
      if (ok) a[idx] += a[flat(e)];
    }
  }

  CoefficientTable table;
  table.n = n;
  table.kmax = kmax;
  for (long idx = 0; idx < size; ++idx) {
    if (a[idx].is_zero()) continue;
    std::vector<int> m(dims);
    long rest = idx;
    for (int i = dims - 1; i >= 0; --i) {
      m[i] = static_cast<int>(rest % side);
      rest /= side;
    }
    std::vector<int> k(m.rbegin(), m.rend());  // k_{n-i} = m_i
    table.entries.emplace(std::move(k), std::move(a[idx]));
  }
  return table;
}

CoefficientTable series_coefficients(const WeylElement& w, int kmax) {
  const int n = w.rank();
  return series_expand(kloosterman_zeta(TestFunction::make_spherical(), w, formal_character(n)), n, kmax);
}

int padic_valuation(const Rational& q, long p) {
  if (q == 0) return std::numeric_limits<int>::max();
  auto val = [p](mpz_class z) {
    int v = 0;
    z = abs(z);
    while (mpz_divisible_ui_p(z.get_mpz_t(), static_cast<unsigned long>(p))) {
      z /= p;
      ++v;
    }
    return v;
  };
  return val(q.get_num()) - val(q.get_den());
}

bool support_check(const TestFunction&, const std::vector<Rational>& c, long p) {
  for (const auto& ci : c)
    if (padic_valuation(ci, p) < 0) return false;
  return true;
}

TrivialBoundReport trivial_bound(const CoefficientTable& table, long p, double eps) {
  TrivialBoundReport r;
  r.p = p;
  r.eps = eps;
  const int dims = table.n - 1;
  std::vector<int> k(dims, 0);
  while (true) {
    const Rational v = table.value_at(k, p);
    if (v < 0) r.nonnegative = false;
    int total = 0;
    for (int x : k) total += x;
    const double c = v.get_d() / std::pow(static_cast<double>(p), eps * total);
    if (c > r.constant || r.argmax.empty()) {
      r.constant = std::max(r.constant, c);
      r.argmax = k;
    }
    int i = dims - 1;
    while (i >= 0 && ++k[i] > table.kmax) k[i--] = 0;
    if (i < 0) break;
  }
  return r;
}

namespace {

Complex lngamma(Complex z) {
  gsl_sf_result lnr, arg;
  gsl_error_handler_t* old = gsl_set_error_handler_off();
  const int status = gsl_sf_lngamma_complex_e(z.real(), z.imag(), &lnr, &arg);
  gsl_set_error_handler(old);
  if (status != GSL_SUCCESS) throw std::domain_error("lngamma: evaluation failed");
  return {lnr.val, arg.val};
}

void require_off_pole(Complex half, const std::string& what) {
  const double re = std::round(half.real());
  if (re <= 0 && std::abs(half - Complex(re, 0)) < 1e-8)
    throw std::domain_error("archimedean_gk: " + what + " is within 1e-8 of a Gamma pole");
}

}  // namespace

Complex gamma_r(Complex z, GammaNorm norm) {
  require_off_pole(z / 2.0, "argument");
  const double scale = norm == GammaNorm::literal ? 1.0 : 0.5;
  return std::exp(-scale * z * std::log(std::numbers::pi) + lngamma(z / 2.0));
}

Complex archimedean_gk(const WeylElement& w, const std::vector<Complex>& s, GammaNorm norm, CFactor cf) {
  const int n = w.rank();
  if (static_cast<int>(s.size()) != n - 1) throw std::invalid_argument("archimedean_gk: need n-1 exponents");
  Complex out = 1;
  for (const auto& si : s) {
    if (si.real() <= 1.0) throw std::domain_error("archimedean_gk: Re(s_i) must exceed 1");
    const Complex denom = cf == CFactor::minus_one ? si - 1.0 : si + 1.0;
    if (std::abs(denom) < 1e-8) throw std::domain_error("archimedean_gk: c(s) pole");
    out /= denom;
  }
  const double scale = norm == GammaNorm::literal ? 1.0 : 0.5;
  for (const auto& alpha : length_and_inversions(w).roots) {
    Complex z = 0;
    for (int i = 0; i < n - 1; ++i) z += static_cast<double>(alpha.k[i]) * s[i];
    require_off_pole(z / 2.0, "alpha(chi_{-s}) = " + alpha.str());
    require_off_pole((z + 1.0) / 2.0, "alpha(chi_{-s}) + 1");
    // Gamma_R(z) / Gamma_R(z + 1)
    out *= std::exp(scale * std::log(std::numbers::pi) + lngamma(z / 2.0) - lngamma((z + 1.0) / 2.0));
  }
  return out;
}

namespace {

struct QuadContext {
  Complex s;
  double rel_tol;
  bool imag_part;
  double x;
  gsl_integration_workspace* inner_ws;
};

// Delta_1 of c* w x for n = 2 and c = 1: norm of the last row of diag(1,1) * [[0,1],[1,x]].
double delta1_unit_c(double x) { return std::hypot(1.0, x); }

double inner_integrand(double c, void* params) {
  auto* q = static_cast<QuadContext*>(params);
  if (c <= 0) return 0.0;
  // c^{s+1} d^x c = c^s dc
  const Complex v = std::exp(q->s * std::log(c));
  return q->imag_part ? v.imag() : v.real();
}

double outer_integrand(double theta, void* params) {
  auto* q = static_cast<QuadContext*>(params);
  const double x = std::tan(theta);
  const double sec2 = 1.0 + x * x;
  // f_1(c* w x) = 1 iff Delta_1 = c * Delta_1(c=1) <= 1 (Delta_1 is homogeneous of degree 1 in c).
  const double c_hi = 1.0 / delta1_unit_c(x);
  gsl_function F{&inner_integrand, q};
  double result = 0, err = 0;
  gsl_integration_qags(&F, 0.0, c_hi, 0.0, q->rel_tol * 0.1, 1000, q->inner_ws, &result, &err);
  return sec2 * result;
}

}  // namespace

Complex arch_lhs_quadrature_n2(Complex s, double rel_tol) {
  gsl_error_handler_t* old = gsl_set_error_handler_off();
  gsl_integration_workspace* inner = gsl_integration_workspace_alloc(1000);
  gsl_integration_workspace* outer = gsl_integration_workspace_alloc(1000);
  double parts[2];
  for (int part = 0; part < 2; ++part) {
    QuadContext q{s, rel_tol, part == 1, 0.0, inner};
    gsl_function F{&outer_integrand, &q};
    double err = 0;
    gsl_integration_qags(&F, -std::numbers::pi / 2, std::numbers::pi / 2, 0.0, rel_tol, 1000, outer, &parts[part],
                         &err);
  }
  gsl_integration_workspace_free(inner);
  gsl_integration_workspace_free(outer);
  gsl_set_error_handler(old);
  return {parts[0], parts[1]};
}

}  // namespace iwahori
