#include "iwahori/character.hpp"

namespace iwahori {

Monomial UnramifiedCharacter::eval(const WeightVector& gamma) const {
  if (gamma.rank() != n) throw std::invalid_argument("eval_weight: rank mismatch");
  Monomial m;
  for (int i = 0; i < n - 1; ++i)
    if (gamma.k[i] != 0) m *= values[i].pow(gamma.k[i]);
  return m;
}

Scalar eval_weight(const WeightVector& gamma, const UnramifiedCharacter& chi) {
  return Scalar::monomial(chi.eval(gamma));
}

UnramifiedCharacter weyl_act_char(const WeylElement& w, const UnramifiedCharacter& chi) {
  UnramifiedCharacter out{chi.n, {}};
  out.values.reserve(chi.n - 1);
  for (int j = 1; j < chi.n; ++j) out.values.push_back(chi.eval(act(w, WeightVector::simple_root(chi.n, j))));
  return out;
}

UnramifiedCharacter formal_character(int n) {
  if (n < 2 || n > kMaxVars) throw std::invalid_argument("formal_character: rank out of range");
  UnramifiedCharacter chi{n, {}};
  for (int i = 1; i < n; ++i) chi.values.push_back(Monomial::var(i));
  return chi;
}

UnramifiedCharacter admissible_character(const Composition& d) {
  const int n = d.n();
  UnramifiedCharacter chi{n, std::vector<Monomial>(n - 1)};
  const auto b = d.boundaries();
  for (size_t i = 0; i < b.size(); ++i) chi.values[b[i] - 1] = Monomial::var(static_cast<int>(i) + 1);
  return chi;
}

UnramifiedCharacter make_char(CharMode mode, int n, const Composition* d) {
  if (mode == CharMode::admissible) {
    if (!d || d->n() != n) throw std::invalid_argument("make_char: composition does not match rank");
    return admissible_character(*d);
  }
  if (n < 2 || n > kMaxVars) throw std::invalid_argument("make_char: rank out of range");
  UnramifiedCharacter chi{n, {}};
  for (int i = 1; i < n; ++i) chi.values.push_back(Monomial::var(n - i));
  return chi;
}

std::vector<Polynomial> admissible_specialization(const Composition& d, long l) {
  const int n = d.n();
  std::vector<Polynomial> images(n, Polynomial(1));
  images[kVarT] = l > 0 ? Polynomial(Rational(1, l)) : Polynomial::monomial(Monomial::var(kVarT));
  const auto b = d.boundaries();
  for (size_t i = 0; i < b.size(); ++i) images[b[i]] = Polynomial::monomial(Monomial::var(static_cast<int>(i) + 1));
  return images;
}

std::vector<Complex> generic_values(double p, const std::vector<Complex>& s) {
  const int n = static_cast<int>(s.size()) + 1;
  std::vector<Complex> v(n - 1);
  for (int i = 1; i < n; ++i) v[i - 1] = std::exp(s[n - i - 1] * std::log(p));
  return v;
}

std::vector<Complex> admissible_values(double l, const Composition& d, const std::vector<Complex>& s) {
  const auto b = d.boundaries();
  if (s.size() != b.size()) throw std::invalid_argument("admissible_values: need r-1 exponents");
  std::vector<Complex> v(d.n() - 1, Complex(1));
  for (size_t i = 0; i < b.size(); ++i) v[b[i] - 1] = std::exp(-s[i] * std::log(l));
  return v;
}

int v_ad(const WeightVector& gamma, const Composition& d) {
  int s = 0;
  for (int b : d.boundaries()) s += gamma.k.at(b - 1);
  return s;
}

std::vector<int> TorusCoordinate::cstar_valuations() const {
  const int n = rank();
  auto kk = [&](int i) { return (i <= 0 || i >= n) ? 0 : k[i - 1]; };
  std::vector<int> v(n);
  for (int j = 1; j <= n; ++j) v[j - 1] = kk(n - j + 1) - kk(n - j);
  return v;
}

WeightVector TorusCoordinate::cstar_weight() const {
  const int n = rank();
  WeightVector g = WeightVector::zero(n);
  for (int i = 1; i < n; ++i) g.k[i - 1] = -k[n - i - 1];
  return g;
}

int TorusCoordinate::total() const {
  int s = 0;
  for (int v : k) s += v;
  return s;
}

Scalar cstar_values(const TorusCoordinate& c, const UnramifiedCharacter& chi) {
  return eval_weight(c.cstar_weight(), chi);
}

Rational delta_half_on_cstar(const TorusCoordinate& c, long p) { return rational_pow(Rational(p), -c.total()); }

Rational delta_B_padic(const TorusCoordinate& c, long p) {
  const auto v = c.cstar_valuations();
  const int n = c.rank();
  int e = 0;
  for (int i = 1; i <= n; ++i) e += (n - 2 * i + 1) * v[i - 1];
  // |t_i|_p = p^{-v_i}
  return rational_pow(Rational(p), -e);
}

}  // namespace iwahori
