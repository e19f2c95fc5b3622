#include "iwahori/scalar.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace iwahori {

Monomial Monomial::var(int v, int power) {
  if (v < 0 || v >= kMaxVars) throw std::out_of_range("Monomial: variable index out of range");
  Monomial m;
  m.e[v] = static_cast<std::int8_t>(power);
  return m;
}

bool Monomial::nonnegative() const {
  return std::all_of(e.begin(), e.end(), [](std::int8_t v) { return v >= 0; });
}

int Monomial::degree_excluding_t() const {
  int d = 0;
  for (int v = 1; v < kMaxVars; ++v) d += e[v];
  return d;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  for (int v = 0; v < kMaxVars; ++v) {
    const int s = e[v] + o.e[v];
    if (s > 120 || s < -120) throw std::overflow_error("Monomial: exponent out of range");
    e[v] = static_cast<std::int8_t>(s);
  }
  return *this;
}

Monomial Monomial::inverse() const {
  Monomial r;
  for (int v = 0; v < kMaxVars; ++v) r.e[v] = static_cast<std::int8_t>(-e[v]);
  return r;
}

Monomial Monomial::pow(int k) const {
  Monomial r;
  for (int v = 0; v < kMaxVars; ++v) {
    const int s = e[v] * k;
    if (s > 120 || s < -120) throw std::overflow_error("Monomial: exponent out of range");
    r.e[v] = static_cast<std::int8_t>(s);
  }
  return r;
}

std::vector<std::string> default_var_names() {
  std::vector<std::string> names{"t"};
  for (int v = 1; v < kMaxVars; ++v) names.push_back("x" + std::to_string(v));
  return names;
}

Rational rational_pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("rational_pow: zero to a negative power");
    return rational_pow(Rational(base.get_den(), base.get_num()), -exponent);
  }
  Rational r = 1;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  r.canonicalize();
  return r;
}

std::string rational_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void Polynomial::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.m.key() < b.m.key(); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().m == t.m)
      out.back().c += t.c;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term& t) { return t.c == 0; });
  terms_ = std::move(out);
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }

Rational Polynomial::constant_term() const { return coeff(Monomial{}); }

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m.key(),
                             [](const Term& t, std::uint64_t k) { return t.m.key() < k; });
  return it != terms_.end() && it->m == m ? it->c : Rational(0);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->m.key() < b->m.key())) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->m.key() < a->m.key()) {
      out.push_back(*b++);
    } else {
      Rational c = a->c + b->c;
      if (c != 0) out.push_back({a->m, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1) {
    Polynomial r(a);
    r *= b.terms_[0].c;
    r *= b.terms_[0].m;
    return r;
  }
  if (a.terms_.size() == 1) return b * a;
  std::unordered_map<std::uint64_t, size_t> index;
  std::vector<Term> out;
  index.reserve(a.terms_.size() * b.terms_.size());
  Rational prod;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Monomial m = x.m * y.m;
      mpq_mul(prod.get_mpq_t(), x.c.get_mpq_t(), y.c.get_mpq_t());
      auto [it, fresh] = index.try_emplace(m.key(), out.size());
      if (fresh)
        out.push_back({m, prod});
      else
        out[it->second].c += prod;
    }
  }
  return Polynomial::from_terms(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.c *= c;
  return *this;
}

Polynomial& Polynomial::operator*=(const Monomial& m) {
  if (m.is_one()) return *this;
  for (auto& t : terms_) t.m *= m;
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.m.key() < b.m.key(); });
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].m == b.terms_[i].m) || a.terms_[i].c != b.terms_[i].c) return false;
  return true;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  const size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    if (a.terms_[i].m.key() != b.terms_[i].m.key()) return a.terms_[i].m.key() < b.terms_[i].m.key();
    if (a.terms_[i].c != b.terms_[i].c) return a.terms_[i].c < b.terms_[i].c;
  }
  return a.terms_.size() < b.terms_.size();
}

Complex Polynomial::evaluate(const std::vector<Complex>& values) const {
  Complex acc = 0;
  for (const auto& t : terms_) {
    Complex v = t.c.get_d();
    for (int i = 0; i < kMaxVars; ++i) {
      if (t.m.e[i] == 0) continue;
      if (i >= static_cast<int>(values.size())) throw std::out_of_range("evaluate: missing variable value");
      v *= std::pow(values[i], static_cast<int>(t.m.e[i]));
    }
    acc += v;
  }
  return acc;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  const int nimg = static_cast<int>(images.size());
  Polynomial acc;
  std::vector<Term> monomial_terms;
  bool all_monomial_images = true;
  for (int i = 0; i < nimg; ++i)
    if (images[i].terms_.size() > 1) all_monomial_images = false;
  for (const auto& t : terms_) {
    Monomial kept;
    Polynomial factor(t.c);
    for (int i = 0; i < kMaxVars; ++i) {
      const int e = t.m.e[i];
      if (e == 0) continue;
      if (i >= nimg) {
        kept.e[i] = static_cast<std::int8_t>(e);
        continue;
      }
      const Polynomial& img = images[i];
      if (img.is_zero()) {
        if (e < 0) throw SingularSpecialization("substitute: zero image raised to a negative power");
        factor = Polynomial();
        break;
      }
      if (img.terms_.size() == 1) {
        factor *= rational_pow(img.terms_[0].c, e);
        factor *= img.terms_[0].m.pow(e);
      } else {
        if (e < 0) throw std::domain_error("substitute: negative power of a non-monomial image");
        for (int r = 0; r < e; ++r) factor *= img;
      }
    }
    if (factor.is_zero()) continue;
    factor *= kept;
    if (all_monomial_images) {
      for (auto& ft : factor.terms_) monomial_terms.push_back(std::move(ft));
    } else {
      acc += factor;
    }
  }
  if (all_monomial_images) return from_terms(std::move(monomial_terms));
  return acc;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.c;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    std::string mono;
    for (int i = 0; i < kMaxVars; ++i) {
      if (t.m.e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < static_cast<int>(names.size()) ? names[i] : "v" + std::to_string(i);
      if (t.m.e[i] != 1) mono += "^" + std::to_string(t.m.e[i]);
    }
    if (mono.empty()) {
      os << rational_str(c);
    } else {
      if (c != 1) os << rational_str(c) << "*";
      os << mono;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- Scalar

Scalar Scalar::one_minus_inverse(const Monomial& m) {
  Scalar s(1);
  Polynomial f = Polynomial(1) - Polynomial::monomial(m);
  if (f.is_zero()) throw SingularSpecialization("1/(1 - 1)");
  s.add_factor(std::move(f));
  return s;
}

void Scalar::add_factor(Polynomial f) {
  if (f.is_zero()) throw SingularSpecialization("zero denominator factor");
  if (f.is_monomial()) {
    const Term& t = f.terms().front();
    num_ *= Rational(1 / t.c);
    num_ *= t.m.inverse();
    return;
  }
  const Rational lead = f.terms().front().c;
  if (lead != 1) {
    f *= Rational(1 / lead);
    num_ *= Rational(1 / lead);
  }
  den_.insert(std::upper_bound(den_.begin(), den_.end(), f), std::move(f));
}

Polynomial Scalar::expanded_denominator() const {
  Polynomial p(1);
  for (const auto& f : den_) p *= f;
  return p;
}

std::vector<Polynomial> Scalar::lcm(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  std::vector<Polynomial> out;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && *i < *j)) {
      out.push_back(*i++);
    } else if (i == a.end() || *j < *i) {
      out.push_back(*j++);
    } else {
      out.push_back(*i++);
      ++j;
    }
  }
  return out;
}

// prod(full \ part) for multisets with part contained in full.
Polynomial Scalar::cofactor(const std::vector<Polynomial>& full, const std::vector<Polynomial>& part) {
  Polynomial p(1);
  auto j = part.begin();
  for (const auto& f : full) {
    if (j != part.end() && *j == f)
      ++j;
    else
      p *= f;
  }
  return p;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    auto l = lcm(den_, o.den_);
    Polynomial a = num_ * cofactor(l, den_);
    a += o.num_ * cofactor(l, o.den_);
    num_ = std::move(a);
    den_ = std::move(l);
  }
  if (num_.is_zero()) den_.clear();
  return *this;
}

Scalar operator-(Scalar a) {
  a.num_ *= Rational(-1);
  return a;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  num_ *= o.num_;
  if (num_.is_zero()) {
    den_.clear();
    return *this;
  }
  if (!o.den_.empty()) {
    std::vector<Polynomial> merged;
    merged.reserve(den_.size() + o.den_.size());
    std::merge(den_.begin(), den_.end(), o.den_.begin(), o.den_.end(), std::back_inserter(merged));
    den_ = std::move(merged);
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
  Scalar r(expanded_denominator());
  r.add_factor(num_);
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return (a - b).is_zero();
}

Complex Scalar::evaluate(const std::vector<Complex>& values) const {
  Complex d = 1;
  for (const auto& f : den_) d *= f.evaluate(values);
  if (d == Complex(0)) throw SingularEvaluation("Scalar: denominator vanishes at evaluation point");
  return num_.evaluate(values) / d;
}

Scalar Scalar::substitute(const std::vector<Polynomial>& images) const {
  Scalar r(num_.substitute(images));
  for (const auto& f : den_) {
    Polynomial g = f.substitute(images);
    if (g.is_zero()) throw SingularSpecialization("denominator factor (" + f.str() + ") vanishes under specialization");
    r.add_factor(std::move(g));
  }
  return r;
}

Rational Scalar::evaluate_exact(const std::vector<Rational>& values) const {
  std::vector<Polynomial> images(values.begin(), values.end());
  Scalar s = substitute(images);
  for (const auto& t : s.num_.terms())
    if (!t.m.is_one()) throw std::invalid_argument("evaluate_exact: not every variable was assigned");
  if (!s.den_.empty()) throw std::invalid_argument("evaluate_exact: not every variable was assigned");
  return s.num_.constant_term();
}

std::string Scalar::str(const std::vector<std::string>& names) const {
  if (den_.empty()) return num_.str(names);
  std::string s = "(" + num_.str(names) + ")/(";
  for (size_t i = 0; i < den_.size(); ++i) s += (i ? ")*(" : "") + den_[i].str(names);
  return s + ")";
}

}  // namespace iwahori
