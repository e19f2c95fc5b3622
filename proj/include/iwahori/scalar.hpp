#pragma once

#include <gmpxx.h>

#include <array>
#include <bit>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace iwahori {

using Rational = mpq_class;
using Complex = std::complex<double>;

// Variable 0 is t = l^{-1}; variables 1.. are character variables x_1, x_2, ...
constexpr int kMaxVars = 8;
constexpr int kVarT = 0;

struct Monomial {
  std::array<std::int8_t, kMaxVars> e{};

  static Monomial var(int v, int power = 1);
  std::uint64_t key() const { return std::bit_cast<std::uint64_t>(e); }
  bool is_one() const { return key() == 0; }
  bool nonnegative() const;
  int degree_excluding_t() const;

  Monomial& operator*=(const Monomial& o);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  Monomial inverse() const;
  Monomial pow(int k) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.key() == b.key(); }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.key() < b.key(); }
};

struct Term {
  Monomial m;
  Rational c;
};

std::vector<std::string> default_var_names();

// Sparse Laurent polynomial, terms sorted by monomial key with nonzero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: implicit constant
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Rational constant_term() const;
  Rational coeff(const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  Polynomial& operator*=(const Monomial& m);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator<(const Polynomial& a, const Polynomial& b);

  Complex evaluate(const std::vector<Complex>& values) const;

  // Substitutes variable v by images[v] (a polynomial); variables at or beyond images.size() are kept.
  // Negative exponents require a monomial image.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  std::string str(const std::vector<std::string>& names = default_var_names()) const;

 private:
  std::vector<Term> terms_;
  void canonicalize();
};

class SingularSpecialization : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class SingularEvaluation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// numerator / prod(denominator factors). Factors have at least two terms and are normalized so
// that the term with the smallest monomial key has coefficient 1; (1 - m) stays (1 - m).
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Rational& c) : num_(c) {}  // NOLINT
  Scalar(long c) : num_(Rational(c)) {}   // NOLINT
  Scalar(Polynomial p) : num_(std::move(p)) {}  // NOLINT

  static Scalar var(int v, int power = 1) { return Polynomial::monomial(Monomial::var(v, power)); }
  static Scalar t() { return var(kVarT); }
  static Scalar l() { return var(kVarT, -1); }
  static Scalar monomial(const Monomial& m) { return Polynomial::monomial(m); }
  // (1 - m)^{-1}
  static Scalar one_minus_inverse(const Monomial& m);

  const Polynomial& numerator() const { return num_; }
  const std::vector<Polynomial>& denominator() const { return den_; }
  Polynomial expanded_denominator() const;

  bool is_zero() const { return num_.is_zero(); }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(Scalar a);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Complex evaluate(const std::vector<Complex>& values) const;
  Scalar substitute(const std::vector<Polynomial>& images) const;
  // Exact value when every variable is given a rational.
  Rational evaluate_exact(const std::vector<Rational>& values) const;

  std::string str(const std::vector<std::string>& names = default_var_names()) const;

 private:
  Polynomial num_;
  std::vector<Polynomial> den_;  // sorted multiset

  void add_factor(Polynomial f);
  static std::vector<Polynomial> lcm(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b);
  static Polynomial cofactor(const std::vector<Polynomial>& full, const std::vector<Polynomial>& part);
};

Rational rational_pow(const Rational& base, int exponent);
std::string rational_str(const Rational& q);  // "num/den" or "num"

}  // namespace iwahori
