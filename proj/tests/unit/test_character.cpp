#include "doctest.h"
#include "iwahori/character.hpp"

using namespace iwahori;

TEST_CASE("eval_weight") {
  const auto chi = formal_character(3);
  CHECK(eval_weight(WeightVector::zero(3), chi) == Scalar(1));
  CHECK(eval_weight(WeightVector::root(3, 1, 3), chi) == Scalar::var(1) * Scalar::var(2));
  CHECK(eval_weight(-WeightVector::simple_root(3, 2), chi) == Scalar::var(2, -1));
}

TEST_CASE("generic character: alpha_i(chi_s) = p^{s_{n-i}}") {
  for (int n = 2; n <= 6; ++n) {
    const auto chi = make_char(CharMode::generic, n);
    for (int i = 1; i < n; ++i) CHECK(chi.values[i - 1] == Monomial::var(n - i));
  }
  const std::vector<Complex> s{{0.3, 0.1}, {1.2, -2.0}};
  const auto v = generic_values(3.0, s);
  CHECK(std::abs(v[0] - std::pow(Complex(3.0), s[1])) < 1e-12);
  CHECK(std::abs(v[1] - std::pow(Complex(3.0), s[0])) < 1e-12);
}

TEST_CASE("Weyl action on characters") {
  const auto chi = formal_character(3);
  CHECK(weyl_act_char(WeylElement::identity(3), chi) == chi);
  const auto s1 = weyl_act_char(WeylElement::simple(3, 1), chi);
  CHECK(s1.values[0] == Monomial::var(1, -1));
  CHECK(s1.values[1] == Monomial::var(1) * Monomial::var(2));
  const auto s = weyl_act_char(WeylElement::simple(2, 1), formal_character(2));
  CHECK(s.values[0] == Monomial::var(1, -1));
}

TEST_CASE("property: (w1 w2).chi = w1.(w2.chi)") {
  for (int n = 2; n <= 4; ++n) {
    const auto chi = formal_character(n);
    for (const auto& a : all_elements(n))
      for (const auto& b : all_elements(n))
        CHECK(weyl_act_char(b * a, chi) == weyl_act_char(a, weyl_act_char(b, chi)));
  }
}

TEST_CASE("admissible character") {
  const Composition d({1, 2});
  const auto chi = make_char(CharMode::admissible, 3, &d);
  CHECK(chi.values[0] == Monomial::var(1));
  CHECK(chi.values[1].is_one());
  CHECK(admissible_character(Composition({3})).values == std::vector<Monomial>(2));
  const auto v = admissible_values(2.0, Composition({2, 1}), {Complex(1.0, 0.0)});
  CHECK(std::abs(v[0] - 1.0) < 1e-15);
  CHECK(std::abs(v[1] - 0.5) < 1e-15);
}

TEST_CASE("v_ad") {
  CHECK(v_ad(WeightVector::root(3, 1, 3), Composition({1, 2})) == 1);
  // long element: 2 * sum over S_cri equals 2 * sum_{i odd} (n-1)
  CHECK(2 * v_ad(WeightVector::root(3, 1, 3), Composition({1, 1, 1})) == 4);
  CHECK(v_ad(WeightVector::simple_root(4, 2), Composition({1, 3})) == 0);
}

TEST_CASE("torus coordinates and delta_B") {
  const TorusCoordinate one{{0, 0}};
  CHECK(delta_half_on_cstar(one, 5) == 1);
  CHECK(delta_B_padic(one, 5) == 1);
  const TorusCoordinate c2{{1}};
  CHECK(c2.cstar_valuations() == std::vector<int>{-1, 1});
  CHECK(delta_B_padic(c2, 3) == 9);
  CHECK(delta_half_on_cstar(c2, 3) == Rational(1, 3));
  const TorusCoordinate c3{{1, 1}};
  CHECK(delta_half_on_cstar(c3, 2) == Rational(1, 4));
  CHECK(delta_B_padic(c3, 2) == 16);
}

TEST_CASE("property: delta_half_on_cstar squared inverts delta_B") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (long p : {2L, 3L, 7L}) {
        const TorusCoordinate c{{a, b}};
        const Rational h = delta_half_on_cstar(c, p);
        CHECK(h * h * delta_B_padic(c, p) == 1);
      }
}

TEST_CASE("cstar as h_gamma(p) agrees with the diagonal valuations") {
  // chi(c*) for the formal character matches prod over i of x_i^{gamma_i}
  const TorusCoordinate c{{2, 1, 3}};
  const auto g = c.cstar_weight();
  CHECK(g.k == std::vector<int>{-3, -1, -2});
  CHECK(cstar_values(c, formal_character(4)) ==
        Scalar::var(1, -3) * Scalar::var(2, -1) * Scalar::var(3, -2));
  // diagonal entries t_j of h_gamma(p): p^{gamma_j - gamma_{j-1}}
  const auto v = c.cstar_valuations();
  std::vector<int> gam{0};
  gam.insert(gam.end(), g.k.begin(), g.k.end());
  gam.push_back(0);
  for (int j = 1; j <= 4; ++j) CHECK(v[j - 1] == gam[j] - gam[j - 1]);
}

TEST_CASE("property: Weyl action agrees with conjugation chi(w t w^-1) on torus exponents") {
  // chi(diag(p^a)) = prod z_i^{a_i} with z_i = y_i formal; conjugation permutes the z_i.
  for (int n = 2; n <= 5; ++n) {
    UnramifiedCharacter chi{n, {}};
    for (int i = 1; i < n; ++i) chi.values.push_back(Monomial::var(i) * Monomial::var(i + 1, -1));
    for (const auto& w : all_elements(n)) {
      const auto wc = weyl_act_char(w, chi);
      for (int j = 1; j < n; ++j)
        CHECK(wc.values[j - 1] == Monomial::var(w(j - 1) + 1) * Monomial::var(w(j) + 1, -1));
    }
  }
}
