#include <random>

#include "doctest.h"
#include "iwahori/intertwine.hpp"

using namespace iwahori;

TEST_CASE("compiled evaluation matches Scalar::evaluate") {
  const Scalar s = admissible_identity_value(Composition({1, 1, 2}), 3);
  const auto f = compile(s, 2);
  const std::vector<Complex> pt{{0.1, 0.2}, {-0.3, 0.05}};
  const Complex direct = s.evaluate({0.0, pt[0], pt[1]});
  CHECK(std::abs(evaluate(f.num, pt) / evaluate(f.den, pt) - direct) < 1e-12);
}

TEST_CASE("property: parallel, serial and reference grid maxima agree") {
  for (const auto& d : {Composition({1, 1, 1}), Composition({1, 2, 1}), Composition({2, 1, 1})}) {
    const auto f = compile(admissible_identity_value(d, 2), d.blocks() - 1);
    const std::vector<std::vector<Complex>> axes(d.blocks() - 1, grid_axis(2, 1.01, GridSpec{24}));
    const auto par = grid_abs_max(f, axes, true, KernelMode::parallel);
    const auto ser = grid_abs_max(f, axes, true, KernelMode::serial);
    const auto ref = grid_abs_max_reference(f, axes);
    CHECK(par.max_abs == doctest::Approx(ref.max_abs).epsilon(1e-12));
    CHECK(ser.max_abs == doctest::Approx(ref.max_abs).epsilon(1e-12));
    CHECK(par.argmax == ser.argmax);
    const auto nosym = grid_abs_max(f, axes, false, KernelMode::parallel);
    CHECK(nosym.max_abs == doctest::Approx(ref.max_abs).epsilon(1e-12));
  }
}

TEST_CASE("property: grid max on random rational functions, uneven axes") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const Scalar s = (Scalar(1) + Scalar::var(1) * Scalar::var(2)) / (Scalar(1) - Scalar::var(1, 2)) *
                   Scalar::one_minus_inverse(Monomial::var(2));
  const auto f = compile(s, 2);
  for (int it = 0; it < 5; ++it) {
    std::vector<std::vector<Complex>> axes(2);
    for (auto& a : axes)
      for (int k = 0; k < 7 + it; ++k) a.emplace_back(0.5 * u(rng), 0.5 * u(rng));
    const auto par = grid_abs_max(f, axes, false, KernelMode::parallel);
    const auto ref = grid_abs_max_reference(f, axes);
    CHECK(par.max_abs == doctest::Approx(ref.max_abs).epsilon(1e-12));
    CHECK(par.points == ref.points);
  }
}

TEST_CASE("thread configuration") { CHECK(configure_threads() >= 1); }
