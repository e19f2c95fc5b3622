#include "doctest.h"
#include "iwahori/weyl.hpp"

using namespace iwahori;

namespace {

WeightVector sum_simple(int n, int from, int to) {
  WeightVector g = WeightVector::zero(n);
  for (int i = from; i <= to; ++i) g += WeightVector::simple_root(n, i);
  return g;
}

}  // namespace

TEST_CASE("identity has no inversions") {
  for (int n = 1; n <= 5; ++n) {
    auto li = length_and_inversions(WeylElement::identity(n));
    CHECK(li.length == 0);
    CHECK(li.roots.empty());
  }
}

TEST_CASE("w_{1,n-2,1} at n=4 has length 5 and word s3 s2 s1 s2 s3") {
  const Composition d({1, 2, 1});
  CHECK(canonical_reduced_word(d) == ReducedWord{3, 2, 1, 2, 3});
  CHECK(admissible_element(d).length() == 5);
}

TEST_CASE("canonical words") {
  CHECK(canonical_reduced_word(Composition({1, 1, 1})) == ReducedWord{2, 1, 2});
  CHECK(canonical_reduced_word(Composition({3})).empty());
  for (int n = 3; n <= 8; ++n) {
    std::vector<int> parts{1, n - 2, 1};
    ReducedWord expect;
    for (int i = n - 1; i >= 1; --i) expect.push_back(i);
    for (int i = 2; i <= n - 1; ++i) expect.push_back(i);
    CHECK(canonical_reduced_word(Composition(parts)) == expect);
  }
}

TEST_CASE("canonical word is reduced and evaluates to the admissible element") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& [d, w] : admissible_elements(n)) {
      const auto word = canonical_reduced_word(d);
      CHECK(is_reduced(n, word));
      CHECK(evaluate_word(n, word) == w);
      CHECK(static_cast<int>(word.size()) == w.length());
    }
}

TEST_CASE("beta enumeration for w_{1,n-1} and w_{n-1,1}") {
  for (int n = 2; n <= 6; ++n) {
    const auto b1 = beta_enumeration(n, canonical_reduced_word(Composition({1, n - 1})));
    REQUIRE(static_cast<int>(b1.size()) == n - 1);
    for (int j = 1; j <= n - 1; ++j) CHECK(b1[j - 1] == sum_simple(n, 1, j));
    const auto b2 = beta_enumeration(n, canonical_reduced_word(Composition({n - 1, 1})));
    REQUIRE(static_cast<int>(b2.size()) == n - 1);
    for (int j = 1; j <= n - 1; ++j) CHECK(b2[j - 1] == sum_simple(n, n - j, n - 1));
  }
}

TEST_CASE("inversion set of w_{1,n-1}") {
  for (int n = 2; n <= 6; ++n) {
    const auto li = length_and_inversions(admissible_element(Composition({1, n - 1})));
    std::set<WeightVector> expect;
    for (int j = 1; j <= n - 1; ++j) expect.insert(sum_simple(n, 1, j));
    CHECK(li.roots == expect);
  }
}

TEST_CASE("property: beta enumeration of any reduced word is the inversion set") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_elements(n)) {
      const auto word = reduced_word(w);
      CHECK(evaluate_word(n, word) == w);
      const auto betas = beta_enumeration(n, word);
      const std::set<WeightVector> as_set(betas.begin(), betas.end());
      CHECK(as_set.size() == betas.size());
      CHECK(as_set == length_and_inversions(w).roots);
      for (const auto& b : betas) {
        CHECK(b.is_positive_root());
        CHECK(!act(w.inverse(), b).is_positive_root());
      }
    }
}

TEST_CASE("n=3 word (2,1,2) betas are {a1, a2, a1+a2}") {
  const auto betas = beta_enumeration(3, {2, 1, 2});
  const std::set<WeightVector> s(betas.begin(), betas.end());
  CHECK(s == std::set<WeightVector>{sum_simple(3, 1, 1), sum_simple(3, 2, 2), sum_simple(3, 1, 2)});
}

TEST_CASE("non-reduced words are rejected") {
  CHECK_FALSE(is_reduced(3, {1, 1}));
  CHECK_THROWS_AS(require_reduced(3, {1, 2, 1, 2}), NonReducedWord);
  CHECK_THROWS(beta_enumeration(3, {2, 2}));
}

TEST_CASE("compositions") {
  CHECK(admissible_elements(2).size() == 2);
  for (int n = 2; n <= 8; ++n) CHECK(admissible_elements(n).size() == (std::size_t{1} << (n - 1)));
  bool found = false;
  for (const auto& [d, w] : admissible_elements(3))
    if (d == Composition({1, 1, 1})) {
      found = true;
      CHECK(w == WeylElement::longest(3));
    }
  CHECK(found);
  CHECK(Composition::parse("1,2,1") == Composition({1, 2, 1}));
  CHECK(Composition({2, 1, 3}).boundaries() == std::vector<int>{2, 3});
  CHECK_THROWS(Composition::parse("1,0"));
}

TEST_CASE("property: length is multiplicative on reduced concatenation") {
  for (int n = 2; n <= 4; ++n) {
    const auto all = all_elements(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        const auto wa = reduced_word(a), wb = reduced_word(b);
        ReducedWord cat = wa;
        cat.insert(cat.end(), wb.begin(), wb.end());
        CHECK(is_reduced(n, cat) == ((a * b).length() == a.length() + b.length()));
      }
  }
}

TEST_CASE("longest element and inverse") {
  for (int n = 1; n <= 6; ++n) {
    const auto w0 = WeylElement::longest(n);
    CHECK(w0.length() == n * (n - 1) / 2);
    CHECK(w0 * w0 == WeylElement::identity(n));
  }
  const WeylElement w({2, 0, 1});
  CHECK(w * w.inverse() == WeylElement::identity(3));
  CHECK(w.str() == "[3,1,2]");
}
