#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace iwahori {

// Permutation w of {0..n-1} acting on the standard basis by w e_j = e_{w(j)}.
// Products are composition: (a*b)(j) = a(b(j)), i.e. permutation-matrix product.
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(std::vector<int> perm);

  static WeylElement identity(int n);
  // s_i for 1 <= i <= n-1, swapping positions i-1 and i.
  static WeylElement simple(int n, int i);
  static WeylElement longest(int n);

  int rank() const { return static_cast<int>(perm_.size()); }
  int operator()(int j) const { return perm_[j]; }
  const std::vector<int>& perm() const { return perm_; }

  WeylElement inverse() const;
  int length() const;
  bool is_identity() const;

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.perm_ == b.perm_; }
  friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.perm_ < b.perm_; }

  // One-line notation, 1-based: "[3,1,2]".
  std::string str() const;

 private:
  std::vector<int> perm_;
};

// Simple-root coordinates (k_1..k_{n-1}).
struct WeightVector {
  std::vector<int> k;

  static WeightVector zero(int n) { return {std::vector<int>(n - 1, 0)}; }
  static WeightVector simple_root(int n, int i);
  // alpha_{i,j} = e_i - e_j, 1-based, i != j.
  static WeightVector root(int n, int i, int j);

  int rank() const { return static_cast<int>(k.size()) + 1; }
  bool is_zero() const;
  bool is_positive_root() const;
  // For a root, the (1-based) pair (i,j) with alpha = e_i - e_j.
  std::pair<int, int> root_pair() const;
  int height() const;

  WeightVector& operator+=(const WeightVector& o);
  friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
  friend WeightVector operator-(const WeightVector& a);
  friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.k == b.k; }
  friend bool operator<(const WeightVector& a, const WeightVector& b) { return a.k < b.k; }
  std::string str() const;
};

using ReducedWord = std::vector<int>;  // letters in 1..n-1, leftmost first

struct Composition {
  std::vector<int> parts;

  Composition() = default;
  explicit Composition(std::vector<int> p);
  static Composition parse(const std::string& s);  // "1,2,1"

  int n() const;
  int blocks() const { return static_cast<int>(parts.size()); }
  // Boundary indices d_1, d_1+d_2, ..., d_1+...+d_{r-1}.
  std::vector<int> boundaries() const;
  std::string str() const;
  friend bool operator==(const Composition& a, const Composition& b) { return a.parts == b.parts; }
};

class NonReducedWord : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// w . gamma, via the index-pair action on e_i - e_j.
WeightVector act(const WeylElement& w, const WeightVector& gamma);

WeylElement evaluate_word(int n, const ReducedWord& word);
bool is_reduced(int n, const ReducedWord& word);
void require_reduced(int n, const ReducedWord& word);
// Some reduced word for w (lexicographically first descent at each step).
ReducedWord reduced_word(const WeylElement& w);

struct LengthInversions {
  int length = 0;
  std::set<WeightVector> roots;  // R(w^{-1}) = {alpha > 0 : w^{-1} alpha < 0}
};
LengthInversions length_and_inversions(const WeylElement& w);

WeylElement admissible_element(const Composition& d);
ReducedWord canonical_reduced_word(const Composition& d);
std::vector<WeightVector> beta_enumeration(int n, const ReducedWord& word);

struct AdmissibleElement {
  Composition d;
  WeylElement w;
};
std::vector<AdmissibleElement> admissible_elements(int n);

std::vector<WeylElement> all_elements(int n);

}  // namespace iwahori
