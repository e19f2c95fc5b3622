#pragma once

#include <map>

#include "iwahori/character.hpp"
#include "iwahori/kernels.hpp"

namespace iwahori {

using RationalMatrix = std::vector<std::vector<Rational>>;

// sum_r mult(r) e^{2 pi i r / p^m}, times scale.
struct CyclotomicSum {
  long p = 2;
  int m = 0;
  std::map<long, mpz_class> mult;  // residues in [0, p^m)
  Rational scale = 1;

  void add(long residue_num, int residue_exp, const mpz_class& count);  // residue_num / p^residue_exp mod 1
  CyclotomicSum normalized_to(int m2) const;
  Complex evaluate() const;
  // Exact equality of scale * mult after bringing both to a common modulus.
  friend bool operator==(const CyclotomicSum& a, const CyclotomicSum& b);
};

Rational padic_fractional_part(const Rational& x, long p);  // {x}_p in [0, 1)

struct IwasawaData {
  std::vector<int> torus_valuations;     // [j-1] = v_p(gcd of j x j minors of the last j rows), j = 1..n
  std::vector<int> diagonal_valuations;  // v_p of the diagonal of B in g = B k, B upper triangular
  std::vector<Rational> u_superdiagonal;  // {u_{i,i+1}}_p for g = u t k
  bool in_support() const;               // all torus valuations zero
};

Rational determinant(RationalMatrix a);
IwasawaData iwasawa_data(const RationalMatrix& g, long p);

// c* w u for the admissible element of d.
RationalMatrix orbital_matrix(const TorusCoordinate& c, const Composition& d, long p, const RationalMatrix& u);

struct OrbitalCaps {
  int max_rank = 3;
  int max_total_valuation = 4;
  long long max_cells = 200'000'000;
};

struct OrbitalValue {
  Rational untwisted = 0;
  CyclotomicSum twisted;
  bool has_twisted = false;
  int depth = 0;            // A: coordinates range over p^{-A} Z_p
  long long cells = 0;      // cells enumerated at the accepted depth
  long long support_cells = 0;
};

class DepthInstability : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Single depth, integer minors; OpenMP or single-threaded.
OrbitalValue brute_orbital_at_depth(const TorusCoordinate& c, const Composition& d, long p, bool twisted, int depth,
                                    KernelMode mode = KernelMode::parallel, const OrbitalCaps& caps = {});
// Same enumeration, every cell through iwasawa_data on exact rational matrices.
OrbitalValue brute_orbital_reference(const TorusCoordinate& c, const Composition& d, long p, bool twisted, int depth);

// Depth max(0, max k) checked against depth + 1.
OrbitalValue brute_orbital(const TorusCoordinate& c, const Composition& d, long p, bool twisted,
                           const OrbitalCaps& caps = {}, KernelMode mode = KernelMode::parallel);

struct OracleEntry {
  Composition d;
  std::vector<int> k;
  Rational brute;       // untwisted volume
  Rational normalized;  // brute * (c_1...c_{n-1})^{-1}
  Rational series;      // series coefficient at t = 1/p
  double twisted_abs = 0;
  bool match = false;
  bool twisted_ok = false;  // |twisted| <= untwisted
};

struct OracleReport {
  int n = 0;
  long p = 0;
  int kmax = 0;
  std::vector<OracleEntry> entries;
  bool ok = true;
};

class OracleMismatch : public std::runtime_error {
 public:
  OracleMismatch(const std::string& what, OracleEntry e) : std::runtime_error(what), entry(std::move(e)) {}
  OracleEntry entry;
};

OracleReport oracle_vs_zeta(int n, long p, int kmax, const OrbitalCaps& caps = {}, bool abort_on_mismatch = true);

}  // namespace iwahori
