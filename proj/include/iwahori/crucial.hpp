#pragma once

#include <optional>

#include "iwahori/character.hpp"
#include "iwahori/kernels.hpp"

namespace iwahori {

struct RootSubset {
  int n = 0;
  ReducedWord word;
  std::vector<int> members;  // 1-based positions into word, increasing
  WeylElement w_S;           // product of the non-member letters, later letters on the left
  std::vector<int> up, down;

  bool parity_ok() const;
};

RootSubset subset_structure(int n, const ReducedWord& word, const std::vector<int>& members);
RootSubset subset_from_mask(int n, const ReducedWord& word, std::uint64_t mask);

bool admissible_pair_check(const TorusCoordinate& c, const Composition& d);

struct CriticalSet {
  RootSubset subset;
  int sum_vad = 0;
  bool all_up = false;      // S_cri == S_up
  int min_length = 0;       // min l(w_S) over all admissible position choices
  long choices = 0;
};

CriticalSet critical_set(const Composition& d);

struct InequalityReport {
  Composition d;
  int length = 0;
  int scri_size = 0;
  int sum_vad = 0;
  int lhs = 0;
  int rhs = 0;
  bool holds = false;                  // lhs <= rhs
  bool holds_reversed = false;  // lhs >= rhs
  bool equality = false;
  bool scri_all_up = false;
  int scri_length = 0;
  int scri_min_length = 0;
  bool vad_constant_per_letter = false;
  std::vector<int> scri_positions;
};

InequalityReport verify_exponent_inequality(const Composition& d);

struct GridSpec {
  int points = 64;          // per s-variable
  bool full_period = true;  // Im(s) over [0, 2 pi / log l), phases exact multiples of 2 pi / points
  double im_min = 0.0;
  double im_max = 0.0;
};

// Axis values y = l^{-s} for s = sigma + i tau over the grid.
std::vector<Complex> grid_axis(long l, double sigma, const GridSpec& grid);

// Identity coefficient of A_w phi_1 over the formal character (cached per composition).
const Scalar& admissible_identity_value_formal(const Composition& d);
// The same, specialized to chi^ad and t = 1/l: a rational function of y_1..y_{r-1}.
Scalar admissible_identity_value(const Composition& d, long l);

struct SupReport {
  Composition d;
  long l = 0;
  double eps = 0;
  double sup = 0, bound = 0, ratio = 0;
  std::vector<int> argmax;
  long long points = 0;
};

SupReport numeric_sup(const Composition& d, long l, double eps, const GridSpec& grid,
                      KernelMode mode = KernelMode::parallel);

struct NoPoleReport {
  Composition d;
  long l = 0;
  double min_abs_unitary = 0;   // min |1 - beta| on Re(s) = 1
  double min_abs_shifted = 0;   // min |1 - beta| on Re(s) = 1 + eps
  double max_dS = 0;            // max over grid and subsets of |d_S|
  double threshold = 0;         // 1 - 1/l
  int min_vad = 0;
  bool ok = false;
  std::string witness;
};

NoPoleReport no_pole_check(const Composition& d, long l, const GridSpec& grid, double eps = 0.01);

struct VoronoiReport {
  Composition d;
  long l = 0;
  bool symbolic_equal = false;
  double max_rel_err = 0;
};

// d = (1, n-1) or (n-1, 1): identity value against d_R l^{-s_1 (n-1)}.
VoronoiReport voronoi_check(const Composition& d, long l, double eps, const GridSpec& grid);

struct DominanceReport {
  Composition d;
  long l = 0;
  double scri_magnitude = 0;
  double worst_magnitude = 0;
  bool ok = false;
  std::vector<int> worst_members;
};

// Terms with w_S = 1 against the critical-set term, magnitudes at s = (1,...,1) where each is maximal on Re(s) = 1.
DominanceReport dominance_check(const Composition& d, long l);

}  // namespace iwahori
