#pragma once

#include <vector>

#include "iwahori/scalar.hpp"

namespace iwahori {

enum class KernelMode { serial, parallel };

// Caps OpenMP workers from IWAHORI_THREADS when set; returns the active worker count.
int configure_threads();
int max_threads();

// A Scalar in variables 1..nvars flattened to double coefficients for grid evaluation.
struct CompiledPoly {
  int nvars = 0;
  std::vector<std::vector<int>> exps;  // exps[term][var]
  std::vector<double> coef;
};

struct CompiledRational {
  int nvars = 0;
  CompiledPoly num, den;
};

CompiledRational compile(const Scalar& s, int nvars);
Complex evaluate(const CompiledPoly& p, const std::vector<Complex>& point);

struct GridMax {
  double max_abs = 0;
  std::vector<int> argmax;
  long long points = 0;
};

// max |f| over the product grid axes[0] x ... x axes[nvars-1].
// conj_symmetric: axes satisfy axes[i][(G-k)%G] == conj(axes[i][k]) and f has real coefficients,
// so only half of the first axis is visited.
GridMax grid_abs_max(const CompiledRational& f, const std::vector<std::vector<Complex>>& axes,
                     bool conj_symmetric, KernelMode mode = KernelMode::parallel);
// Point-by-point reference without precomputation or symmetry.
GridMax grid_abs_max_reference(const CompiledRational& f, const std::vector<std::vector<Complex>>& axes);

}  // namespace iwahori
