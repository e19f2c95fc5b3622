#include "iwahori/kernels.hpp"

#include <omp.h>

#include <cstdlib>
#include <limits>
#include <map>
#include <string>

namespace iwahori {

int configure_threads() {
  if (const char* env = std::getenv("IWAHORI_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0 && cap < omp_get_max_threads()) omp_set_num_threads(cap);
  }
  return omp_get_max_threads();
}

int max_threads() { return omp_get_max_threads(); }

namespace {

CompiledPoly compile_poly(const Polynomial& p, int nvars) {
  CompiledPoly out;
  out.nvars = nvars;
  for (const auto& t : p.terms()) {
    std::vector<int> e(nvars);
    for (int v = 0; v < kMaxVars; ++v) {
      if (t.m.e[v] == 0) continue;
      if (v == kVarT || v > nvars) throw std::invalid_argument("compile: unexpected variable in " + p.str());
      e[v - 1] = t.m.e[v];
    }
    out.exps.push_back(std::move(e));
    out.coef.push_back(t.c.get_d());
  }
  return out;
}

// Terms regrouped by the exponent of the last variable; prefix exponents are offset by lo.
struct Grouped {
  int last_lo = 0, last_hi = -1;
  std::vector<std::vector<std::pair<std::vector<int>, double>>> by_last;  // [e_last - lo] -> terms
};

Grouped group_terms(const CompiledPoly& p, const std::vector<int>& lo) {
  Grouped g;
  const int m = p.nvars;
  if (p.coef.empty()) return g;
  g.last_lo = std::numeric_limits<int>::max();
  g.last_hi = std::numeric_limits<int>::min();
  for (const auto& e : p.exps) {
    g.last_lo = std::min(g.last_lo, e[m - 1]);
    g.last_hi = std::max(g.last_hi, e[m - 1]);
  }
  g.by_last.resize(g.last_hi - g.last_lo + 1);
  for (size_t j = 0; j < p.exps.size(); ++j) {
    std::vector<int> pre(m - 1);
    for (int i = 0; i < m - 1; ++i) pre[i] = p.exps[j][i] - lo[i];
    g.by_last[p.exps[j][m - 1] - g.last_lo].push_back({std::move(pre), p.coef[j]});
  }
  return g;
}

struct Best {
  double r2 = -1;
  long long flat = -1;
  void offer(double v, long long f) {
    if (v > r2 || (v == r2 && f < flat)) {
      r2 = v;
      flat = f;
    }
  }
};

}  // namespace

CompiledRational compile(const Scalar& s, int nvars) {
  CompiledRational out;
  out.nvars = nvars;
  out.num = compile_poly(s.numerator(), nvars);
  out.den = compile_poly(s.expanded_denominator(), nvars);
  return out;
}

Complex evaluate(const CompiledPoly& p, const std::vector<Complex>& point) {
  Complex acc = 0;
  for (size_t j = 0; j < p.coef.size(); ++j) {
    Complex v = p.coef[j];
    for (int i = 0; i < p.nvars; ++i)
      if (p.exps[j][i]) v *= std::pow(point[i], p.exps[j][i]);
    acc += v;
  }
  return acc;
}

GridMax grid_abs_max_reference(const CompiledRational& f, const std::vector<std::vector<Complex>>& axes) {
  const int m = f.nvars;
  GridMax out;
  std::vector<int> idx(m, 0);
  std::vector<Complex> point(m);
  Best best;
  long long flat = 0;
  while (true) {
    for (int i = 0; i < m; ++i) point[i] = axes[i][idx[i]];
    const Complex d = evaluate(f.den, point);
    if (d == Complex(0)) throw SingularEvaluation("grid_abs_max_reference: denominator vanishes");
    best.offer(std::norm(evaluate(f.num, point) / d), flat);
    ++flat;
    int i = m - 1;
    while (i >= 0 && ++idx[i] == static_cast<int>(axes[i].size())) idx[i--] = 0;
    if (i < 0) break;
  }
  out.points = flat;
  out.max_abs = std::sqrt(best.r2);
  out.argmax.assign(m, 0);
  for (int i = m - 1; i >= 0; --i) {
    out.argmax[i] = static_cast<int>(best.flat % static_cast<long long>(axes[i].size()));
    best.flat /= static_cast<long long>(axes[i].size());
  }
  return out;
}

GridMax grid_abs_max(const CompiledRational& f, const std::vector<std::vector<Complex>>& axes, bool conj_symmetric,
                     KernelMode mode) {
  const int m = f.nvars;
  if (static_cast<int>(axes.size()) != m) throw std::invalid_argument("grid_abs_max: axis count mismatch");
  GridMax out;
  if (m == 0) {
    const Complex d = evaluate(f.den, {});
    if (d == Complex(0)) throw SingularEvaluation("grid_abs_max: denominator vanishes");
    out.max_abs = std::abs(evaluate(f.num, {}) / d);
    out.points = 1;
    return out;
  }

  // Exponent ranges of the prefix variables over numerator and denominator.
  std::vector<int> lo(m, 0), hi(m, 0);
  for (const auto* p : {&f.num, &f.den})
    for (const auto& e : p->exps)
      for (int i = 0; i < m; ++i) {
        lo[i] = std::min(lo[i], e[i]);
        hi[i] = std::max(hi[i], e[i]);
      }
  const Grouped gn = group_terms(f.num, lo);
  const Grouped gd = group_terms(f.den, lo);
  if (gd.by_last.empty()) throw SingularEvaluation("grid_abs_max: zero denominator");

  std::vector<long long> size(m);
  for (int i = 0; i < m; ++i) size[i] = static_cast<long long>(axes[i].size());
  // Visited extent per axis; symmetry halves the first axis.
  std::vector<long long> extent = size;
  if (conj_symmetric) extent[0] = size[0] / 2 + 1;

  // pow_tab[i][k][e - lo[i]] for prefix axes.
  std::vector<std::vector<std::vector<Complex>>> pow_tab(m - 1);
  for (int i = 0; i < m - 1; ++i) {
    pow_tab[i].resize(size[i]);
    for (long long k = 0; k < size[i]; ++k) {
      auto& row = pow_tab[i][k];
      row.resize(hi[i] - lo[i] + 1);
      for (int e = lo[i]; e <= hi[i]; ++e) row[e - lo[i]] = std::pow(axes[i][k], e);
    }
  }
  const auto& last = axes[m - 1];
  const int shift = gn.by_last.empty() ? 0 : gn.last_lo - gd.last_lo;
  std::vector<double> shift_abs2(size[m - 1]);
  for (long long k = 0; k < size[m - 1]; ++k) shift_abs2[k] = std::norm(std::pow(last[k], shift));

  long long outer = 1;
  for (int i = 0; i < m - 1; ++i) outer *= extent[i];
  const long long inner = extent[m - 1];

  Best global;
  bool singular = false;
  const bool par = mode == KernelMode::parallel;

#pragma omp parallel if (par)
  {
    Best local;
    std::vector<Complex> cn(gn.by_last.size()), cd(gd.by_last.size());
    std::vector<long long> idx(m, 0);
    auto fill = [&](const Grouped& g, std::vector<Complex>& c) {
      for (size_t e = 0; e < g.by_last.size(); ++e) {
        Complex acc = 0;
        for (const auto& [pre, coef] : g.by_last[e]) {
          Complex v = coef;
          for (int i = 0; i < m - 1; ++i) v *= pow_tab[i][idx[i]][pre[i]];
          acc += v;
        }
        c[e] = acc;
      }
    };
#pragma omp for schedule(dynamic, 16)
    for (long long o = 0; o < outer; ++o) {
      long long rest = o;
      for (int i = m - 2; i >= 0; --i) {
        idx[i] = rest % extent[i];
        rest /= extent[i];
      }
      fill(gn, cn);
      fill(gd, cd);
      long long flat_prefix = 0;
      for (int i = 0; i < m - 1; ++i) flat_prefix = flat_prefix * size[i] + idx[i];
      for (long long k = 0; k < inner; ++k) {
        const Complex y = last[k];
        Complex vn = 0, vd = 0;
        for (size_t e = cn.size(); e-- > 0;) vn = vn * y + cn[e];
        for (size_t e = cd.size(); e-- > 0;) vd = vd * y + cd[e];
        const double nd = std::norm(vd);
        if (nd == 0.0) {
          singular = true;
          continue;
        }
        local.offer(std::norm(vn) * shift_abs2[k] / nd, flat_prefix * size[m - 1] + k);
      }
    }
#pragma omp critical
    global.offer(local.r2, local.flat);
  }
  if (singular) throw SingularEvaluation("grid_abs_max: denominator vanishes at a grid point");

  out.points = 1;
  for (int i = 0; i < m; ++i) out.points *= size[i];
  out.max_abs = std::sqrt(global.r2);
  out.argmax.assign(m, 0);
  long long flat = global.flat;
  for (int i = m - 1; i >= 0; --i) {
    out.argmax[i] = static_cast<int>(flat % size[i]);
    flat /= size[i];
  }
  return out;
}

}  // namespace iwahori
