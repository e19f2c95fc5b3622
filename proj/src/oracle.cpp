#include "iwahori/oracle.hpp"

#include <omp.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "iwahori/zeta.hpp"

namespace iwahori {

namespace {

mpz_class mpz_pow(long p, int e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

long long ipow(long p, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

using i128 = __int128;

int valuation128(i128 x, long p) {
  if (x == 0) return std::numeric_limits<int>::max();
  if (x < 0) x = -x;
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

// Fraction-free Gaussian elimination (Bareiss); a is consumed.
i128 det_bareiss(std::vector<std::vector<i128>>& a) {
  const int n = static_cast<int>(a.size());
  i128 sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<std::vector<int>> combinations(int n, int j) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(j);
  for (int i = 0; i < j; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    int i = j - 1;
    while (i >= 0 && c[i] == n - j + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int q = i + 1; q < j; ++q) c[q] = c[q - 1] + 1;
  }
  return out;
}

int min_minor_valuation(const RationalMatrix& g, int j, long p) {
  const int n = static_cast<int>(g.size());
  int best = std::numeric_limits<int>::max();
  for (const auto& cols : combinations(n, j)) {
    RationalMatrix m(j, std::vector<Rational>(j));
    for (int r = 0; r < j; ++r)
      for (int c = 0; c < j; ++c) m[r][c] = g[n - j + r][cols[c]];
    const Rational d = determinant(std::move(m));
    if (d != 0) best = std::min(best, padic_valuation(d, p));
  }
  if (best == std::numeric_limits<int>::max()) throw std::domain_error("iwasawa_data: singular matrix");
  return best;
}

struct CellPlan {
  int n = 0;
  long p = 0;
  int depth = 0;
  std::vector<int> sigma;
  std::vector<std::pair<int, int>> coords;
  std::vector<int> cell_exp;      // e per coordinate
  std::vector<long long> radix;   // p^{depth + e}
  long long total = 1;
  std::vector<int> cstar_val;     // valuations of c* diagonal
  std::vector<std::vector<int>> rowsets;  // u-rows feeding the last j rows of g, j = 1..n-1
  std::vector<int> target;        // required min minor valuation of the integer matrix, j = 1..n-1
  std::vector<std::vector<std::vector<int>>> colsets;
  int sum_exp = 0;
};

CellPlan make_plan(const TorusCoordinate& c, const Composition& d, long p, int depth, const OrbitalCaps& caps) {
  CellPlan plan;
  const int n = d.n();
  if (c.rank() != n) throw std::invalid_argument("brute_orbital: rank mismatch");
  if (n > caps.max_rank) throw CapError("brute_orbital: rank " + std::to_string(n) + " exceeds cap");
  int total_k = 0;
  for (int v : c.k) total_k += std::max(v, 0);
  if (total_k > caps.max_total_valuation) throw CapError("brute_orbital: total valuation exceeds cap");
  plan.n = n;
  plan.p = p;
  plan.depth = depth;
  plan.sigma = admissible_element(d).perm();
  std::vector<std::vector<char>> free_edge(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (plan.sigma[i] > plan.sigma[j]) {
        plan.coords.push_back({i, j});
        free_edge[i][j] = 1;
      }
  // Longest chain of free edges a -> b.
  std::vector<std::vector<int>> lp(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int m = a; m < b; ++m) {
        if (!free_edge[m][b]) continue;
        const int before = m == a ? 0 : lp[a][m];
        if (before >= 0) lp[a][b] = std::max(lp[a][b], before + 1);
      }
  double log2_entry = 0;
  for (const auto& [i, j] : plan.coords) {
    int e = 0;
    for (int a = 0; a < i; ++a)
      if (lp[a][i] >= 0) e = std::max(e, depth * lp[a][i]);
    plan.cell_exp.push_back(e);
    plan.sum_exp += e;
    plan.radix.push_back(ipow(p, depth + e));
    if (plan.total > caps.max_cells / plan.radix.back())
      throw CapError("brute_orbital: cell count exceeds cap");
    plan.total *= plan.radix.back();
    log2_entry = std::max(log2_entry, (depth + e) * std::log2(static_cast<double>(p)));
  }
  log2_entry = std::max(log2_entry, depth * std::log2(static_cast<double>(p)));
  if (n * log2_entry + std::log2(std::tgamma(n + 1.0)) > 120) throw CapError("brute_orbital: minors may overflow");

  plan.cstar_val = c.cstar_valuations();
  std::vector<int> sigma_inv(n);
  for (int i = 0; i < n; ++i) sigma_inv[plan.sigma[i]] = i;
  auto kk = [&](int j) { return c.k[j - 1]; };
  for (int j = 1; j < n; ++j) {
    std::vector<int> rows;
    for (int rho = n - j; rho < n; ++rho) rows.push_back(sigma_inv[rho]);
    std::sort(rows.begin(), rows.end());
    plan.rowsets.push_back(rows);
    plan.target.push_back(j * depth - kk(j));
    plan.colsets.push_back(combinations(n, j));
  }
  return plan;
}

struct CellResult {
  long long count = 0;
  CyclotomicSum twisted;
};

bool in_support_int(const CellPlan& plan, const std::vector<std::vector<i128>>& U) {
  std::vector<std::vector<i128>> m;
  for (size_t jj = 0; jj < plan.rowsets.size(); ++jj) {
    const int j = static_cast<int>(jj) + 1;
    const auto& rows = plan.rowsets[jj];
    int best = std::numeric_limits<int>::max();
    for (const auto& cols : plan.colsets[jj]) {
      m.assign(j, std::vector<i128>(j));
      for (int r = 0; r < j; ++r)
        for (int q = 0; q < j; ++q) m[r][q] = U[rows[r]][cols[q]];
      const int v = valuation128(det_bareiss(m), plan.p);
      if (v < plan.target[jj]) return false;
      best = std::min(best, v);
    }
    if (best != plan.target[jj]) return false;
  }
  return true;
}

RationalMatrix unipotent_from_cell(const CellPlan& plan, const std::vector<long long>& r) {
  RationalMatrix u(plan.n, std::vector<Rational>(plan.n, Rational(0)));
  for (int i = 0; i < plan.n; ++i) u[i][i] = 1;
  const mpz_class scale = mpz_pow(plan.p, plan.depth);
  for (size_t q = 0; q < plan.coords.size(); ++q) {
    Rational v(mpz_class(static_cast<long>(r[q])), scale);
    v.canonicalize();
    u[plan.coords[q].first][plan.coords[q].second] = v;
  }
  return u;
}

RationalMatrix apply_cstar_w(const CellPlan& plan, const RationalMatrix& u) {
  RationalMatrix g(plan.n);
  for (int i = 0; i < plan.n; ++i) {
    const int row = plan.sigma[i];
    const Rational f = rational_pow(Rational(plan.p), plan.cstar_val[row]);
    g[row] = u[i];
    for (auto& x : g[row]) x *= f;
  }
  return g;
}

// e({Y}_p - {X'}_p) as residue / p^m, Y = sum u_{i,i+1}, X' the same for the Iwasawa U-part.
void add_twist(CyclotomicSum& acc, const RationalMatrix& u, const IwasawaData& data, long p) {
  Rational phase(0);
  for (int i = 0; i + 1 < static_cast<int>(u.size()); ++i) phase += padic_fractional_part(u[i][i + 1], p);
  for (const auto& x : data.u_superdiagonal) phase -= x;
  phase -= mpz_class(phase.get_num() / phase.get_den());  // truncate toward zero
  if (phase < 0) phase += 1;
  int m = 0;
  mpz_class den = phase.get_den();
  while (den != 1) {
    den /= p;
    ++m;
  }
  acc.add(phase.get_num().get_si(), m, 1);
}

CellResult sweep(const CellPlan& plan, bool twisted, KernelMode mode) {
  CellResult out;
  out.twisted.p = plan.p;
  const i128 diag = static_cast<i128>(ipow(plan.p, plan.depth));
  const bool par = mode == KernelMode::parallel;
#pragma omp parallel if (par)
  {
    CellResult local;
    local.twisted.p = plan.p;
    std::vector<std::vector<i128>> U(plan.n, std::vector<i128>(plan.n, 0));
    std::vector<long long> r(plan.coords.size());
#pragma omp for schedule(dynamic, 256)
    for (long long flat = 0; flat < plan.total; ++flat) {
      long long rest = flat;
      for (size_t q = plan.coords.size(); q-- > 0;) {
        r[q] = rest % plan.radix[q];
        rest /= plan.radix[q];
      }
      for (int i = 0; i < plan.n; ++i) {
        std::fill(U[i].begin(), U[i].end(), 0);
        U[i][i] = diag;
      }
      for (size_t q = 0; q < plan.coords.size(); ++q) U[plan.coords[q].first][plan.coords[q].second] = r[q];
      if (!in_support_int(plan, U)) continue;
      ++local.count;
      if (twisted) {
        const RationalMatrix u = unipotent_from_cell(plan, r);
        add_twist(local.twisted, u, iwasawa_data(apply_cstar_w(plan, u), plan.p), plan.p);
      }
    }
#pragma omp critical
    {
      out.count += local.count;
      for (const auto& [res, c] : local.twisted.normalized_to(std::max(local.twisted.m, out.twisted.m)).mult)
        out.twisted.add(res, std::max(local.twisted.m, out.twisted.m), c);
    }
  }
  return out;
}

OrbitalValue finish(const CellPlan& plan, const CellResult& res, bool twisted) {
  OrbitalValue v;
  v.depth = plan.depth;
  v.cells = plan.total;
  v.support_cells = res.count;
  const Rational weight = rational_pow(Rational(plan.p), -plan.sum_exp);
  v.untwisted = weight * Rational(mpz_class(static_cast<long>(res.count)));
  if (twisted) {
    v.has_twisted = true;
    v.twisted = res.twisted;
    v.twisted.p = plan.p;
    v.twisted.scale = weight;
  }
  return v;
}

}  // namespace

void CyclotomicSum::add(long residue_num, int residue_exp, const mpz_class& count) {
  if (residue_exp > m) *this = normalized_to(residue_exp);
  const long shift = ipow(p, m - residue_exp);
  auto [it, fresh] = mult.try_emplace(residue_num * shift, count);
  if (!fresh) {
    it->second += count;
    if (it->second == 0) mult.erase(it);
  }
}

CyclotomicSum CyclotomicSum::normalized_to(int m2) const {
  if (m2 < m) throw std::invalid_argument("CyclotomicSum: cannot lower the modulus");
  CyclotomicSum out{p, m2, {}, scale};
  const long shift = ipow(p, m2 - m);
  for (const auto& [r, c] : mult) out.mult.emplace(r * shift, c);
  return out;
}

Complex CyclotomicSum::evaluate() const {
  const double mod = static_cast<double>(ipow(p, m));
  Complex acc = 0;
  for (const auto& [r, c] : mult) acc += c.get_d() * std::polar(1.0, 2.0 * std::numbers::pi * r / mod);
  return acc * scale.get_d();
}

bool operator==(const CyclotomicSum& a, const CyclotomicSum& b) {
  if (a.p != b.p) return false;
  const int m = std::max(a.m, b.m);
  const auto x = a.normalized_to(m), y = b.normalized_to(m);
  std::map<long, Rational> vx, vy;
  for (const auto& [r, c] : x.mult) vx[r] = Rational(c) * x.scale;
  for (const auto& [r, c] : y.mult) vy[r] = Rational(c) * y.scale;
  return vx == vy;
}

Rational padic_fractional_part(const Rational& x, long p) {
  mpz_class den = x.get_den();
  int m = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p))) {
    den /= p;
    ++m;
  }
  if (m == 0) return 0;
  const mpz_class mod = mpz_pow(p, m);
  mpz_class inv;
  if (!mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()))
    throw std::logic_error("padic_fractional_part: unit not invertible");
  mpz_class r = (x.get_num() * inv) % mod;
  if (r < 0) r += mod;
  Rational out(r, mod);
  out.canonicalize();
  return out;
}

bool IwasawaData::in_support() const {
  return std::all_of(torus_valuations.begin(), torus_valuations.end(), [](int v) { return v == 0; });
}

Rational determinant(RationalMatrix a) {
  const int n = static_cast<int>(a.size());
  Rational det = 1;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (int i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const Rational f = a[i][k] / a[k][k];
      for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

IwasawaData iwasawa_data(const RationalMatrix& g, long p) {
  const int n = static_cast<int>(g.size());
  IwasawaData out;
  for (int j = 1; j <= n; ++j) out.torus_valuations.push_back(min_minor_valuation(g, j, p));

  // Column operations from GL_n(Z_(p)): per row, bottom up, pivot on the entry of least valuation.
  RationalMatrix b = g;
  for (int i = n - 1; i >= 0; --i) {
    int piv = -1, best = std::numeric_limits<int>::max();
    for (int c = 0; c <= i; ++c) {
      if (b[i][c] == 0) continue;
      const int v = padic_valuation(b[i][c], p);
      if (v < best) {
        best = v;
        piv = c;
      }
    }
    if (piv < 0) throw std::domain_error("iwasawa_data: singular matrix");
    if (piv != i)
      for (int r = 0; r < n; ++r) std::swap(b[r][piv], b[r][i]);
    for (int c = 0; c < i; ++c) {
      if (b[i][c] == 0) continue;
      const Rational f = b[i][c] / b[i][i];
      for (int r = 0; r < n; ++r) b[r][c] -= f * b[r][i];
    }
  }
  for (int i = 0; i < n; ++i) out.diagonal_valuations.push_back(padic_valuation(b[i][i], p));
  for (int i = 0; i + 1 < n; ++i)
    out.u_superdiagonal.push_back(padic_fractional_part(b[i][i + 1] / b[i + 1][i + 1], p));
  return out;
}

RationalMatrix orbital_matrix(const TorusCoordinate& c, const Composition& d, long p, const RationalMatrix& u) {
  CellPlan plan;
  plan.n = d.n();
  plan.p = p;
  plan.sigma = admissible_element(d).perm();
  plan.cstar_val = c.cstar_valuations();
  return apply_cstar_w(plan, u);
}

OrbitalValue brute_orbital_at_depth(const TorusCoordinate& c, const Composition& d, long p, bool twisted, int depth,
                                    KernelMode mode, const OrbitalCaps& caps) {
  const CellPlan plan = make_plan(c, d, p, depth, caps);
  return finish(plan, sweep(plan, twisted, mode), twisted);
}

OrbitalValue brute_orbital_reference(const TorusCoordinate& c, const Composition& d, long p, bool twisted,
                                     int depth) {
  const CellPlan plan = make_plan(c, d, p, depth, OrbitalCaps{});
  CellResult res;
  res.twisted.p = p;
  std::vector<long long> r(plan.coords.size(), 0);
  while (true) {
    const RationalMatrix u = unipotent_from_cell(plan, r);
    const IwasawaData data = iwasawa_data(apply_cstar_w(plan, u), p);
    if (data.in_support()) {
      ++res.count;
      if (twisted) add_twist(res.twisted, u, data, p);
    }
    size_t q = r.size();
    while (q-- > 0) {
      if (++r[q] < plan.radix[q]) break;
      r[q] = 0;
    }
    if (q == static_cast<size_t>(-1)) break;
  }
  return finish(plan, res, twisted);
}

OrbitalValue brute_orbital(const TorusCoordinate& c, const Composition& d, long p, bool twisted,
                           const OrbitalCaps& caps, KernelMode mode) {
  int depth = 0;
  for (int v : c.k) depth = std::max(depth, v);
  OrbitalValue a = brute_orbital_at_depth(c, d, p, twisted, depth, mode, caps);
  OrbitalValue b = brute_orbital_at_depth(c, d, p, twisted, depth + 1, mode, caps);
  if (a.untwisted != b.untwisted || (twisted && !(a.twisted == b.twisted))) {
    std::ostringstream os;
    os << "brute_orbital: depth " << depth << " and " << depth + 1 << " disagree for d=" << d.str() << " k=(";
    for (size_t i = 0; i < c.k.size(); ++i) os << (i ? "," : "") << c.k[i];
    os << ") p=" << p;
    throw DepthInstability(os.str());
  }
  return a;
}

OracleReport oracle_vs_zeta(int n, long p, int kmax, const OrbitalCaps& caps, bool abort_on_mismatch) {
  OracleReport report;
  report.n = n;
  report.p = p;
  report.kmax = kmax;
  for (const auto& [d, w] : admissible_elements(n)) {
    const CoefficientTable table = series_coefficients(w, kmax);
    std::vector<int> k(n - 1, 0);
    while (true) {
      const TorusCoordinate c{k};
      const OrbitalValue v = brute_orbital(c, d, p, true, caps);
      OracleEntry e;
      e.d = d;
      e.k = k;
      e.brute = v.untwisted;
      e.normalized = v.untwisted * delta_half_on_cstar(c, p);
      e.series = table.value_at(k, p);
      e.match = e.normalized == e.series;
      e.twisted_abs = std::abs(v.twisted.evaluate());
      e.twisted_ok = e.twisted_abs <= v.untwisted.get_d() * (1 + 1e-12) + 1e-12;
      report.ok = report.ok && e.match && e.twisted_ok;
      if (!e.match && abort_on_mismatch) {
        std::ostringstream os;
        os << "oracle mismatch at d=" << d.str() << " k=(";
        for (size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
        os << ") p=" << p << ": brute*norm=" << rational_str(e.normalized) << " series=" << rational_str(e.series);
        throw OracleMismatch(os.str(), e);
      }
      report.entries.push_back(std::move(e));
      int i = n - 2;
      while (i >= 0 && ++k[i] > kmax) k[i--] = 0;
      if (i < 0) break;
    }
  }
  return report;
}

}  // namespace iwahori
