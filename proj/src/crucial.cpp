#include "iwahori/crucial.hpp"

#include <omp.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "iwahori/intertwine.hpp"

namespace iwahori {

bool RootSubset::parity_ok() const {
  return (static_cast<int>(word.size()) - static_cast<int>(members.size()) - w_S.length()) % 2 == 0;
}

RootSubset subset_structure(int n, const ReducedWord& word, const std::vector<int>& members) {
  const int L = static_cast<int>(word.size());
  RootSubset rs{n, word, members, WeylElement::identity(n), {}, {}};
  for (size_t q = 0; q < members.size(); ++q) {
    if (members[q] < 1 || members[q] > L) throw std::out_of_range("subset_structure: position out of range");
    if (q && members[q] <= members[q - 1]) throw std::invalid_argument("subset_structure: positions must increase");
  }
  size_t q = 0;
  WeylElement u = WeylElement::identity(n);
  int len = 0;
  for (int j = 1; j <= L; ++j) {
    WeylElement su = WeylElement::simple(n, word[j - 1]) * u;
    const int slen = su.length();
    if (q < members.size() && members[q] == j) {
      (slen > len ? rs.up : rs.down).push_back(j);
      ++q;
    } else {
      u = std::move(su);
      len = slen;
    }
  }
  rs.w_S = u;
  return rs;
}

RootSubset subset_from_mask(int n, const ReducedWord& word, std::uint64_t mask) {
  std::vector<int> members;
  for (int j = 0; j < static_cast<int>(word.size()); ++j)
    if (mask >> j & 1u) members.push_back(j + 1);
  return subset_structure(n, word, members);
}

bool admissible_pair_check(const TorusCoordinate& c, const Composition& d) {
  const int n = d.n();
  if (c.rank() != n) throw std::invalid_argument("admissible_pair_check: rank mismatch");
  auto k = [&](int i) { return (i <= 0 || i >= n) ? 0 : c.k[i - 1]; };
  const auto b = d.boundaries();
  for (int i = 1; i < n; ++i) {
    if (std::find(b.begin(), b.end(), i) != b.end()) continue;
    if (k(n - i + 1) + k(n - i - 1) != 2 * k(n - i)) return false;
  }
  return true;
}

CriticalSet critical_set(const Composition& d) {
  const int n = d.n();
  const ReducedWord word = canonical_reduced_word(d);
  const auto betas = beta_enumeration(n, word);
  std::map<int, std::vector<int>> positions;
  for (int j = 0; j < static_cast<int>(word.size()); ++j) positions[word[j]].push_back(j + 1);
  std::vector<std::vector<int>> odd;
  for (const auto& [letter, pos] : positions)
    if (pos.size() % 2) odd.push_back(pos);

  CriticalSet best;
  bool have = false;
  std::tuple<int, int, int, std::vector<int>> best_key;
  std::vector<size_t> pick(odd.size(), 0);
  best.min_length = std::numeric_limits<int>::max();
  while (true) {
    std::vector<int> members;
    for (size_t a = 0; a < odd.size(); ++a) members.push_back(odd[a][pick[a]]);
    std::sort(members.begin(), members.end());
    RootSubset rs = subset_structure(n, word, members);
    int sv = 0;
    for (int j : members) sv += v_ad(betas[j - 1], d);
    const bool all_up = rs.up.size() == members.size();
    const int len = rs.w_S.length();
    best.min_length = std::min(best.min_length, len);
    ++best.choices;
    auto key = std::make_tuple(sv, all_up ? 0 : 1, len, members);
    if (!have || key < best_key) {
      have = true;
      best_key = key;
      best.subset = rs;
      best.sum_vad = sv;
      best.all_up = all_up;
    }
    size_t a = 0;
    while (a < odd.size() && ++pick[a] == odd[a].size()) pick[a++] = 0;
    if (a == odd.size()) break;
  }
  return best;
}

InequalityReport verify_exponent_inequality(const Composition& d) {
  const int n = d.n();
  const CriticalSet cs = critical_set(d);
  InequalityReport r;
  r.d = d;
  r.length = static_cast<int>(cs.subset.word.size());
  r.scri_size = static_cast<int>(cs.subset.members.size());
  r.sum_vad = cs.sum_vad;
  r.lhs = r.scri_size - r.length - 2 * r.sum_vad;
  r.rhs = -(d.blocks() - 1) * n;
  r.holds = r.lhs <= r.rhs;
  r.holds_reversed = r.lhs >= r.rhs;
  r.equality = r.lhs == r.rhs;
  r.scri_all_up = cs.all_up;
  r.scri_length = cs.subset.w_S.length();
  r.scri_min_length = cs.min_length;
  r.scri_positions = cs.subset.members;

  const auto betas = beta_enumeration(n, cs.subset.word);
  std::map<int, int> seen;
  r.vad_constant_per_letter = true;
  for (size_t j = 0; j < betas.size(); ++j) {
    const int v = v_ad(betas[j], d);
    auto [it, fresh] = seen.try_emplace(cs.subset.word[j], v);
    if (!fresh && it->second != v) r.vad_constant_per_letter = false;
  }
  return r;
}

std::vector<Complex> grid_axis(long l, double sigma, const GridSpec& grid) {
  if (grid.points < 1) throw std::invalid_argument("grid: points must be positive");
  const double rho = std::pow(1.0 / static_cast<double>(l), sigma);
  std::vector<Complex> y(grid.points);
  for (int k = 0; k < grid.points; ++k) {
    if (grid.full_period) {
      y[k] = std::polar(rho, -2.0 * std::numbers::pi * k / grid.points);
    } else {
      const double tau =
          grid.points == 1 ? grid.im_min : grid.im_min + (grid.im_max - grid.im_min) * k / (grid.points - 1);
      y[k] = std::polar(rho, -tau * std::log(static_cast<double>(l)));
    }
  }
  return y;
}

const Scalar& admissible_identity_value_formal(const Composition& d) {
  static std::mutex mu;
  static std::map<std::vector<int>, Scalar> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d.parts);
    if (it != cache.end()) return it->second;
  }
  const UnramifiedCharacter chi = formal_character(d.n());
  Scalar v = value_at_identity(a_word(canonical_reduced_word(d), PrincipalSeriesVector::phi_one(chi)));
  std::lock_guard<std::mutex> lock(mu);
  return cache.try_emplace(d.parts, std::move(v)).first->second;
}

Scalar admissible_identity_value(const Composition& d, long l) {
  return admissible_identity_value_formal(d).substitute(admissible_specialization(d, l));
}

SupReport numeric_sup(const Composition& d, long l, double eps, const GridSpec& grid, KernelMode mode) {
  if (!(eps > 0)) throw std::invalid_argument("numeric_sup: eps must be positive");
  const int m = d.blocks() - 1;
  const CompiledRational f = compile(admissible_identity_value(d, l), m);
  const std::vector<std::vector<Complex>> axes(m, grid_axis(l, 1.0 + eps, grid));
  const GridMax g = grid_abs_max(f, axes, grid.full_period, mode);
  SupReport r;
  r.d = d;
  r.l = l;
  r.eps = eps;
  r.sup = g.max_abs;
  r.bound = std::pow(static_cast<double>(l), -0.5 * d.n() * m);
  r.ratio = r.sup / r.bound;
  r.argmax = g.argmax;
  r.points = g.points;
  return r;
}

namespace {

struct RootOnGrid {
  WeightVector beta;
  std::vector<int> y_exp;  // exponent of y_i
  int vad = 0;
};

std::vector<RootOnGrid> admissible_roots(const Composition& d) {
  const auto b = d.boundaries();
  std::vector<RootOnGrid> out;
  for (const auto& beta : length_and_inversions(admissible_element(d)).roots) {
    RootOnGrid r{beta, {}, v_ad(beta, d)};
    for (int bi : b) r.y_exp.push_back(beta.k[bi - 1]);
    out.push_back(std::move(r));
  }
  return out;
}

struct LineResult {
  double min_abs = std::numeric_limits<double>::infinity();
  double max_dS = 1.0;
  long long witness_flat = -1;
  int witness_root = -1;
};

LineResult scan_line(const std::vector<RootOnGrid>& roots, int m, long l, double sigma, const GridSpec& grid) {
  LineResult res;
  if (roots.empty()) return res;
  const auto axis = grid_axis(l, sigma, grid);
  const long long G = grid.points;
  long long total = 1;
  for (int i = 0; i < m; ++i) total *= G;
  const double threshold = 1.0 - 1.0 / static_cast<double>(l);
#pragma omp parallel
  {
    LineResult local;
    std::vector<Complex> y(m);
#pragma omp for schedule(static)
    for (long long flat = 0; flat < total; ++flat) {
      long long rest = flat;
      for (int i = m - 1; i >= 0; --i) {
        y[i] = axis[rest % G];
        rest /= G;
      }
      double dS = 1.0;
      for (size_t q = 0; q < roots.size(); ++q) {
        Complex b = 1.0;
        for (int i = 0; i < m; ++i)
          for (int e = 0; e < roots[q].y_exp[i]; ++e) b *= y[i];
        const double a = std::abs(Complex(1.0) - b);
        if (a < local.min_abs) {
          local.min_abs = a;
          local.witness_flat = flat;
          local.witness_root = static_cast<int>(q);
        }
        if (threshold > a) dS *= threshold / a;
      }
      local.max_dS = std::max(local.max_dS, dS);
    }
#pragma omp critical
    {
      if (local.min_abs < res.min_abs ||
          (local.min_abs == res.min_abs && local.witness_flat < res.witness_flat)) {
        res.min_abs = local.min_abs;
        res.witness_flat = local.witness_flat;
        res.witness_root = local.witness_root;
      }
      res.max_dS = std::max(res.max_dS, local.max_dS);
    }
  }
  return res;
}

}  // namespace

NoPoleReport no_pole_check(const Composition& d, long l, const GridSpec& grid, double eps) {
  const int m = d.blocks() - 1;
  const auto roots = admissible_roots(d);
  NoPoleReport r;
  r.d = d;
  r.l = l;
  r.threshold = 1.0 - 1.0 / static_cast<double>(l);
  r.min_vad = std::numeric_limits<int>::max();
  for (const auto& root : roots) r.min_vad = std::min(r.min_vad, root.vad);
  if (roots.empty()) r.min_vad = 0;
  const LineResult unitary = scan_line(roots, m, l, 1.0, grid);
  const LineResult shifted = scan_line(roots, m, l, 1.0 + eps, grid);
  r.min_abs_unitary = unitary.min_abs;
  r.min_abs_shifted = shifted.min_abs;
  r.max_dS = std::max(unitary.max_dS, shifted.max_dS);
  r.ok = (roots.empty() || r.min_vad >= 1) && r.min_abs_unitary >= r.threshold &&
         r.min_abs_shifted >= r.threshold && r.max_dS <= 1.0;
  if (!r.ok && unitary.witness_root >= 0) {
    std::ostringstream os;
    os << "beta=" << roots[unitary.witness_root].beta.str() << " grid index " << unitary.witness_flat
       << " on Re(s)=1, |1-beta|=" << unitary.min_abs;
    r.witness = os.str();
  }
  return r;
}

VoronoiReport voronoi_check(const Composition& d, long l, double eps, const GridSpec& grid) {
  const int n = d.n();
  const bool first = d.parts == std::vector<int>{1, n - 1};
  const bool second = d.parts == std::vector<int>{n - 1, 1};
  if (!(first || second) || n < 2) throw std::invalid_argument("voronoi_check: need d = (1,n-1) or (n-1,1)");
  VoronoiReport r;
  r.d = d;
  r.l = l;
  const Scalar value = admissible_identity_value(d, l);

  const Monomial y = Monomial::var(1);
  Scalar closed = Scalar::monomial(y.pow(n - 1));
  const Scalar c = (Scalar(1) - Scalar(Rational(1, l))) * Scalar::one_minus_inverse(y);
  for (int j = 0; j < n - 1; ++j) closed *= c;
  r.symbolic_equal = value == closed;

  const CompiledRational f = compile(value, 1);
  const double q = 1.0 - 1.0 / static_cast<double>(l);
  for (const Complex& yv : grid_axis(l, 1.0 + eps, grid)) {
    const Complex got = evaluate(f.num, {yv}) / evaluate(f.den, {yv});
    const Complex want = std::pow(q / (1.0 - yv), n - 1) * std::pow(yv, n - 1);
    r.max_rel_err = std::max(r.max_rel_err, std::abs(got - want) / std::abs(want));
  }
  return r;
}

DominanceReport dominance_check(const Composition& d, long l) {
  const int n = d.n();
  const ReducedWord word = canonical_reduced_word(d);
  const auto betas = beta_enumeration(n, word);
  const int L = static_cast<int>(word.size());
  const double ld = static_cast<double>(l);
  auto magnitude = [&](const RootSubset& rs) {
    const int e2 = static_cast<int>(rs.members.size()) - L - rs.w_S.length();
    double m = std::pow(ld, 0.5 * e2);
    for (int j : rs.members) m *= (1.0 - 1.0 / ld) / (1.0 - std::pow(ld, -v_ad(betas[j - 1], d)));
    for (int j : rs.up) m *= std::pow(ld, -v_ad(betas[j - 1], d));
    return m;
  };
  DominanceReport r;
  r.d = d;
  r.l = l;
  r.scri_magnitude = magnitude(critical_set(d).subset);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << L); ++mask) {
    RootSubset rs = subset_from_mask(n, word, mask);
    if (!rs.w_S.is_identity()) continue;
    const double m = magnitude(rs);
    if (m > r.worst_magnitude) {
      r.worst_magnitude = m;
      r.worst_members = rs.members;
    }
  }
  r.ok = r.worst_magnitude <= r.scri_magnitude * (1.0 + 1e-12);
  return r;
}

}  // namespace iwahori
