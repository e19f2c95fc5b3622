#include <chrono>
#include <complex>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "iwahori/intertwine.hpp"
#include "iwahori/oracle.hpp"
#include "iwahori/zeta.hpp"

using namespace iwahori;
using json = nlohmann::ordered_json;

namespace {

struct RunConfig {
  std::string command;
  int n = 3;
  std::string composition;
  std::vector<long> primes{2, 3};
  double eps = 0.01;
  std::string grid = "64";
  int kmax = 2;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::uint64_t max_subsets = kDefaultSubsetCap;

  GridSpec grid_spec;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

GridSpec parse_grid(const std::string& s) {
  GridSpec g;
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  try {
    if (parts.size() == 1) {
      g.points = std::stoi(parts[0]);
    } else if (parts.size() == 3) {
      g.points = std::stoi(parts[0]);
      g.full_period = false;
      g.im_min = std::stod(parts[1]);
      g.im_max = std::stod(parts[2]);
    } else {
      throw UsageError("--grid expects POINTS or POINTS:IM_MIN:IM_MAX");
    }
  } catch (const std::logic_error&) {
    throw UsageError("--grid expects POINTS or POINTS:IM_MIN:IM_MAX");
  }
  if (g.points < 1) throw UsageError("--grid: points must be positive");
  return g;
}

json config_json(const RunConfig& c) {
  json j;
  j["n"] = c.n;
  j["composition"] = c.composition.empty() ? json(nullptr) : json(c.composition);
  j["primes"] = c.primes;
  j["eps"] = c.eps;
  j["grid"] = {{"points", c.grid_spec.points},
               {"full_period", c.grid_spec.full_period},
               {"im_min", c.grid_spec.im_min},
               {"im_max", c.grid_spec.im_max}};
  j["kmax"] = c.kmax;
  j["format"] = c.format;
  j["seed"] = c.seed;
  j["max_subsets"] = c.max_subsets;
  return j;
}

std::vector<Composition> compositions(const RunConfig& c) {
  if (!c.composition.empty()) {
    Composition d;
    try {
      d = Composition::parse(c.composition);
    } catch (const std::exception& e) {
      throw UsageError(std::string("--composition: ") + e.what());
    }
    return {d};
  }
  std::vector<Composition> out;
  for (const auto& [d, w] : admissible_elements(c.n)) out.push_back(d);
  return out;
}

Composition single_composition(const RunConfig& c) {
  if (!c.composition.empty()) return compositions(c).front();
  return Composition(std::vector<int>(c.n, 1));
}

struct Report {
  json results = json::array();
  json failures = json::array();
  json timings = json::object();

  void fail(const std::string& check, json reproducer, const std::string& message) {
    failures.push_back({{"check", check}, {"reproducer", std::move(reproducer)}, {"message", message}});
  }
};

class Timer {
 public:
  Timer(Report& r, std::string key) : r_(r), key_(std::move(key)), t0_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    r_.timings[key_] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  Report& r_;
  std::string key_;
  std::chrono::steady_clock::time_point t0_;
};

json t_polynomial(const Polynomial& p) {
  std::map<int, Rational> by_power;
  for (const auto& term : p.terms()) {
    for (int v = 1; v < kMaxVars; ++v)
      if (term.m.e[v] != 0) throw std::logic_error("coefficient depends on a character variable");
    by_power[term.m.e[kVarT]] += term.c;
  }
  json out = json::array();
  if (by_power.empty()) return out;
  if (by_power.begin()->first < 0) throw std::logic_error("coefficient has a negative power of t");
  const int top = by_power.rbegin()->first;
  for (int e = 0; e <= top; ++e) {
    auto it = by_power.find(e);
    out.push_back(rational_str(it == by_power.end() ? Rational(0) : it->second));
  }
  return out;
}

json cyclotomic_json(const CyclotomicSum& s) {
  json residues = json::array();
  for (const auto& [r, c] : s.mult) residues.push_back({r, c.get_str()});
  const Complex v = s.evaluate();
  return {{"p", s.p},
          {"m", s.m},
          {"scale", rational_str(s.scale)},
          {"residues", residues},
          {"value", {v.real(), v.imag()}}};
}

// ---- commands -------------------------------------------------------------

void cmd_gk(const RunConfig& c, Report& rep) {
  Timer timer(rep, "gk");
  const auto chi = formal_character(c.n);
  std::vector<WeylElement> elems;
  if (c.composition.empty())
    elems = all_elements(c.n);
  else
    elems = {admissible_element(single_composition(c))};
  std::mt19937_64 rng(c.seed);
  std::uniform_real_distribution<double> u(-0.45, 0.45);
  for (const auto& w : elems) {
    auto img = a_word(w, chi, PrincipalSeriesVector::phi_plus(chi));
    const Scalar gk = gk_coefficient(w, chi);
    auto expect = PrincipalSeriesVector::phi_plus(img.chi);
    expect *= gk;
    const bool ok = img.equals(expect);
    // Seeded numeric spot check of the identity coefficient.
    std::vector<Complex> pt{Complex(0.5, 0)};
    for (int i = 1; i < c.n; ++i) pt.emplace_back(u(rng), u(rng));
    const Complex lhs = value_at_identity(img).evaluate(pt), rhs = gk.evaluate(pt);
    const double err = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
    rep.results.push_back({{"w", w.str()},
                           {"length", w.length()},
                           {"holds", ok},
                           {"gk", gk.str()},
                           {"sample_rel_err", err}});
    if (!ok) rep.fail("gk", {{"w", w.str()}}, "A_w phi_+ differs from C_w(chi) phi_+");
  }
}

void cmd_apply(const RunConfig& c, Report& rep) {
  Timer timer(rep, "apply");
  const Composition d = single_composition(c);
  const int n = d.n();
  const auto chi = formal_character(n);
  const auto word = canonical_reduced_word(d);
  const auto v = a_word(word, PrincipalSeriesVector::phi_one(chi));
  json coeffs = json::array();
  for (const auto& [u, s] : v.coeffs)
    if (!s.is_zero()) coeffs.push_back({{"basis", u.str()}, {"coeff", s.str()}});
  rep.results.push_back({{"composition", d.str()},
                         {"w", admissible_element(d).str()},
                         {"word", word},
                         {"identity_value", value_at_identity(v).str()},
                         {"coefficients", coeffs}});
}

void cmd_expand(const RunConfig& c, Report& rep) {
  Timer timer(rep, "expand");
  for (const auto& d : compositions(c)) {
    const int n = d.n();
    const auto chi = formal_character(n);
    const auto word = canonical_reduced_word(d);
    const bool keep = !c.composition.empty();
    const auto ex = subset_expansion(word, chi, c.max_subsets, keep);
    const auto rec = a_word(word, PrincipalSeriesVector::phi_one(chi));
    const bool ok = ex.vector.equals(rec);
    json r{{"composition", d.str()},
           {"word", word},
           {"subsets", std::uint64_t{1} << word.size()},
           {"equals_recursion", ok},
           {"identity_value", ex.identity_value.str()}};
    if (keep) {
      json terms = json::array();
      for (const auto& t : ex.terms)
        terms.push_back({{"members", t.subset.members},
                         {"up", t.subset.up},
                         {"exponent2", t.exponent2},
                         {"target", t.target.str()},
                         {"value", t.value.str()}});
      r["terms"] = terms;
    }
    rep.results.push_back(r);
    if (!ok) rep.fail("expand", {{"composition", d.str()}}, "subset expansion differs from the recursion");
  }
}

void cmd_inequality(const RunConfig& c, Report& rep) {
  Timer timer(rep, "inequality");
  for (const auto& d : compositions(c)) {
    const auto r = verify_exponent_inequality(d);
    rep.results.push_back({{"composition", d.str()},
                           {"length", r.length},
                           {"scri_size", r.scri_size},
                           {"sum_vad", r.sum_vad},
                           {"lhs", r.lhs},
                           {"rhs", r.rhs},
                           {"holds", r.holds},
                           {"equality", r.equality},
                           {"scri_positions", r.scri_positions},
                           {"scri_all_up", r.scri_all_up},
                           {"scri_length", r.scri_length},
                           {"scri_min_length", r.scri_min_length}});
    if (!r.holds)
      rep.fail("inequality", {{"composition", d.str()}, {"S", r.scri_positions}},
               "lhs " + std::to_string(r.lhs) + " > rhs " + std::to_string(r.rhs));
  }
}

void cmd_sup(const RunConfig& c, Report& rep) {
  Timer timer(rep, "sup");
  for (const auto& d : compositions(c)) {
    if (d.blocks() == 1) continue;
    for (long l : c.primes) {
      const auto r = numeric_sup(d, l, c.eps, c.grid_spec);
      rep.results.push_back({{"composition", d.str()},
                             {"l", l},
                             {"sup", r.sup},
                             {"bound", r.bound},
                             {"ratio", r.ratio},
                             {"argmax", r.argmax},
                             {"points", r.points}});
      if (r.ratio > 2.0)
        rep.fail("sup", {{"composition", d.str()}, {"l", l}, {"grid_index", r.argmax}},
                 "sup/bound = " + std::to_string(r.ratio) + " exceeds 2");
    }
  }
}

void cmd_nopole(const RunConfig& c, Report& rep) {
  Timer timer(rep, "nopole");
  for (const auto& d : compositions(c)) {
    if (d.blocks() == 1) continue;
    for (long l : c.primes) {
      const auto r = no_pole_check(d, l, c.grid_spec, c.eps);
      rep.results.push_back({{"composition", d.str()},
                             {"l", l},
                             {"min_abs_unitary", r.min_abs_unitary},
                             {"min_abs_shifted", r.min_abs_shifted},
                             {"threshold", r.threshold},
                             {"max_dS", r.max_dS},
                             {"min_vad", r.min_vad},
                             {"ok", r.ok}});
      if (!r.ok) rep.fail("nopole", {{"composition", d.str()}, {"l", l}, {"witness", r.witness}}, r.witness);
    }
  }
}

void cmd_zeta(const RunConfig& c, Report& rep) {
  Timer timer(rep, "zeta-coeffs");
  for (const auto& d : compositions(c)) {
    const auto table = series_coefficients(admissible_element(d), c.kmax);
    for (long p : c.primes) {
      json coeffs = json::array();
      for (const auto& [k, poly] : table.entries) {
        const Rational v = table.value_at(k, p);
        coeffs.push_back({{"k", k}, {"value_poly_t", t_polynomial(poly)}, {"value_at_p", rational_str(v)}});
        if (v < 0) rep.fail("zeta-positivity", {{"composition", d.str()}, {"k", k}, {"p", p}}, "negative entry");
      }
      rep.results.push_back({{"n", d.n()}, {"w", d.parts}, {"p", p}, {"coeffs", coeffs}});
    }
  }
}

void cmd_oracle(const RunConfig& c, Report& rep) {
  Timer timer(rep, "oracle");
  for (long p : c.primes) {
    const auto r = oracle_vs_zeta(c.n, p, c.kmax, {}, false);
    std::map<std::vector<int>, json> by_w;
    for (const auto& e : r.entries) {
      const auto brute = brute_orbital(TorusCoordinate{e.k}, e.d, p, true);
      json entry{{"k", e.k},
                 {"value_at_p", rational_str(e.normalized)},
                 {"series_at_p", rational_str(e.series)},
                 {"untwisted", rational_str(e.brute)},
                 {"match", e.match},
                 {"twisted", cyclotomic_json(brute.twisted)},
                 {"twisted_abs", e.twisted_abs},
                 {"twisted_ok", e.twisted_ok}};
      by_w[e.d.parts].push_back(entry);
      if (!e.match)
        rep.fail("oracle", {{"composition", e.d.str()}, {"k", e.k}, {"p", p}},
                 "brute " + rational_str(e.normalized) + " != series " + rational_str(e.series));
      if (!e.twisted_ok)
        rep.fail("twisted-bound", {{"composition", e.d.str()}, {"k", e.k}, {"p", p}},
                 "|twisted| exceeds the untwisted value");
    }
    for (auto& [parts, coeffs] : by_w)
      rep.results.push_back({{"n", c.n}, {"w", parts}, {"p", p}, {"coeffs", coeffs}});
  }
}

void cmd_verify_all(const RunConfig& c, Report& rep) {
  struct Suite {
    const char* name;
    void (*fn)(const RunConfig&, Report&);
  };
  const Suite suites[] = {{"gk", cmd_gk},         {"expand", cmd_expand}, {"inequality", cmd_inequality},
                          {"sup", cmd_sup},       {"nopole", cmd_nopole}, {"zeta-coeffs", cmd_zeta},
                          {"oracle", cmd_oracle}};
  for (const auto& s : suites) {
    Report sub;
    s.fn(c, sub);
    rep.results.push_back({{"suite", s.name}, {"results", sub.results}, {"failures", sub.failures.size()}});
    for (auto& f : sub.failures) {
      f["check"] = std::string(s.name) + "/" + f["check"].get<std::string>();
      rep.failures.push_back(f);
    }
    for (auto& [k, v] : sub.timings.items()) rep.timings[k] = v;
  }
}

void print_text(const json& report, std::ostream& os) {
  os << report["command"].get<std::string>() << ": " << report["results"].size() << " results, "
     << report["failures"].size() << " failures\n";
  for (const auto& r : report["results"]) os << "  " << r.dump() << "\n";
  for (const auto& f : report["failures"])
    os << "  FAILURE " << f["check"].get<std::string>() << " " << f["reproducer"].dump() << ": "
       << f["message"].get<std::string>() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iwahori-Hecke and Kloosterman zeta verification tool"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  RunConfig cfg;
  app.add_option("--n", cfg.n, "rank n")->check(CLI::Range(2, 8));
  app.add_option("--composition", cfg.composition, "composition d1,d2,...");
  app.add_option("--primes", cfg.primes, "primes / residue field sizes")->delimiter(',');
  app.add_option("--eps", cfg.eps, "shift epsilon")->check(CLI::PositiveNumber);
  app.add_option("--grid", cfg.grid, "POINTS or POINTS:IM_MIN:IM_MAX");
  app.add_option("--kmax", cfg.kmax, "series truncation")->check(CLI::Range(0, 12));
  app.add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", cfg.seed, "seed for randomized checks");
  app.add_option("--max-subsets", cfg.max_subsets, "cap on 2^l(w) subsets")->check(CLI::PositiveNumber);

  const std::vector<std::pair<std::string, std::string>> commands{
      {"gk", "Gindikin-Karpelevich identity for every w (or the admissible w of --composition)"},
      {"apply", "A_w phi_1 in the standard basis"},
      {"expand", "subset expansion against the recursion"},
      {"inequality", "exponent inequality per composition"},
      {"sup", "sup of the admissible identity value against l^{-n(r-1)/2}"},
      {"nopole", "no-pole check on Re(s)=1 and Re(s)=1+eps"},
      {"zeta-coeffs", "series coefficients of the Kloosterman zeta function"},
      {"oracle", "brute-force orbital integrals against the series"},
      {"verify-all", "all suites"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  configure_threads();

  json report;
  Report rep;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    cfg.grid_spec = parse_grid(cfg.grid);
    for (long p : cfg.primes)
      if (p < 2) throw UsageError("--primes: entries must be at least 2");
    if (!cfg.composition.empty()) {
      const auto d = compositions(cfg).front();
      if (d.n() != cfg.n) {
        auto* opt = app.get_option("--n");
        if (opt->count() > 0) throw UsageError("--composition does not sum to --n");
        cfg.n = d.n();
      }
    }
    const std::string& c = cfg.command;
    if (c == "gk") cmd_gk(cfg, rep);
    else if (c == "apply") cmd_apply(cfg, rep);
    else if (c == "expand") cmd_expand(cfg, rep);
    else if (c == "inequality") cmd_inequality(cfg, rep);
    else if (c == "sup") cmd_sup(cfg, rep);
    else if (c == "nopole") cmd_nopole(cfg, rep);
    else if (c == "zeta-coeffs") cmd_zeta(cfg, rep);
    else if (c == "oracle") cmd_oracle(cfg, rep);
    else cmd_verify_all(cfg, rep);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    rep.fail(cfg.command, json::object(), e.what());
  }
  rep.timings["total"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  report["command"] = cfg.command;
  report["config"] = config_json(cfg);
  report["results"] = rep.results;
  report["failures"] = rep.failures;
  report["timings_ms"] = rep.timings;
  if (cfg.format == "json")
    std::cout << report.dump(2) << "\n";
  else
    print_text(report, std::cout);
  return rep.failures.empty() ? 0 : 1;
}
