#include "iwahori/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace iwahori {

WeylElement::WeylElement(std::vector<int> perm) : perm_(std::move(perm)) {
  const int n = rank();
  if (n < 1) throw std::invalid_argument("WeylElement: empty permutation");
  std::vector<char> seen(n, 0);
  for (int v : perm_) {
    if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("WeylElement: not a bijection");
    seen[v] = 1;
  }
}

WeylElement WeylElement::identity(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return WeylElement(std::move(p));
}

WeylElement WeylElement::simple(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("simple reflection index out of range");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[i - 1], p[i]);
  return WeylElement(std::move(p));
}

WeylElement WeylElement::longest(int n) {
  std::vector<int> p(n);
  for (int j = 0; j < n; ++j) p[j] = n - 1 - j;
  return WeylElement(std::move(p));
}

WeylElement WeylElement::inverse() const {
  std::vector<int> q(perm_.size());
  for (int j = 0; j < rank(); ++j) q[perm_[j]] = j;
  return WeylElement(std::move(q));
}

int WeylElement::length() const {
  int inv = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = i + 1; j < rank(); ++j)
      if (perm_[i] > perm_[j]) ++inv;
  return inv;
}

bool WeylElement::is_identity() const {
  for (int j = 0; j < rank(); ++j)
    if (perm_[j] != j) return false;
  return true;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("WeylElement: rank mismatch");
  std::vector<int> c(a.rank());
  for (int j = 0; j < a.rank(); ++j) c[j] = a.perm_[b.perm_[j]];
  return WeylElement(std::move(c));
}

std::string WeylElement::str() const {
  std::ostringstream os;
  os << '[';
  for (int j = 0; j < rank(); ++j) os << (j ? "," : "") << perm_[j] + 1;
  os << ']';
  return os.str();
}

WeightVector WeightVector::simple_root(int n, int i) {
  WeightVector g = zero(n);
  g.k.at(i - 1) = 1;
  return g;
}

WeightVector WeightVector::root(int n, int i, int j) {
  if (i == j) throw std::invalid_argument("root: i == j");
  WeightVector g = zero(n);
  const int lo = std::min(i, j), hi = std::max(i, j);
  for (int m = lo; m < hi; ++m) g.k[m - 1] = i < j ? 1 : -1;
  return g;
}

bool WeightVector::is_zero() const {
  return std::all_of(k.begin(), k.end(), [](int v) { return v == 0; });
}

bool WeightVector::is_positive_root() const {
  auto first = std::find_if(k.begin(), k.end(), [](int v) { return v != 0; });
  if (first == k.end()) return false;
  auto last = std::find_if(k.rbegin(), k.rend(), [](int v) { return v != 0; }).base();
  return std::all_of(first, last, [](int v) { return v == 1; }) &&
         std::all_of(last, k.end(), [](int v) { return v == 0; });
}

std::pair<int, int> WeightVector::root_pair() const {
  int lo = -1, hi = -1, sign = 0;
  for (int m = 0; m < static_cast<int>(k.size()); ++m) {
    if (k[m] == 0) continue;
    if (lo < 0) {
      lo = m;
      sign = k[m];
    }
    if (k[m] != sign || (hi >= 0 && hi != m)) throw std::invalid_argument("root_pair: not a root");
    hi = m + 1;
  }
  if (lo < 0 || (sign != 1 && sign != -1)) throw std::invalid_argument("root_pair: not a root");
  return sign > 0 ? std::pair{lo + 1, hi + 1} : std::pair{hi + 1, lo + 1};
}

int WeightVector::height() const { return std::accumulate(k.begin(), k.end(), 0); }

WeightVector& WeightVector::operator+=(const WeightVector& o) {
  if (o.k.size() != k.size()) throw std::invalid_argument("WeightVector: rank mismatch");
  for (size_t m = 0; m < k.size(); ++m) k[m] += o.k[m];
  return *this;
}

WeightVector operator-(const WeightVector& a) {
  WeightVector r = a;
  for (int& v : r.k) v = -v;
  return r;
}

std::string WeightVector::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t m = 0; m < k.size(); ++m) os << (m ? "," : "") << k[m];
  os << ')';
  return os.str();
}

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
  if (parts.empty()) throw std::invalid_argument("Composition: no parts");
  for (int v : parts)
    if (v < 1) throw std::invalid_argument("Composition: parts must be positive");
}

Composition Composition::parse(const std::string& s) {
  std::vector<int> p;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("Composition: bad part '" + item + "'");
    p.push_back(v);
  }
  return Composition(std::move(p));
}

int Composition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<int> Composition::boundaries() const {
  std::vector<int> b;
  int acc = 0;
  for (int i = 0; i + 1 < blocks(); ++i) b.push_back(acc += parts[i]);
  return b;
}

std::string Composition::str() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < blocks(); ++i) os << (i ? "," : "") << parts[i];
  os << ')';
  return os.str();
}

WeightVector act(const WeylElement& w, const WeightVector& gamma) {
  const int n = w.rank();
  if (gamma.rank() != n) throw std::invalid_argument("act: rank mismatch");
  // gamma = sum_m k_m (e_m - e_{m+1}) = sum_j c_j e_j with c_j = k_j - k_{j-1}.
  std::vector<int> c(n, 0);
  for (int m = 0; m < n - 1; ++m) {
    c[m] += gamma.k[m];
    c[m + 1] -= gamma.k[m];
  }
  std::vector<int> wc(n, 0);
  for (int j = 0; j < n; ++j) wc[w(j)] = c[j];
  WeightVector out = WeightVector::zero(n);
  int acc = 0;
  for (int m = 0; m < n - 1; ++m) out.k[m] = (acc += wc[m]);
  return out;
}

WeylElement evaluate_word(int n, const ReducedWord& word) {
  WeylElement w = WeylElement::identity(n);
  for (int a : word) w = w * WeylElement::simple(n, a);
  return w;
}

bool is_reduced(int n, const ReducedWord& word) {
  return evaluate_word(n, word).length() == static_cast<int>(word.size());
}

void require_reduced(int n, const ReducedWord& word) {
  if (!is_reduced(n, word)) {
    std::ostringstream os;
    os << "word (";
    for (size_t j = 0; j < word.size(); ++j) os << (j ? "," : "") << word[j];
    os << ") is not reduced";
    throw NonReducedWord(os.str());
  }
}

ReducedWord reduced_word(const WeylElement& w) {
  ReducedWord rev;
  WeylElement u = w;
  const int n = w.rank();
  while (!u.is_identity()) {
    int i = 1;
    while (u(i - 1) < u(i)) ++i;
    rev.push_back(i);
    u = u * WeylElement::simple(n, i);
  }
  return ReducedWord(rev.rbegin(), rev.rend());
}

LengthInversions length_and_inversions(const WeylElement& w) {
  LengthInversions out;
  const int n = w.rank();
  const WeylElement wi = w.inverse();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (wi(i) > wi(j)) out.roots.insert(WeightVector::root(n, i + 1, j + 1));
  out.length = w.length();
  return out;
}

WeylElement admissible_element(const Composition& d) {
  const int n = d.n();
  std::vector<int> p(n);
  int before = 0;  // D_{b-1}
  for (int b = 0; b < d.blocks(); ++b) {
    const int end = before + d.parts[b];  // D_b
    for (int t = 0; t < d.parts[b]; ++t) p[n - end + t] = before + t;
    before = end;
  }
  return WeylElement(std::move(p));
}

ReducedWord canonical_reduced_word(const Composition& d) {
  const int n = d.n();
  std::vector<int> block_end(n + 1);  // 1-based row -> D_{block(row)}
  int acc = 0;
  for (int v : d.parts) {
    for (int t = 1; t <= v; ++t) block_end[acc + t] = acc + v;
    acc += v;
  }
  ReducedWord word;
  const int rows = n - d.parts.back();
  for (int i = 0; i < rows; ++i) {
    const int rho = n - d.parts.back() - i;
    const int len = n - block_end[rho];
    for (int t = 0; t < len; ++t) word.push_back(rho + t);
  }
  return word;
}

std::vector<WeightVector> beta_enumeration(int n, const ReducedWord& word) {
  require_reduced(n, word);
  std::vector<WeightVector> out;
  out.reserve(word.size());
  WeylElement u = WeylElement::identity(n);
  for (int a : word) {
    out.push_back(act(u, WeightVector::simple_root(n, a)));
    u = u * WeylElement::simple(n, a);
  }
  return out;
}

std::vector<AdmissibleElement> admissible_elements(int n) {
  if (n < 2) throw std::invalid_argument("admissible_elements: n >= 2 required");
  std::vector<AdmissibleElement> out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask >> i & 1u) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    Composition d(std::move(parts));
    out.push_back({d, admissible_element(d)});
  }
  std::sort(out.begin(), out.end(),
            [](const AdmissibleElement& a, const AdmissibleElement& b) { return a.d.parts < b.d.parts; });
  return out;
}

std::vector<WeylElement> all_elements(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<WeylElement> out;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace iwahori
