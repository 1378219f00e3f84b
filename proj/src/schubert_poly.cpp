#include "bk/schubert_poly.hpp"

#include <algorithm>

namespace bk {

Int IntPoly::constant_term() const {
  std::vector<int> zero(nvars_, 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? 0 : it->second;
}

void IntPoly::add_term(const std::vector<int>& expo, Int c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(expo, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  IntPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  IntPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  IntPoly r(nvars_);
  std::vector<int> e(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

IntPoly IntPoly::monomial(int nvars, const std::vector<int>& expo, Int c) {
  IntPoly p(nvars);
  p.add_term(expo, c);
  return p;
}

IntPoly divided_difference(const IntPoly& f, int k) {
  if (k < 1 || k >= f.nvars()) throw Error("divided_difference: variable index out of range");
  IntPoly out(f.nvars());
  const int a = k - 1, b = k;
  std::vector<int> e(f.nvars());
  for (const auto& [expo, c] : f.terms()) {
    const int p = expo[a], q = expo[b];
    if (p == q) continue;
    // (x^p y^q - x^q y^p)/(x - y) = sign * geometric ladder between p and q
    e = expo;
    const int lo = std::min(p, q), hi = std::max(p, q);
    const Int sign = p > q ? 1 : -1;
    for (int s = lo; s < hi; ++s) {
      e[a] = s;
      e[b] = lo + hi - 1 - s;
      out.add_term(e, sign * c);
    }
  }
  return out;
}

int permutation_length(const std::vector<int>& line) {
  int inv = 0;
  for (size_t i = 0; i < line.size(); ++i)
    for (size_t j = i + 1; j < line.size(); ++j)
      if (line[i] > line[j]) ++inv;
  return inv;
}

std::vector<int> permutation_inverse(const std::vector<int>& line) {
  std::vector<int> inv(line.size());
  for (size_t i = 0; i < line.size(); ++i) inv[line[i] - 1] = int(i) + 1;
  return inv;
}

std::vector<int> permutation_compose(const std::vector<int>& a, const std::vector<int>& b) {
  // (a.b)(i) = a(b(i))
  std::vector<int> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i] - 1];
  return r;
}

std::vector<int> longest_permutation(int m) {
  std::vector<int> r(m);
  for (int i = 0; i < m; ++i) r[i] = m - i;
  return r;
}

std::vector<int> permutation_reduced_word(const std::vector<int>& line) {
  std::vector<int> word;
  std::vector<int> w = line;
  bool progress = true;
  while (progress) {
    progress = false;
    for (size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] > w[k + 1]) {
        std::swap(w[k], w[k + 1]);  // peel the right descent s_{k+1}
        word.push_back(int(k) + 1);
        progress = true;
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

IntPoly schubert_polynomial(int m, const std::vector<int>& line) {
  if (int(line.size()) != m) throw Error("schubert_polynomial: line length mismatch");
  // staircase monomial for w0, then divided differences along w0 * w
  std::vector<int> expo(m, 0);
  for (int i = 0; i < m - 1; ++i) expo[i] = m - 1 - i;
  IntPoly p = IntPoly::monomial(m, expo);
  std::vector<int> rho = permutation_compose(longest_permutation(m), line);
  for (int k : permutation_reduced_word(rho)) p = divided_difference(p, k);
  return p;
}

Int schubert_coefficient(const IntPoly& f, const std::vector<int>& line) {
  IntPoly g = f;
  auto word = permutation_reduced_word(line);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (g.is_zero()) return 0;
    g = divided_difference(g, *it);
  }
  return g.constant_term();
}

std::map<std::vector<int>, Int> schubert_polynomial_constants(int m,
                                                              const std::vector<int>& u_line,
                                                              const std::vector<int>& v_line) {
  IntPoly prod = schubert_polynomial(m, u_line) * schubert_polynomial(m, v_line);
  const int target = permutation_length(u_line) + permutation_length(v_line);
  std::map<std::vector<int>, Int> out;
  // targets inside S_m only: the cohomology ring of the full flag variety
  std::vector<int> w(m);
  for (int i = 0; i < m; ++i) w[i] = i + 1;
  do {
    if (permutation_length(w) != target) continue;
    Int c = schubert_coefficient(prod, w);
    if (c != 0) out.emplace(w, c);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::map<std::vector<int>, Int> schubert_polynomial_constants(const RootDatum& datum,
                                                              const WeylElement& u,
                                                              const WeylElement& v) {
  if (datum.factors().size() != 1 || datum.factors()[0].series != Series::A)
    throw UnsupportedError("Schubert polynomial oracle covers type A full flags only");
  const int m = datum.rank() + 1;
  return schubert_polynomial_constants(m, to_one_line(datum, u), to_one_line(datum, v));
}

}  // namespace bk
