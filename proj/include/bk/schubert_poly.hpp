#pragma once

// Type A Schubert polynomials through divided-difference operators. This is
// the independent oracle for the Chevalley-recursion structure constants: it
// never touches the engine's basis, only one-line permutations and exact
// polynomial arithmetic.

#include "bk/weyl.hpp"

#include <map>

namespace bk {

// Sparse integer polynomial in x_1..x_nvars, exponent-vector keyed.
class IntPoly {
 public:
  explicit IntPoly(int nvars = 0) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  const std::map<std::vector<int>, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int constant_term() const;

  void add_term(const std::vector<int>& expo, Int c);
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  static IntPoly monomial(int nvars, const std::vector<int>& expo, Int c = 1);

 private:
  int nvars_;
  std::map<std::vector<int>, Int> terms_;
};

// (f - s_k f) / (x_k - x_{k+1}), exact; 1-based k < nvars.
IntPoly divided_difference(const IntPoly& f, int k);

// One-line permutation utilities on 1..m.
int permutation_length(const std::vector<int>& line);
std::vector<int> permutation_inverse(const std::vector<int>& line);
std::vector<int> permutation_compose(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> longest_permutation(int m);
// Right descents peeled greedily; empty for the identity.
std::vector<int> permutation_reduced_word(const std::vector<int>& line);

// Schubert polynomial of w in S_m, in variables x_1..x_m.
IntPoly schubert_polynomial(int m, const std::vector<int>& line);

// Coefficient of S_w in f (applies the divided differences of a reduced word
// of w and takes the constant term).
Int schubert_coefficient(const IntPoly& f, const std::vector<int>& line);

// Expansion coefficients of S_u * S_v over permutations in S_m: the classical
// type A G/B structure constants. Throws UnsupportedError off type A.
std::map<std::vector<int>, Int> schubert_polynomial_constants(const RootDatum& datum,
                                                              const WeylElement& u,
                                                              const WeylElement& v);
std::map<std::vector<int>, Int> schubert_polynomial_constants(int m,
                                                              const std::vector<int>& u_line,
                                                              const std::vector<int>& v_line);

}  // namespace bk
