#pragma once

// The deformation layer over the cup product: characters chi_w, tau
// exponents, the deformed product and its tau = 0 specialization, the
// one-parameter-subgroup eigenspace dimension vectors, both Levi-movability
// criteria, and the coefficient-vector partition of the non-Levi positive
// roots.

#include "bk/schubert.hpp"

namespace bk {

// chi_w = sum of beta over (R+ \ R_P+) with w(beta) > 0, for w in W^P.
Weight chi(const ParabolicDatum& p, const WeylElement& w);
// <lambda_dot, chi_w>, evaluated integrally in simple-root coordinates.
Int chi_value(const ParabolicDatum& p, const WeylElement& w);

// (chi_w - chi_u - chi_v)(lambda_dot) for a cup term with d_{u,v}^w != 0
// (precondition on the caller); a negative value is a hard error.
Int tau_exponent_product(const ParabolicPtr& p, int u, int v, int w);

// Integer combinations of basis classes with nonnegative tau exponents.
struct TauClass {
  ParabolicPtr parabolic;
  std::map<std::pair<int, int>, Int> coeffs;  // (basis index, exponent) -> coeff

  bool is_zero() const { return coeffs.empty(); }
  void add(int index, int expo, Int c);
  bool operator==(const TauClass& o) const { return coeffs == o.coeffs; }
};

TauClass to_tau(const CohomologyClass& c);
CohomologyClass tau_zero(const TauClass& t);

TauClass deformed_product(const TauClass& a, const TauClass& b);
TauClass deformed_product(const CohomologyClass& a, const CohomologyClass& b);
// The tau = 0 truncation of the deformed product.
CohomologyClass bk_product(const CohomologyClass& a, const CohomologyClass& b);

// Eigenspace dimensions of the tangent space T = g/p under lambda(t), keyed
// by the (negative) eigenvalue i: d[i] = dim T^i and delta[i] = codim of
// T_w^i inside T^i.
struct DimVectors {
  std::map<int, Int> d;
  std::map<int, Int> delta;
};

DimVectors dim_vectors(const ParabolicDatum& p, const WeylElement& w);

// Levi-movability of a branching pair (w, w_tilde) with d_w^{w_tilde} != 0
// (caller asserts), where amb was built from i(lambda_dot) and sub from
// lambda_dot. The character gap chi~_{w~}(l) - chi_w(i(l)) is >= 0 whenever
// the coefficient is nonzero; a negative gap is a hard error.
Int char_gap(const ParabolicDatum& amb, const ParabolicDatum& sub, const WeylElement& w,
             const WeylElement& w_tilde);
bool levi_movable_char(const ParabolicDatum& amb, const ParabolicDatum& sub,
                       const WeylElement& w, const WeylElement& w_tilde);
// Dimension-vector criterion: Dim(T~) = CoDim(T~_{w~ dual}) + CoDim(T_w)
// componentwise. Must agree with the character criterion.
bool levi_movable_dim(const ParabolicDatum& amb, const ParabolicDatum& sub,
                      const WeylElement& w, const WeylElement& w_tilde);
// Both criteria, with an InconsistencyError on disagreement.
bool levi_movable(const ParabolicDatum& amb, const ParabolicDatum& sub, const WeylElement& w,
                  const WeylElement& w_tilde);

// Partition of the non-Levi positive roots by equal coefficient vectors on
// the simple roots outside Delta(P); each class spans one irreducible Levi
// submodule of the tangent space. Classes are lists of positive-root indices.
std::vector<std::vector<int>> abs_partition(const ParabolicDatum& p);

// True when the <lambda_dot, .> level sets of the non-Levi positive roots
// coincide with the abs classes (they always refine them).
bool abs_levels_check(const ParabolicDatum& p);

}  // namespace bk
