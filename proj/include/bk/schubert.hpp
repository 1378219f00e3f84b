#pragma once

// Exact cup-product structure constants for H*(G/P) in the basis indexed by
// minimal coset representatives, graded by codimension codim(w) =
// dim G/P - length(w). The unit class sits at w0*wP, the point class at e.
//
// The multiplication engine works inside each simple factor's full flag
// variety: every basis class is expressed degree by degree as a polynomial in
// the divisor classes (exact rational elimination), products are then filled
// by Chevalley recursion, and G/P tables are read off through w -> w*wP.
// Product data multiply factorwise.

#include "bk/weyl.hpp"

#include <map>
#include <optional>

namespace bk {

struct CohomologyClass {
  ParabolicPtr parabolic;
  std::map<int, Int> coeffs;  // basis index -> nonzero coefficient

  bool is_zero() const { return coeffs.empty(); }
  void add(int index, Int c);
  bool operator==(const CohomologyClass& o) const { return coeffs == o.coeffs; }
};

CohomologyClass make_class(ParabolicPtr p, std::initializer_list<std::pair<int, Int>> terms = {});
CohomologyClass unit_class(const ParabolicPtr& p);
CohomologyClass point_class(const ParabolicPtr& p);
CohomologyClass basis_class(const ParabolicPtr& p, int index);

// Codimension of basis element i; a class is homogeneous when all of its
// support sits in one codimension.
int basis_codim(const ParabolicDatum& p, int index);
std::optional<int> homogeneous_codim(const CohomologyClass& c);

// Index of w0 w wP within the basis.
int dual_index(const ParabolicDatum& p, int index);

// Multiplication by the codimension-one class indexed by s_k^vee, k outside
// Delta(P).
CohomologyClass chevalley_multiply(const ParabolicPtr& p, int k, const CohomologyClass& c);

// d_{u,v}^w as a sparse vector over the basis; arguments are basis indices.
std::map<int, Int> structure_constants(const ParabolicPtr& p, int u, int v);
std::map<int, Int> structure_constants(const ParabolicPtr& p, const WeylElement& u,
                                       const WeylElement& v);

CohomologyClass multiply(const CohomologyClass& a, const CohomologyClass& b);

std::string class_to_string(const CohomologyClass& c);

// Forces the full pairwise table for this parabolic and, when a cache
// directory is configured, persists it (single simple factor only).
void materialize_table(const ParabolicPtr& p);

// Triples (u, v, w, d) with u <= v, sorted; the serialized cache payload.
std::vector<std::array<Int, 4>> all_triples(const ParabolicPtr& p);

// --- cache control (see cache.cpp) -----------------------------------------

void set_cache_directory(std::optional<std::string> dir);
std::optional<std::string> cache_directory();
struct CacheInfo {
  std::string directory;
  std::vector<std::pair<std::string, std::uintmax_t>> files;  // name, bytes
};
CacheInfo cache_info();
int cache_clear();

}  // namespace bk
