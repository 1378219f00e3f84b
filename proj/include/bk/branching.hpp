#pragma once

// Lattice-level embeddings of reductive groups and the comorphisms they
// induce on Schubert bases: full branching for diagonal embeddings, the
// H^2 restriction for any built-in embedding, and a curated odd-orthogonal
// fixture with externally computed coefficients.

#include "bk/bkcalc.hpp"

#include <nlohmann/json_fwd.hpp>

namespace bk {

enum class EmbeddingKind { Diagonal, PrincipalSl2, Tensor, OddOrthogonalFixture };

std::string kind_name(EmbeddingKind k);

struct Embedding {
  EmbeddingKind kind;
  RootDatumPtr ambient;
  RootDatumPtr sub;
  IntMat i_star;      // weight restriction, ambient pi-coords -> sub pi-coords
  IntMat i_coweight;  // coweight inclusion, sub x-coords -> ambient x-coords
  std::vector<Int> params;
};

Embedding make_diagonal(const RootDatumPtr& datum);
// SL2 -> SL(V_n) along the irreducible (n+1)-dimensional representation.
Embedding principal_sl2(int n);
// SL_n x SL_n -> SL(C^n (x) C^n); k and l fix the one-parameter subgroup and
// the tensor basis is ordered by its exponents.
Embedding tensor_embedding(int n, int k, int l);

Weight restrict_weight(const Embedding& e, const Weight& ambient_weight);
Coweight include_coweight(const Embedding& e, const Coweight& sub_coweight);

// A dominant sub coweight and the two parabolics it generates.
struct EmbeddedParabolic {
  Embedding emb;
  ParabolicPtr sub;  // P~(lambda) in the subgroup
  ParabolicPtr amb;  // P(i(lambda)) in the ambient group
};

EmbeddedParabolic embedded_parabolic(Embedding e, const Coweight& lambda_dot);

Int char_gap(const EmbeddedParabolic& ep, const WeylElement& w, const WeylElement& w_tilde);
bool levi_movable_char(const EmbeddedParabolic& ep, const WeylElement& w,
                       const WeylElement& w_tilde);
bool levi_movable_dim(const EmbeddedParabolic& ep, const WeylElement& w,
                      const WeylElement& w_tilde);

// Diagonal basis bookkeeping: ambient basis index <-> pair of sub indices.
std::pair<int, int> diagonal_split(const EmbeddedParabolic& ep, int ambient_index);
int diagonal_join(const EmbeddedParabolic& ep, int u, int v);

// phi* of the ambient basis class [L_u x L_v]: the cup product in the sub.
CohomologyClass phi_star_diagonal(const EmbeddedParabolic& ep, int u, int v);
CohomologyClass phi_star(const EmbeddedParabolic& ep, int ambient_index);

// The character-filtered comorphism on a diagonal ambient basis class.
CohomologyClass phi_odot(const EmbeddedParabolic& ep, int ambient_index);
// The same filter over externally supplied branching coefficients.
CohomologyClass phi_odot_with(const EmbeddedParabolic& ep, const WeylElement& w,
                              const std::vector<std::pair<WeylElement, Int>>& coefficients);

// Restriction on H^2: expands i*(pi_k), k outside the ambient Delta(P), over
// the codimension-one classes of the sub flag variety.
CohomologyClass phi_star_h2(const EmbeddedParabolic& ep, int k);
// The bare coefficient vector over the sub's non-Levi simple roots.
std::vector<std::pair<int, Int>> h2_coefficients(const EmbeddedParabolic& ep, int k);

struct HomCheckReport {
  Int pairs_checked = 0;
  std::vector<std::pair<int, int>> violations;        // ring homomorphism failures
  std::vector<std::pair<int, int>> dichotomy_breaks;  // c neither d nor 0
  bool ok() const { return violations.empty() && dichotomy_breaks.empty(); }
};

// Exhaustive check of phi(x bk* y) = phi(x) bk* phi(y) over basis pairs of the
// diagonal ambient, plus the c = d-or-0 dichotomy and grading.
HomCheckReport hom_check_diagonal(const RootDatumPtr& datum, const Coweight& lambda_dot,
                                  Int pair_budget = -1);

struct BranchingFixture {
  Embedding emb;
  Coweight lambda_dot;  // sub coweight x~_3
  WeylElement w;        // designated ambient element, in W^P
  std::vector<std::pair<WeylElement, Int>> coefficients;  // (w~_i, d_i)
};

// OG(3, C^9) inside the two-step flag of C^9: branching data for the
// designated class from a published worked example of Coskun's restriction
// algorithm for odd orthogonal Grassmannians.
BranchingFixture oddorth_fixture();

void to_json(nlohmann::json& j, const Embedding& e);

}  // namespace bk
