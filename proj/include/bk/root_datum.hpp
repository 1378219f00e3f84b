#pragma once

// Classical root systems (types A, B, C, D and block products) with exact
// integer lattices.
//
// Coordinate conventions, fixed once for the whole library:
//   * Root      — coordinates on the simple roots alpha_1..alpha_r.
//   * Weight    — coordinates on the fundamental weights (dual to the simple
//                 coroots).
//   * Coweight  — coordinates on the fundamental coweights (dual to the
//                 simple roots), so <coweight, alpha_k> reads off entry k.
// Conversion between the root and weight pictures goes through the Cartan
// matrix only.

#include "bk/numeric.hpp"

#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace bk {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D' };

Series series_from_char(char c);
char series_to_char(Series s);

struct SimpleFactor {
  Series series;
  int rank;
};

struct Root {
  IntVec coords;  // simple-root coordinates
};

struct Weight {
  IntVec coords;  // fundamental-weight coordinates
};

struct Coweight {
  IntVec coords;  // fundamental-coweight coordinates
};

// Ranks are capped so that full Weyl enumerations stay at desk scale.
inline constexpr int kMaxSimpleRank = 8;

class RootDatum {
 public:
  const std::vector<SimpleFactor>& factors() const { return factors_; }
  int rank() const { return rank_; }
  const IntMat& cartan() const { return cartan_; }

  // Positive roots in simple-root coordinates; the first rank() entries are
  // the simple roots themselves.
  const std::vector<IntVec>& positive_roots() const { return positive_roots_; }
  int num_positive() const { return int(positive_roots_.size()); }

  // Index into positive_roots(), or -1 when the vector is not a positive root.
  int positive_root_index(const IntVec& coords) const;
  bool is_root(const IntVec& coords) const;

  // Twice the invariant squared length of positive root i (short roots in a
  // simply laced factor have value 4 here; B-type short roots 2).
  Int len2x2(int pos_index) const { return len2x2_[pos_index]; }
  Int len2x2_of(const IntVec& coords) const;

  // Coordinates of the coroot beta^vee on the simple coroots.
  IntVec coroot_coords(const IntVec& root_coords) const;

  const RatMat& cartan_inverse() const { return cartan_inv_; }

  // epsilon-coordinate model of each simple factor (type A_n lives in Z^{n+1},
  // types B/C/D_n in Z^n): row k holds the epsilon-coordinates of alpha_k.
  // Factors are laid out in consecutive column blocks.
  const IntMat& simple_roots_eps() const { return eps_rows_; }
  int eps_dim() const { return int(eps_rows_.cols()); }
  // Column offset of each factor's epsilon block (size factors()+1).
  const std::vector<int>& eps_offsets() const { return eps_offsets_; }
  const std::vector<int>& rank_offsets() const { return rank_offsets_; }

  BigInt weyl_order() const { return weyl_order_; }

  std::string series_tag() const;

  friend std::shared_ptr<const RootDatum> build_root_datum(Series s, int rank);
  friend std::shared_ptr<const RootDatum> product_datum(
      const std::shared_ptr<const RootDatum>& a,
      const std::shared_ptr<const RootDatum>& b);

 private:
  RootDatum() = default;
  void finish();  // closure, lengths, indexes, invariant checks

  std::vector<SimpleFactor> factors_;
  int rank_ = 0;
  IntMat cartan_;
  IntMat sym2_;  // 2 * (alpha_j, alpha_k); symmetrized Cartan
  std::vector<IntVec> positive_roots_;
  std::vector<Int> len2x2_;
  std::unordered_map<IntVec, int, IntVecHash, IntVecEq> pos_index_;
  RatMat cartan_inv_;
  IntMat eps_rows_;
  std::vector<int> eps_offsets_;
  std::vector<int> rank_offsets_;
  BigInt weyl_order_ = 1;
};

using RootDatumPtr = std::shared_ptr<const RootDatum>;

RootDatumPtr build_root_datum(Series s, int rank);
RootDatumPtr product_datum(const RootDatumPtr& a, const RootDatumPtr& b);

// s_k acting on the three coordinate pictures.
IntVec reflect_root(const RootDatum& d, int k, const IntVec& root_coords);
IntVec reflect_weight(const RootDatum& d, int k, const IntVec& weight_coords);
IntVec reflect_coweight(const RootDatum& d, int k, const IntVec& coweight_coords);

// <coweight, root> — a coordinate dot product.
Int pair(const RootDatum& d, const Coweight& cw, const Root& r);
// <coweight, weight> — rational in general (weights need not lie in the root
// lattice).
Rational pair(const RootDatum& d, const Coweight& cw, const Weight& w);
// As above but asserts the value is integral.
Int pair_int(const RootDatum& d, const Coweight& cw, const Weight& w);

Weight root_to_weight(const RootDatum& d, const Root& r);
Weight root_to_weight(const RootDatum& d, const IntVec& root_coords);

// Sum of R^+ minus the excluded positive roots, as a Weight.
Weight sum_positive_roots(const RootDatum& d, const std::vector<int>& exclude_indices = {});
Weight sum_positive_roots(const RootDatum& d, const std::vector<Root>& exclude);

bool is_dominant(const Coweight& cw);
bool is_dominant(const Weight& w);

Weight fundamental_weight(const RootDatum& d, int k);
Coweight fundamental_coweight(const RootDatum& d, int k);

void to_json(nlohmann::json& j, const RootDatum& d);

}  // namespace bk
