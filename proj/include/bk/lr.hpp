#pragma once

// Littlewood-Richardson coefficients by direct tableau enumeration, plus the
// SL_r invariant-dimension bookkeeping built on them. Everything here is an
// oracle: deliberately brute force, no shortcuts shared with the engine.

#include "bk/root_datum.hpp"

namespace bk {

using Partition = std::vector<Int>;  // weakly decreasing, nonnegative

Int partition_size(const Partition& p);
bool is_partition(const Partition& p);

// Number of LR skew tableaux of shape nu/lambda and content mu.
Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);
// Same search with an early exit on the first filling.
bool lr_positive(const Partition& lambda, const Partition& mu, const Partition& nu);

// Partition of an SL_r dominant weight (fundamental-weight coordinates,
// length r-1): rows p_i = sum_{k >= i} a_k, padded to r rows with 0.
Partition partition_from_sl_weight(const IntVec& coords, int r);
// Partition of the dual representation, r rows.
Partition sl_dual_partition(const Partition& p, int r);

// Multiplicity of the trivial representation in V_a (x) V_b (x) V_c for SL_r,
// weights in fundamental-weight coordinates.
Int sl_triple_invariant_dim(int r, const IntVec& a, const IntVec& b, const IntVec& c);

// Saturated membership: does V_{n a} (x) V_{n b} (x) V_{n c} contain an
// invariant for some positive n? Decided exactly: scale by the smallest n0
// that makes the sizes divisible by r, then test n0 (and 2 n0 as a
// cross-check) via the LR rule and saturation.
bool sl_triple_has_invariant(int r, const IntVec& a, const IntVec& b, const IntVec& c);

}  // namespace bk
