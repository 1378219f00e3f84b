#include "bk/lr.hpp"

#include <algorithm>

namespace bk {

Int partition_size(const Partition& p) {
  Int s = 0;
  for (Int x : p) s += x;
  return s;
}

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) return false;
    if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
  }
  return true;
}

namespace {

struct LrSearch {
  const Partition* lambda;
  const Partition* nu;
  std::vector<std::pair<int, int>> cells;  // reading order: top rows first, right to left
  std::vector<Int> remaining;              // per letter, copies of mu_t still to place
  std::vector<Int> ballot;                 // letter counts in the reading word so far
  std::vector<std::vector<int>> t;         // tableau entries, 0 where not yet filled
  Int count = 0;
  bool stop_at_first = false;
  bool found = false;

  Int lam(int row) const { return row < int(lambda->size()) ? (*lambda)[row] : 0; }

  bool fill(size_t idx) {
    if (idx == cells.size()) {
      ++count;
      found = true;
      return stop_at_first;
    }
    const auto [row, col] = cells[idx];
    const int letters = int(remaining.size());
    for (int v = 1; v <= letters; ++v) {
      if (remaining[v - 1] == 0) continue;
      // weakly increasing along the row (right neighbor already placed)
      if (col + 1 < (*nu)[row] && t[row][col + 1] != 0 && t[row][col + 1] < v) continue;
      // strictly increasing down the filled part of the column
      if (row > 0 && col < (*nu)[row - 1] && col >= lam(row - 1) && t[row - 1][col] >= v)
        continue;
      // lattice word: after placing v, #v must not exceed #(v-1)
      if (v > 1 && ballot[v - 1] + 1 > ballot[v - 2]) continue;
      t[row][col] = v;
      --remaining[v - 1];
      ++ballot[v - 1];
      bool done = fill(idx + 1);
      ++remaining[v - 1];
      --ballot[v - 1];
      t[row][col] = 0;
      if (done) return true;
    }
    return false;
  }
};

Int lr_run(const Partition& lambda, const Partition& mu, const Partition& nu, bool first_only) {
  if (!is_partition(lambda) || !is_partition(mu) || !is_partition(nu))
    throw Error("lr_coefficient: arguments must be partitions");
  if (partition_size(lambda) + partition_size(mu) != partition_size(nu)) return 0;
  // containment lambda subset nu
  for (size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] > (i < nu.size() ? nu[i] : 0)) return 0;

  Partition nu_trim = nu;
  while (!nu_trim.empty() && nu_trim.back() == 0) nu_trim.pop_back();
  if (nu_trim.empty()) return 1;  // everything empty

  LrSearch s;
  s.lambda = &lambda;
  s.nu = &nu_trim;
  s.remaining.assign(mu.begin(), mu.end());
  while (!s.remaining.empty() && s.remaining.back() == 0) s.remaining.pop_back();
  s.ballot.assign(s.remaining.size(), 0);
  s.t.resize(nu_trim.size());
  for (size_t r = 0; r < nu_trim.size(); ++r) {
    s.t[r].assign(size_t(nu_trim[r]), 0);
    for (int col = int(nu_trim[r]) - 1; col >= int(s.lam(int(r))); --col)
      s.cells.emplace_back(int(r), col);
  }
  s.stop_at_first = first_only;
  s.fill(0);
  return first_only ? (s.found ? 1 : 0) : s.count;
}

}  // namespace

Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  return lr_run(lambda, mu, nu, false);
}

bool lr_positive(const Partition& lambda, const Partition& mu, const Partition& nu) {
  return lr_run(lambda, mu, nu, true) != 0;
}

Partition partition_from_sl_weight(const IntVec& coords, int r) {
  if (coords.size() != r - 1) throw Error("partition_from_sl_weight: need r-1 coordinates");
  Partition p(r, 0);
  for (int i = r - 2; i >= 0; --i) {
    if (coords[i] < 0) throw Error("partition_from_sl_weight: weight not dominant");
    p[i] = p[i + 1] + coords[i];
  }
  return p;
}

Partition sl_dual_partition(const Partition& p, int r) {
  Partition q(r, 0);
  Partition full = p;
  full.resize(r, 0);
  for (int i = 0; i < r; ++i) q[i] = full[0] - full[r - 1 - i];
  return q;
}

namespace {

// Multiplicity of V_target inside V_a (x) V_b for GL_r partitions, where
// target is adjusted by full columns to match sizes.
Int pair_mult(int r, const Partition& pa, const Partition& pb, const Partition& target) {
  Int diff = partition_size(pa) + partition_size(pb) - partition_size(target);
  if (diff % r != 0) return 0;
  Int shift = diff / r;
  Partition adj = target;
  adj.resize(r, 0);
  for (auto& x : adj) x += shift;
  if (!is_partition(adj) || adj.back() < 0) return 0;
  return lr_coefficient(pa, pb, adj);
}

}  // namespace

Int sl_triple_invariant_dim(int r, const IntVec& a, const IntVec& b, const IntVec& c) {
  Partition pa = partition_from_sl_weight(a, r);
  Partition pb = partition_from_sl_weight(b, r);
  Partition pc = partition_from_sl_weight(c, r);
  // invariants in V_a (x) V_b (x) V_c = mult of V_c^* in V_a (x) V_b
  return pair_mult(r, pa, pb, sl_dual_partition(pc, r));
}

bool sl_triple_has_invariant(int r, const IntVec& a, const IntVec& b, const IntVec& c) {
  Partition pa = partition_from_sl_weight(a, r);
  Partition pb = partition_from_sl_weight(b, r);
  Partition pc = partition_from_sl_weight(c, r);
  Int total = partition_size(pa) + partition_size(pb) + partition_size(pc);
  Int rem = total % r;
  Int n0 = rem == 0 ? 1 : r / gcd_int(r, rem);
  auto scaled = [&](const IntVec& v, Int n) { return (v * n).eval(); };
  bool at_n0 = sl_triple_invariant_dim(r, scaled(a, n0), scaled(b, n0), scaled(c, n0)) > 0;
  bool at_2n0 = sl_triple_invariant_dim(r, scaled(a, 2 * n0), scaled(b, 2 * n0), scaled(c, 2 * n0)) > 0;
  if (at_n0 != at_2n0)
    throw InconsistencyError("saturation cross-check failed at n0 and 2 n0");
  return at_n0;
}

}  // namespace bk
