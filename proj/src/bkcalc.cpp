#include "bk/bkcalc.hpp"

#include <algorithm>

namespace bk {

namespace {

// Positive non-Levi roots sent to positive roots by w; the chi_w summands.
std::vector<int> chi_support(const ParabolicDatum& p, const WeylElement& w) {
  if (!p.is_minimal_rep(w)) throw Error("chi: element is not in W^P");
  const RootDatum& d = p.datum();
  std::vector<int> out;
  for (int i : p.non_levi_positive()) {
    IntVec img = w.action * d.positive_roots()[i];
    bool neg = true;
    for (int t = 0; t < img.size(); ++t)
      if (img[t] > 0) { neg = false; break; }
    if (!neg) out.push_back(i);
  }
  return out;
}

}  // namespace

Weight chi(const ParabolicDatum& p, const WeylElement& w) {
  const RootDatum& d = p.datum();
  IntVec acc = IntVec::Zero(d.rank());
  for (int i : chi_support(p, w)) acc += d.positive_roots()[i];
  return root_to_weight(d, acc);
}

Int chi_value(const ParabolicDatum& p, const WeylElement& w) {
  const RootDatum& d = p.datum();
  Int acc = 0;
  for (int i : chi_support(p, w)) acc += p.lambda_dot().coords.dot(d.positive_roots()[i]);
  return acc;
}

Int tau_exponent_product(const ParabolicPtr& p, int u, int v, int w) {
  const auto& reps = p->minimal_reps();
  if (u < 0 || v < 0 || w < 0 || u >= int(reps.size()) || v >= int(reps.size()) ||
      w >= int(reps.size()))
    throw Error("tau_exponent_product: basis index outside W^P");
  Int e = chi_value(*p, reps[w]) - chi_value(*p, reps[u]) - chi_value(*p, reps[v]);
  if (e < 0)
    throw InconsistencyError(
        "negative tau exponent on a product term; the deformed product is only well defined "
        "over nonzero cup coefficients");
  return e;
}

void TauClass::add(int index, int expo, Int c) {
  if (c == 0) return;
  if (expo < 0) throw InconsistencyError("negative tau exponent");
  auto key = std::make_pair(index, expo);
  auto [it, fresh] = coeffs.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

TauClass to_tau(const CohomologyClass& c) {
  TauClass t{c.parabolic, {}};
  for (const auto& [i, v] : c.coeffs) t.add(i, 0, v);
  return t;
}

CohomologyClass tau_zero(const TauClass& t) {
  CohomologyClass c{t.parabolic, {}};
  for (const auto& [key, v] : t.coeffs)
    if (key.second == 0) c.add(key.first, v);
  return c;
}

TauClass deformed_product(const TauClass& a, const TauClass& b) {
  if (!a.parabolic || !b.parabolic ||
      (a.parabolic != b.parabolic &&
       (a.parabolic->datum().series_tag() != b.parabolic->datum().series_tag() ||
        a.parabolic->delta_p() != b.parabolic->delta_p())))
    throw Error("deformed_product: classes live on different flag varieties");
  const auto& p = a.parabolic;
  TauClass out{p, {}};
  for (const auto& [ku, cu] : a.coeffs)
    for (const auto& [kv, cv] : b.coeffs) {
      for (const auto& [w, d] : structure_constants(p, ku.first, kv.first)) {
        Int e = tau_exponent_product(p, ku.first, kv.first, w);
        out.add(w, ku.second + kv.second + int(e), cu * cv * d);
      }
    }
  return out;
}

TauClass deformed_product(const CohomologyClass& a, const CohomologyClass& b) {
  return deformed_product(to_tau(a), to_tau(b));
}

CohomologyClass bk_product(const CohomologyClass& a, const CohomologyClass& b) {
  return tau_zero(deformed_product(a, b));
}

DimVectors dim_vectors(const ParabolicDatum& p, const WeylElement& w) {
  if (!p.is_minimal_rep(w)) throw Error("dim_vectors: element is not in W^P");
  const RootDatum& d = p.datum();
  DimVectors out;
  for (int i : p.non_levi_positive()) {
    const IntVec& gamma = d.positive_roots()[i];
    Int level = p.lambda_dot().coords.dot(gamma);
    if (level <= 0) throw InconsistencyError("non-Levi root with nonpositive pairing");
    int key = int(-level);
    out.d[key] += 1;
    // T_w collects the negative non-Levi roots sent positive by w; its
    // complement in the level counts the chi_w summands.
    IntVec img = w.action * gamma;
    bool pos = false;
    for (int t = 0; t < img.size(); ++t)
      if (img[t] > 0) { pos = true; break; }
    if (pos) out.delta[key] += 1;
    else if (out.delta.find(key) == out.delta.end()) out.delta[key] = 0;
  }
  Int total_d = 0, total_delta = 0;
  for (const auto& [i, v] : out.d) { (void)i; total_d += v; }
  for (const auto& [i, v] : out.delta) {
    (void)i;
    total_delta += v;
    if (v < 0 || v > out.d.at(i)) throw InconsistencyError("dimension vector out of range");
  }
  if (total_d != p.dim_gp() || total_delta != p.codim(w))
    throw InconsistencyError("dimension vector totals are off");
  return out;
}

Int char_gap(const ParabolicDatum& amb, const ParabolicDatum& sub, const WeylElement& w,
             const WeylElement& w_tilde) {
  return chi_value(sub, w_tilde) - chi_value(amb, w);
}

bool levi_movable_char(const ParabolicDatum& amb, const ParabolicDatum& sub,
                       const WeylElement& w, const WeylElement& w_tilde) {
  Int gap = char_gap(amb, sub, w, w_tilde);
  if (gap < 0)
    throw InconsistencyError(
        "character gap is negative; impossible over a nonzero branching coefficient");
  return gap == 0;
}

bool levi_movable_dim(const ParabolicDatum& amb, const ParabolicDatum& sub,
                      const WeylElement& w, const WeylElement& w_tilde) {
  DimVectors ambient = dim_vectors(amb, w);
  DimVectors sub_full = dim_vectors(sub, sub.max_rep());  // delta = 0, pure Dim(T~)
  DimVectors sub_dual = dim_vectors(sub, dual(sub.datum(), sub, w_tilde));
  // Dim(T~) = CoDim(T~_{w~ dual}) + CoDim(T_w) componentwise
  std::map<int, Int> lhs = sub_full.d;
  std::map<int, Int> rhs;
  for (const auto& [i, v] : sub_dual.delta) rhs[i] += v;
  for (const auto& [i, v] : ambient.delta) rhs[i] += v;
  for (auto it = rhs.begin(); it != rhs.end();) {
    if (it->second == 0) it = rhs.erase(it);
    else ++it;
  }
  for (auto it = lhs.begin(); it != lhs.end();) {
    if (it->second == 0) it = lhs.erase(it);
    else ++it;
  }
  return lhs == rhs;
}

bool levi_movable(const ParabolicDatum& amb, const ParabolicDatum& sub, const WeylElement& w,
                  const WeylElement& w_tilde) {
  bool by_char = levi_movable_char(amb, sub, w, w_tilde);
  bool by_dim = levi_movable_dim(amb, sub, w, w_tilde);
  if (by_char != by_dim)
    throw InconsistencyError("Levi-movability criteria disagree (convention bug)");
  return by_char;
}

std::vector<std::vector<int>> abs_partition(const ParabolicDatum& p) {
  const RootDatum& d = p.datum();
  std::vector<int> outside;  // simple roots outside Delta(P)
  for (int k = 0; k < d.rank(); ++k)
    if (!p.in_delta_p(k)) outside.push_back(k);
  std::map<std::vector<Int>, std::vector<int>> classes;
  for (int i : p.non_levi_positive()) {
    std::vector<Int> key;
    key.reserve(outside.size());
    for (int k : outside) key.push_back(d.positive_roots()[i][k]);
    classes[key].push_back(i);
  }
  std::vector<std::vector<int>> out;
  for (auto& [key, cls] : classes) {
    (void)key;
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool abs_levels_check(const ParabolicDatum& p) {
  const RootDatum& d = p.datum();
  std::map<Int, std::vector<int>> levels;
  for (int i : p.non_levi_positive())
    levels[p.lambda_dot().coords.dot(d.positive_roots()[i])].push_back(i);
  std::vector<std::vector<int>> level_classes;
  for (auto& [lv, cls] : levels) {
    (void)lv;
    std::sort(cls.begin(), cls.end());
    level_classes.push_back(std::move(cls));
  }
  std::sort(level_classes.begin(), level_classes.end());
  auto abs = abs_partition(p);
  // equal coefficient vectors force equal pairings, so abs refines levels;
  // anything else is a bug
  for (const auto& cls : abs) {
    Int v0 = p.lambda_dot().coords.dot(d.positive_roots()[cls[0]]);
    for (int i : cls)
      if (p.lambda_dot().coords.dot(d.positive_roots()[i]) != v0)
        throw InconsistencyError("abs class split across lambda levels");
  }
  return level_classes == abs;
}

}  // namespace bk
