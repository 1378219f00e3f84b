#pragma once

// Weyl group elements in their canonical form: the integer matrix of the
// action on simple-root coordinates. Equality, hashing and ordering all go
// through that matrix; reduced words are derived on demand.

#include "bk/root_datum.hpp"

#include <mutex>
#include <optional>
#include <vector>

namespace bk {

struct WeylElement {
  IntMat action;  // acts on simple-root coordinates
  int length = 0;

  bool operator==(const WeylElement& o) const { return action == o.action; }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }
};

struct WeylElementHash {
  size_t operator()(const WeylElement& w) const {
    size_t h = 1469598103934665603ull;
    for (int i = 0; i < w.action.rows(); ++i)
      for (int j = 0; j < w.action.cols(); ++j) {
        h ^= static_cast<size_t>(w.action(i, j)) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
      }
    return h;
  }
};

// Lexicographic on (length, action matrix); the canonical basis order.
bool weyl_less(const WeylElement& a, const WeylElement& b);

WeylElement weyl_identity(const RootDatum& d);
WeylElement simple_reflection(const RootDatum& d, int k);
WeylElement multiply(const RootDatum& d, const WeylElement& a, const WeylElement& b);
WeylElement inverse(const RootDatum& d, const WeylElement& w);

int weyl_length(const RootDatum& d, const IntMat& action);

IntVec act_on_root(const WeylElement& w, const IntVec& root_coords);
Root act(const RootDatum& d, const WeylElement& w, const Root& r);
Coweight act(const RootDatum& d, const WeylElement& w, const Coweight& c);
Weight act(const RootDatum& d, const WeylElement& w, const Weight& mu);

// k with w(alpha_k) < 0, or -1 when w = e.
int right_descent(const RootDatum& d, const WeylElement& w);
std::vector<int> reduced_word(const RootDatum& d, const WeylElement& w);
WeylElement from_word(const RootDatum& d, const std::vector<int>& word);

// Longest element of the standard parabolic subgroup generated by `subset`
// (all simple reflections when subset is empty and `full` is true).
WeylElement longest_element(const RootDatum& d, const std::vector<int>& subset);
WeylElement longest_element(const RootDatum& d);

inline constexpr Int kWeylEnumerationCap = 1 << 20;

// All of W in canonical order (identity first, then by length / matrix order).
std::vector<WeylElement> enumerate_weyl(const RootDatum& d, Int cap = kWeylEnumerationCap);

// Block-diagonal element of a two-factor product datum.
WeylElement product_element(const RootDatum& prod, const WeylElement& a, const WeylElement& b);

// One-line permutation notation. For a single type A factor of rank n the
// line has n+1 entries; for a single type B factor of rank m it is the
// symmetric-group realization on 2m+1 letters with a_i + a_{2m+2-i} = 2m+2.
std::vector<int> to_one_line(const RootDatum& d, const WeylElement& w);
WeylElement from_one_line(const RootDatum& d, const std::vector<int>& line);

// ---------------------------------------------------------------------------

class ParabolicDatum {
 public:
  ParabolicDatum(RootDatumPtr datum, Coweight lambda_dot);

  const RootDatumPtr& datum_ptr() const { return datum_; }
  const RootDatum& datum() const { return *datum_; }
  const Coweight& lambda_dot() const { return lambda_dot_; }

  // Simple-root indices k with <lambda_dot, alpha_k> = 0.
  const std::vector<int>& delta_p() const { return delta_p_; }
  bool in_delta_p(int k) const { return in_delta_p_[k]; }

  // Indices (into datum().positive_roots()) of R_P^+ and of R^+ \ R_P^+.
  const std::vector<int>& levi_positive() const { return levi_pos_; }
  const std::vector<int>& non_levi_positive() const { return non_levi_pos_; }

  int dim_gp() const { return int(non_levi_pos_.size()); }

  const WeylElement& w0() const { return w0_; }
  const WeylElement& wp() const { return wp_; }
  const WeylElement& max_rep() const { return w0wp_; }  // unit class index w0*wP

  bool is_minimal_rep(const WeylElement& w) const;
  int codim(const WeylElement& w) const;  // dim_gp - length(w), w in W^P

  // Minimal coset representatives in canonical order (lazy; enumerates W).
  const std::vector<WeylElement>& minimal_reps() const;
  int rep_index(const WeylElement& w) const;  // -1 if absent

 private:
  RootDatumPtr datum_;
  Coweight lambda_dot_;
  std::vector<int> delta_p_;
  std::vector<bool> in_delta_p_;
  std::vector<int> levi_pos_;
  std::vector<int> non_levi_pos_;
  WeylElement w0_, wp_, w0wp_;

  mutable std::once_flag reps_once_;
  mutable std::vector<WeylElement> reps_;
  mutable std::unordered_map<WeylElement, int, WeylElementHash> rep_index_;
};

using ParabolicPtr = std::shared_ptr<const ParabolicDatum>;

ParabolicPtr make_parabolic(RootDatumPtr datum, Coweight lambda_dot);
// lambda_dot = sum of fundamental coweights over the complement of delta_p.
ParabolicPtr make_parabolic_from_complement(RootDatumPtr datum,
                                            const std::vector<int>& not_in_delta_p);

std::vector<WeylElement> minimal_representatives(const RootDatum& d,
                                                 const ParabolicDatum& p);

// w0 * w * wP, defined for w in W^P; an involution on W^P.
WeylElement dual(const RootDatum& d, const ParabolicDatum& p, const WeylElement& w);

std::string word_string(const std::vector<int>& word);

}  // namespace bk
