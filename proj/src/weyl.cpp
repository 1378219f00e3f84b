#include "bk/weyl.hpp"

#include <algorithm>
#include <unordered_set>

namespace bk {

bool weyl_less(const WeylElement& a, const WeylElement& b) {
  if (a.length != b.length) return a.length < b.length;
  const int n = int(a.action.rows());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a.action(i, j) != b.action(i, j)) return a.action(i, j) < b.action(i, j);
  return false;
}

WeylElement weyl_identity(const RootDatum& d) {
  return {IntMat::Identity(d.rank(), d.rank()), 0};
}

WeylElement simple_reflection(const RootDatum& d, int k) {
  if (k < 0 || k >= d.rank()) throw Error("simple_reflection: index out of range");
  IntMat m(d.rank(), d.rank());
  for (int j = 0; j < d.rank(); ++j) {
    IntVec col = IntVec::Zero(d.rank());
    col[j] = 1;
    m.col(j) = reflect_root(d, k, col);
  }
  return {m, 1};
}

int weyl_length(const RootDatum& d, const IntMat& action) {
  int inv = 0;
  for (const auto& b : d.positive_roots()) {
    IntVec img = action * b;
    bool neg = true;
    for (int i = 0; i < img.size(); ++i)
      if (img[i] > 0) { neg = false; break; }
    if (neg) ++inv;
  }
  return inv;
}

WeylElement multiply(const RootDatum& d, const WeylElement& a, const WeylElement& b) {
  IntMat m = a.action * b.action;
  return {m, weyl_length(d, m)};
}

WeylElement inverse(const RootDatum& d, const WeylElement& w) {
  (void)d;
  return {int_inverse(w.action), w.length};
}

IntVec act_on_root(const WeylElement& w, const IntVec& root_coords) {
  return w.action * root_coords;
}

Root act(const RootDatum& d, const WeylElement& w, const Root& r) {
  IntVec img = w.action * r.coords;
  if (!d.is_root(img)) throw InconsistencyError("Weyl action left the root set");
  return Root{img};
}

Coweight act(const RootDatum& d, const WeylElement& w, const Coweight& c) {
  // <w c, alpha> = <c, w^{-1} alpha>: coweights transform by the inverse
  // transpose of the root action.
  IntMat inv = int_inverse(w.action);
  (void)d;
  return Coweight{(inv.transpose() * c.coords).eval()};
}

Weight act(const RootDatum& d, const WeylElement& w, const Weight& mu) {
  // Conjugate the root action through the Cartan matrix; the result is
  // integral because the weight lattice is Weyl-stable.
  const RatMat& ci = d.cartan_inverse();
  const int n = d.rank();
  RatVec b(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (mu.coords[j] != 0) b[i] += ci(i, j) * Rational(mu.coords[j]);
  RatVec ab(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (b[j] != 0) ab[i] += Rational(w.action(i, j)) * b[j];
  IntVec out(n);
  for (int i = 0; i < n; ++i) {
    Rational acc = 0;
    for (int j = 0; j < n; ++j)
      if (ab[j] != 0) acc += Rational(d.cartan()(i, j)) * ab[j];
    out[i] = to_int_checked(acc, "act on weight");
  }
  return Weight{out};
}

int right_descent(const RootDatum& d, const WeylElement& w) {
  for (int k = 0; k < d.rank(); ++k) {
    bool neg = true;
    for (int i = 0; i < d.rank(); ++i)
      if (w.action(i, k) > 0) { neg = false; break; }
    if (neg) return k;  // column k is w(alpha_k)
  }
  return -1;
}

std::vector<int> reduced_word(const RootDatum& d, const WeylElement& w) {
  std::vector<int> word;
  WeylElement u = w;
  while (true) {
    int k = right_descent(d, u);
    if (k < 0) break;
    word.push_back(k);
    u = multiply(d, u, simple_reflection(d, k));
  }
  if (u.action != IntMat::Identity(d.rank(), d.rank()))
    throw InconsistencyError("reduced_word: descent recursion did not reach e");
  std::reverse(word.begin(), word.end());
  return word;
}

WeylElement from_word(const RootDatum& d, const std::vector<int>& word) {
  WeylElement w = weyl_identity(d);
  for (int k : word) w = multiply(d, w, simple_reflection(d, k));
  return w;
}

WeylElement longest_element(const RootDatum& d, const std::vector<int>& subset) {
  WeylElement w = weyl_identity(d);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int k : subset) {
      // w(alpha_k) > 0 means ws_k is longer inside W_subset.
      bool pos = false;
      for (int i = 0; i < d.rank(); ++i)
        if (w.action(i, k) > 0) { pos = true; break; }
      if (pos) {
        w = multiply(d, w, simple_reflection(d, k));
        progress = true;
      }
    }
  }
  return w;
}

WeylElement longest_element(const RootDatum& d) {
  std::vector<int> all(d.rank());
  for (int k = 0; k < d.rank(); ++k) all[k] = k;
  return longest_element(d, all);
}

std::vector<WeylElement> enumerate_weyl(const RootDatum& d, Int cap) {
  if (d.weyl_order() > cap)
    throw Error("Weyl group of " + d.series_tag() + " has order " +
                d.weyl_order().str() + ", past the enumeration cap " +
                std::to_string(cap));
  std::vector<WeylElement> all;
  std::unordered_set<WeylElement, WeylElementHash> seen;
  std::vector<WeylElement> level{weyl_identity(d)};
  seen.insert(level[0]);
  int len = 0;
  while (!level.empty()) {
    std::sort(level.begin(), level.end(), weyl_less);
    all.insert(all.end(), level.begin(), level.end());
    std::vector<WeylElement> next;
    for (const auto& w : level) {
      for (int k = 0; k < d.rank(); ++k) {
        bool pos = false;
        for (int i = 0; i < d.rank(); ++i)
          if (w.action(i, k) > 0) { pos = true; break; }
        if (!pos) continue;  // only length-increasing steps
        WeylElement ws{w.action * simple_reflection(d, k).action, len + 1};
        if (seen.insert(ws).second) next.push_back(ws);
      }
    }
    level = std::move(next);
    ++len;
  }
  return all;
}

WeylElement product_element(const RootDatum& prod, const WeylElement& a, const WeylElement& b) {
  const int ra = int(a.action.rows()), rb = int(b.action.rows());
  if (ra + rb != prod.rank()) throw Error("product_element: ranks do not add up");
  IntMat m = IntMat::Zero(prod.rank(), prod.rank());
  m.topLeftCorner(ra, ra) = a.action;
  m.bottomRightCorner(rb, rb) = b.action;
  return {m, a.length + b.length};
}

namespace {

// alpha-coordinates of e_p - e_q inside a type A factor of rank n
// (1-based positions p != q in 1..n+1).
IntVec type_a_eps_diff(int rank, int p, int q) {
  IntVec v = IntVec::Zero(rank);
  int lo = std::min(p, q), hi = std::max(p, q);
  Int sign = p < q ? 1 : -1;
  for (int t = lo; t < hi; ++t) v[t - 1] = sign;
  return v;
}

}  // namespace

std::vector<int> to_one_line(const RootDatum& d, const WeylElement& w) {
  if (d.factors().size() != 1)
    throw UnsupportedError("one-line notation requires a single simple factor");
  const auto f = d.factors()[0];
  const int n = d.rank();
  if (f.series == Series::A) {
    const int m = n + 1;
    // Reconstruct w(eps_i) from the images of alpha_i = eps_i - eps_{i+1}.
    IntMat g(m, n);  // column i = eps-coords of w(alpha_{i+1})
    for (int i = 0; i < n; ++i)
      g.col(i) = d.simple_roots_eps().transpose() * (w.action.col(i));
    std::vector<IntVec> h(m + 1, IntVec::Zero(m));
    for (int i = n - 1; i >= 0; --i) h[i] = h[i + 1] + g.col(i);
    IntVec total = IntVec::Zero(m);
    for (int i = 0; i < m; ++i) total += h[i];
    std::vector<int> line(m);
    for (int i = 0; i < m; ++i) {
      // f_i = h_i + (ones - total)/m must be a standard basis vector
      int hit = -1;
      for (int t = 0; t < m; ++t) {
        Int num = 1 - total[t] + Int(m) * h[i][t];
        if (num % m != 0) throw InconsistencyError("one-line reconstruction failed");
        Int v = num / m;
        if (v == 1) {
          if (hit >= 0) throw InconsistencyError("one-line reconstruction failed");
          hit = t;
        } else if (v != 0) {
          throw InconsistencyError("one-line reconstruction failed");
        }
      }
      line[i] = hit + 1;
    }
    return line;
  }
  if (f.series == Series::B) {
    // Signed permutation on eps coordinates, written in S_{2n+1}.
    IntMat t = d.simple_roots_eps().transpose();  // alpha -> eps, square for B
    IntMat s = t * w.action * int_inverse(t);
    const int m = n;
    std::vector<int> line(2 * m + 1, 0);
    line[m] = m + 1;
    for (int j = 0; j < m; ++j) {
      int hit = -1;
      Int sign = 0;
      for (int i = 0; i < m; ++i) {
        if (s(i, j) != 0) {
          if (hit >= 0 || (s(i, j) != 1 && s(i, j) != -1))
            throw InconsistencyError("not a signed permutation");
          hit = i;
          sign = s(i, j);
        }
      }
      if (hit < 0) throw InconsistencyError("not a signed permutation");
      int a = sign > 0 ? hit + 1 : 2 * m + 2 - (hit + 1);
      line[j] = a;
      line[2 * m - j] = 2 * m + 2 - a;
    }
    return line;
  }
  throw UnsupportedError("one-line notation implemented for types A and B only");
}

WeylElement from_one_line(const RootDatum& d, const std::vector<int>& line) {
  if (d.factors().size() != 1)
    throw UnsupportedError("one-line notation requires a single simple factor");
  const auto f = d.factors()[0];
  const int n = d.rank();
  auto check_perm = [&](int m) {
    if (int(line.size()) != m)
      throw Error("one-line notation for " + d.series_tag() + " needs " +
                  std::to_string(m) + " entries, got " + std::to_string(line.size()));
    std::vector<bool> seen(m + 1, false);
    for (int a : line) {
      if (a < 1 || a > m || seen[a]) throw Error("not a permutation of 1.." + std::to_string(m));
      seen[a] = true;
    }
  };
  if (f.series == Series::A) {
    const int m = n + 1;
    check_perm(m);
    IntMat action(n, n);
    for (int i = 0; i < n; ++i)
      action.col(i) = type_a_eps_diff(n, line[i], line[i + 1]);
    WeylElement w{action, 0};
    w.length = weyl_length(d, action);
    return w;
  }
  if (f.series == Series::B) {
    const int m = n;
    const int big = 2 * m + 1;
    check_perm(big);
    for (int i = 1; i <= big; ++i)
      if (line[i - 1] + line[big - i] != big + 1)
        throw Error("one-line entries violate a_i + a_" + std::to_string(big + 1 - i) +
                    " = " + std::to_string(big + 1));
    IntMat s = IntMat::Zero(m, m);  // signed permutation on eps coordinates
    for (int j = 1; j <= m; ++j) {
      int a = line[j - 1];
      if (a == m + 1) throw Error("invalid one-line: middle letter moved");
      if (a <= m)
        s(a - 1, j - 1) = 1;
      else
        s(big + 1 - a - 1, j - 1) = -1;
    }
    IntMat t = d.simple_roots_eps().transpose();
    IntMat action = int_inverse(t) * s * t;
    WeylElement w{action, 0};
    w.length = weyl_length(d, action);
    return w;
  }
  throw UnsupportedError("one-line notation implemented for types A and B only");
}

// ---------------------------------------------------------------------------

ParabolicDatum::ParabolicDatum(RootDatumPtr datum, Coweight lambda_dot)
    : datum_(std::move(datum)), lambda_dot_(std::move(lambda_dot)) {
  const RootDatum& d = *datum_;
  if (lambda_dot_.coords.size() != d.rank())
    throw Error("parabolic: coweight length does not match rank");
  if (!is_dominant(lambda_dot_))
    throw Error("parabolic: the defining coweight must be dominant");
  in_delta_p_.assign(d.rank(), false);
  for (int k = 0; k < d.rank(); ++k)
    if (lambda_dot_.coords[k] == 0) {
      delta_p_.push_back(k);
      in_delta_p_[k] = true;
    }
  for (int i = 0; i < d.num_positive(); ++i) {
    Int v = lambda_dot_.coords.dot(d.positive_roots()[i]);
    if (v < 0) throw InconsistencyError("dominant coweight negative on a positive root");
    (v == 0 ? levi_pos_ : non_levi_pos_).push_back(i);
  }
  w0_ = longest_element(d);
  wp_ = longest_element(d, delta_p_);
  w0wp_ = multiply(d, w0_, wp_);
}

bool ParabolicDatum::is_minimal_rep(const WeylElement& w) const {
  for (int k : delta_p_) {
    bool pos = false;
    for (int i = 0; i < datum_->rank(); ++i)
      if (w.action(i, k) > 0) { pos = true; break; }
    if (!pos) return false;
  }
  return true;
}

int ParabolicDatum::codim(const WeylElement& w) const {
  if (!is_minimal_rep(w)) throw Error("codim: element is not a minimal coset representative");
  return dim_gp() - w.length;
}

const std::vector<WeylElement>& ParabolicDatum::minimal_reps() const {
  std::call_once(reps_once_, [this] {
    auto all = enumerate_weyl(*datum_);
    for (const auto& w : all)
      if (is_minimal_rep(w)) {
        rep_index_.emplace(w, int(reps_.size()));
        reps_.push_back(w);
      }
    if (reps_.empty() || reps_.front().length != 0 ||
        all.size() % reps_.size() != 0)
      throw InconsistencyError("minimal representative filter is broken");
  });
  return reps_;
}

int ParabolicDatum::rep_index(const WeylElement& w) const {
  minimal_reps();
  auto it = rep_index_.find(w);
  return it == rep_index_.end() ? -1 : it->second;
}

ParabolicPtr make_parabolic(RootDatumPtr datum, Coweight lambda_dot) {
  return std::make_shared<const ParabolicDatum>(std::move(datum), std::move(lambda_dot));
}

ParabolicPtr make_parabolic_from_complement(RootDatumPtr datum,
                                            const std::vector<int>& not_in_delta_p) {
  IntVec c = IntVec::Zero(datum->rank());
  for (int k : not_in_delta_p) {
    if (k < 0 || k >= datum->rank())
      throw Error("parabolic: simple-root index out of range");
    c[k] = 1;
  }
  return make_parabolic(std::move(datum), Coweight{c});
}

std::vector<WeylElement> minimal_representatives(const RootDatum& d, const ParabolicDatum& p) {
  (void)d;
  return p.minimal_reps();
}

WeylElement dual(const RootDatum& d, const ParabolicDatum& p, const WeylElement& w) {
  if (!p.is_minimal_rep(w))
    throw Error("dual: element is not a minimal coset representative");
  WeylElement v = multiply(d, multiply(d, p.w0(), w), p.wp());
  if (v.length + w.length != p.w0().length - p.wp().length)
    throw InconsistencyError("dual: length complement identity failed");
  return v;
}

std::string word_string(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) s += ' ';
    s += 's' + std::to_string(word[i] + 1);
  }
  return s;
}

}  // namespace bk
