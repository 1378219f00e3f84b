#include "bk/root_datum.hpp"

#include <algorithm>
#include <deque>

#include <nlohmann/json.hpp>

namespace bk {

Series series_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return Series::A;
    case 'B': case 'b': return Series::B;
    case 'C': case 'c': return Series::C;
    case 'D': case 'd': return Series::D;
    default: throw Error(std::string("unknown series '") + c + "' (expected A, B, C or D)");
  }
}

char series_to_char(Series s) { return static_cast<char>(s); }

namespace {

IntMat cartan_matrix(Series s, int n) {
  IntMat c = IntMat::Zero(n, n);
  for (int i = 0; i < n; ++i) c(i, i) = 2;
  for (int i = 0; i + 1 < n; ++i) { c(i, i + 1) = -1; c(i + 1, i) = -1; }
  switch (s) {
    case Series::A:
      break;
    case Series::B:  // alpha_n short: <alpha_n^vee, alpha_{n-1}> = -2
      c(n - 1, n - 2) = -2;
      break;
    case Series::C:  // alpha_n long: <alpha_{n-1}^vee, alpha_n> = -2
      c(n - 2, n - 1) = -2;
      break;
    case Series::D:
      c(n - 2, n - 1) = 0;
      c(n - 1, n - 2) = 0;
      c(n - 3, n - 1) = -1;
      c(n - 1, n - 3) = -1;
      break;
  }
  return c;
}

// 2*(alpha_k, alpha_k): normalization (beta,beta) = 2 for the long simply
// laced roots; B-type short roots get 1, C-type long roots 4.
IntVec simple_len2x2(Series s, int n) {
  IntVec d = IntVec::Constant(n, 4);
  if (s == Series::B) d[n - 1] = 2;
  if (s == Series::C) d[n - 1] = 8;
  return d;
}

int expected_positive_count(Series s, int n) {
  switch (s) {
    case Series::A: return n * (n + 1) / 2;
    case Series::B:
    case Series::C: return n * n;
    case Series::D: return n * (n - 1);
  }
  return -1;
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt weyl_order_of(Series s, int n) {
  switch (s) {
    case Series::A: return factorial(n + 1);
    case Series::B:
    case Series::C: return (BigInt(1) << n) * factorial(n);
    case Series::D: return (BigInt(1) << (n - 1)) * factorial(n);
  }
  return 0;
}

// epsilon-coordinates of the simple roots (rows), standard realizations.
IntMat eps_model(Series s, int n) {
  const int dim = (s == Series::A) ? n + 1 : n;
  IntMat e = IntMat::Zero(n, dim);
  const int chain = (s == Series::A) ? n : n - 1;  // alpha_i = eps_i - eps_{i+1}
  for (int i = 0; i < chain; ++i) {
    e(i, i) = 1;
    e(i, i + 1) = -1;
  }
  switch (s) {
    case Series::A:
      break;
    case Series::B:
      e(n - 1, n - 1) = 1;  // alpha_n = eps_n
      break;
    case Series::C:
      e(n - 1, n - 1) = 2;  // alpha_n = 2 eps_n
      break;
    case Series::D:
      e(n - 1, n - 2) = 1;  // alpha_n = eps_{n-1} + eps_n
      e(n - 1, n - 1) = 1;
      break;
  }
  return e;
}

}  // namespace

void RootDatum::finish() {
  // Closure of the simple roots under all simple reflections, keeping the
  // positive ones.
  positive_roots_.clear();
  for (int k = 0; k < rank_; ++k) {
    IntVec v = IntVec::Zero(rank_);
    v[k] = 1;
    positive_roots_.push_back(v);
    pos_index_.emplace(v, k);
  }
  std::deque<IntVec> work(positive_roots_.begin(), positive_roots_.end());
  auto positive = [](const IntVec& v) {
    bool has_pos = false;
    for (int i = 0; i < v.size(); ++i) {
      if (v[i] < 0) return false;
      if (v[i] > 0) has_pos = true;
    }
    return has_pos;
  };
  while (!work.empty()) {
    IntVec b = work.front();
    work.pop_front();
    for (int k = 0; k < rank_; ++k) {
      IntVec c = reflect_root(*this, k, b);
      if (positive(c) && !pos_index_.count(c)) {
        pos_index_.emplace(c, int(positive_roots_.size()));
        positive_roots_.push_back(c);
        work.push_back(c);
      }
    }
  }
  int expected = 0;
  for (const auto& f : factors_) expected += expected_positive_count(f.series, f.rank);
  if (int(positive_roots_.size()) != expected)
    throw InconsistencyError("positive root closure produced " +
                             std::to_string(positive_roots_.size()) + " roots, expected " +
                             std::to_string(expected));

  len2x2_.resize(positive_roots_.size());
  for (size_t i = 0; i < positive_roots_.size(); ++i) {
    const IntVec& b = positive_roots_[i];
    Int v = 0;  // b^T sym2 b = 2*(beta, beta)
    for (int j = 0; j < rank_; ++j)
      for (int k = 0; k < rank_; ++k) v += b[j] * sym2_(j, k) * b[k];
    if (v <= 0) throw InconsistencyError("bad root length");
    len2x2_[i] = v;
  }

  cartan_inv_ = rat_inverse(cartan_);

  weyl_order_ = 1;
  for (const auto& f : factors_) weyl_order_ *= weyl_order_of(f.series, f.rank);
}

RootDatumPtr build_root_datum(Series s, int rank) {
  const int min_rank = (s == Series::A) ? 1 : (s == Series::D ? 3 : 2);
  if (rank < min_rank)
    throw Error(std::string("series ") + series_to_char(s) + " requires rank >= " +
                std::to_string(min_rank));
  if (rank > kMaxSimpleRank)
    throw Error("rank " + std::to_string(rank) + " exceeds the supported cap " +
                std::to_string(kMaxSimpleRank));
  auto d = std::shared_ptr<RootDatum>(new RootDatum());
  d->factors_ = {SimpleFactor{s, rank}};
  d->rank_ = rank;
  d->cartan_ = cartan_matrix(s, rank);
  IntVec l2 = simple_len2x2(s, rank);
  d->sym2_ = IntMat::Zero(rank, rank);
  for (int j = 0; j < rank; ++j)
    for (int k = 0; k < rank; ++k) {
      Int v = l2[j] * d->cartan_(j, k);
      if (v % 2 != 0) throw InconsistencyError("symmetrized Cartan not integral");
      d->sym2_(j, k) = v / 2;
    }
  if (d->sym2_ != d->sym2_.transpose().eval())
    throw InconsistencyError("symmetrized Cartan is not symmetric");
  d->eps_rows_ = eps_model(s, rank);
  d->eps_offsets_ = {0, int(d->eps_rows_.cols())};
  d->rank_offsets_ = {0, rank};
  d->finish();
  return d;
}

RootDatumPtr product_datum(const RootDatumPtr& a, const RootDatumPtr& b) {
  auto d = std::shared_ptr<RootDatum>(new RootDatum());
  d->factors_ = a->factors_;
  d->factors_.insert(d->factors_.end(), b->factors_.begin(), b->factors_.end());
  d->rank_ = a->rank_ + b->rank_;
  d->cartan_ = IntMat::Zero(d->rank_, d->rank_);
  d->cartan_.topLeftCorner(a->rank_, a->rank_) = a->cartan_;
  d->cartan_.bottomRightCorner(b->rank_, b->rank_) = b->cartan_;
  d->sym2_ = IntMat::Zero(d->rank_, d->rank_);
  d->sym2_.topLeftCorner(a->rank_, a->rank_) = a->sym2_;
  d->sym2_.bottomRightCorner(b->rank_, b->rank_) = b->sym2_;
  const int ea = a->eps_dim(), eb = b->eps_dim();
  d->eps_rows_ = IntMat::Zero(d->rank_, ea + eb);
  d->eps_rows_.topLeftCorner(a->rank_, ea) = a->eps_rows_;
  d->eps_rows_.bottomRightCorner(b->rank_, eb) = b->eps_rows_;
  d->eps_offsets_ = a->eps_offsets_;
  for (size_t i = 1; i < b->eps_offsets_.size(); ++i)
    d->eps_offsets_.push_back(ea + b->eps_offsets_[i]);
  d->rank_offsets_ = a->rank_offsets_;
  for (size_t i = 1; i < b->rank_offsets_.size(); ++i)
    d->rank_offsets_.push_back(a->rank_ + b->rank_offsets_[i]);
  d->finish();
  return d;
}

int RootDatum::positive_root_index(const IntVec& coords) const {
  auto it = pos_index_.find(coords);
  return it == pos_index_.end() ? -1 : it->second;
}

bool RootDatum::is_root(const IntVec& coords) const {
  if (positive_root_index(coords) >= 0) return true;
  IntVec neg = -coords;
  return positive_root_index(neg) >= 0;
}

Int RootDatum::len2x2_of(const IntVec& coords) const {
  int idx = positive_root_index(coords);
  if (idx < 0) idx = positive_root_index((-coords).eval());
  if (idx < 0) throw Error("len2x2_of: not a root");
  return len2x2_[idx];
}

IntVec RootDatum::coroot_coords(const IntVec& root_coords) const {
  Int lb = len2x2_of(root_coords);
  IntVec out(rank_);
  for (int j = 0; j < rank_; ++j) {
    // len2x2 of alpha_j is sym2_(j,j)
    Int num = root_coords[j] * sym2_(j, j);
    if (num % lb != 0) throw InconsistencyError("coroot coordinates not integral");
    out[j] = num / lb;
  }
  return out;
}

std::string RootDatum::series_tag() const {
  std::string tag;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) tag += 'x';
    tag += series_to_char(factors_[i].series);
    tag += std::to_string(factors_[i].rank);
  }
  return tag;
}

IntVec reflect_root(const RootDatum& d, int k, const IntVec& b) {
  Int v = 0;
  for (int j = 0; j < d.rank(); ++j) v += d.cartan()(k, j) * b[j];
  IntVec out = b;
  out[k] -= v;
  return out;
}

IntVec reflect_weight(const RootDatum& d, int k, const IntVec& w) {
  IntVec out = w;
  for (int j = 0; j < d.rank(); ++j) out[j] -= w[k] * d.cartan()(j, k);
  return out;
}

IntVec reflect_coweight(const RootDatum& d, int k, const IntVec& c) {
  IntVec out = c;
  for (int j = 0; j < d.rank(); ++j) out[j] -= c[k] * d.cartan()(k, j);
  return out;
}

namespace {
void check_rank(const RootDatum& d, const IntVec& v, const char* what) {
  if (v.size() != d.rank())
    throw Error(std::string(what) + ": coordinate length " + std::to_string(v.size()) +
                " does not match rank " + std::to_string(d.rank()));
}
}  // namespace

Int pair(const RootDatum& d, const Coweight& cw, const Root& r) {
  check_rank(d, cw.coords, "pair");
  check_rank(d, r.coords, "pair");
  return cw.coords.dot(r.coords);
}

Rational pair(const RootDatum& d, const Coweight& cw, const Weight& w) {
  check_rank(d, cw.coords, "pair");
  check_rank(d, w.coords, "pair");
  // <c, mu> = c^T C^{-1} mu in these coordinates.
  const RatMat& ci = d.cartan_inverse();
  Rational acc = 0;
  for (int i = 0; i < d.rank(); ++i) {
    if (cw.coords[i] == 0) continue;
    Rational row = 0;
    for (int j = 0; j < d.rank(); ++j)
      if (w.coords[j] != 0) row += ci(i, j) * Rational(w.coords[j]);
    acc += Rational(cw.coords[i]) * row;
  }
  return acc;
}

Int pair_int(const RootDatum& d, const Coweight& cw, const Weight& w) {
  return to_int_checked(pair(d, cw, w), "pair_int");
}

Weight root_to_weight(const RootDatum& d, const IntVec& root_coords) {
  check_rank(d, root_coords, "root_to_weight");
  return Weight{(d.cartan() * root_coords).eval()};
}

Weight root_to_weight(const RootDatum& d, const Root& r) {
  return root_to_weight(d, r.coords);
}

Weight sum_positive_roots(const RootDatum& d, const std::vector<int>& exclude_indices) {
  std::vector<bool> skip(d.num_positive(), false);
  for (int i : exclude_indices) {
    if (i < 0 || i >= d.num_positive())
      throw Error("sum_positive_roots: exclude index out of range");
    skip[i] = true;
  }
  IntVec acc = IntVec::Zero(d.rank());
  for (int i = 0; i < d.num_positive(); ++i)
    if (!skip[i]) acc += d.positive_roots()[i];
  return root_to_weight(d, acc);
}

Weight sum_positive_roots(const RootDatum& d, const std::vector<Root>& exclude) {
  std::vector<int> idx;
  for (const auto& r : exclude) {
    int i = d.positive_root_index(r.coords);
    if (i < 0) throw Error("sum_positive_roots: excluded vector is not a positive root");
    idx.push_back(i);
  }
  return sum_positive_roots(d, idx);
}

bool is_dominant(const Coweight& cw) {
  for (int i = 0; i < cw.coords.size(); ++i)
    if (cw.coords[i] < 0) return false;
  return true;
}

bool is_dominant(const Weight& w) {
  for (int i = 0; i < w.coords.size(); ++i)
    if (w.coords[i] < 0) return false;
  return true;
}

Weight fundamental_weight(const RootDatum& d, int k) {
  IntVec v = IntVec::Zero(d.rank());
  v[k] = 1;
  return Weight{v};
}

Coweight fundamental_coweight(const RootDatum& d, int k) {
  IntVec v = IntVec::Zero(d.rank());
  v[k] = 1;
  return Coweight{v};
}

void to_json(nlohmann::json& j, const RootDatum& d) {
  j = nlohmann::json::object();
  j["series"] = d.factors().size() == 1 ? std::string(1, series_to_char(d.factors()[0].series))
                                        : d.series_tag();
  j["rank"] = d.rank();
  auto mat = nlohmann::json::array();
  for (int r = 0; r < d.rank(); ++r) {
    auto row = nlohmann::json::array();
    for (int c = 0; c < d.rank(); ++c) row.push_back(d.cartan()(r, c));
    mat.push_back(row);
  }
  j["cartan"] = mat;
  auto roots = nlohmann::json::array();
  for (const auto& b : d.positive_roots()) {
    auto row = nlohmann::json::array();
    for (int c = 0; c < b.size(); ++c) row.push_back(b[c]);
    roots.push_back(row);
  }
  j["positive_roots"] = roots;
}

}  // namespace bk
