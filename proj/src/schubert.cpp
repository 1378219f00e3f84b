#include "bk/schubert.hpp"

#include "bk/cache_io.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace bk {

void CohomologyClass::add(int index, Int c) {
  if (c == 0) return;
  auto [it, fresh] = coeffs.emplace(index, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

CohomologyClass make_class(ParabolicPtr p, std::initializer_list<std::pair<int, Int>> terms) {
  CohomologyClass c{std::move(p), {}};
  for (const auto& [i, v] : terms) c.add(i, v);
  return c;
}

CohomologyClass unit_class(const ParabolicPtr& p) {
  int i = p->rep_index(p->max_rep());
  if (i < 0) throw InconsistencyError("unit class index missing");
  return make_class(p, {{i, 1}});
}

CohomologyClass point_class(const ParabolicPtr& p) {
  int i = p->rep_index(weyl_identity(p->datum()));
  if (i < 0) throw InconsistencyError("point class index missing");
  return make_class(p, {{i, 1}});
}

CohomologyClass basis_class(const ParabolicPtr& p, int index) {
  if (index < 0 || index >= int(p->minimal_reps().size()))
    throw Error("basis index outside W^P");
  return make_class(p, {{index, 1}});
}

int basis_codim(const ParabolicDatum& p, int index) {
  return p.codim(p.minimal_reps()[index]);
}

std::optional<int> homogeneous_codim(const CohomologyClass& c) {
  std::optional<int> deg;
  for (const auto& [i, v] : c.coeffs) {
    (void)v;
    int d = basis_codim(*c.parabolic, i);
    if (!deg) deg = d;
    else if (*deg != d) return std::nullopt;
  }
  return deg;
}

int dual_index(const ParabolicDatum& p, int index) {
  const auto& reps = p.minimal_reps();
  if (index < 0 || index >= int(reps.size())) throw Error("basis index outside W^P");
  int j = p.rep_index(dual(p.datum(), p, reps[index]));
  if (j < 0) throw InconsistencyError("dual fell outside the basis");
  return j;
}

// --------------------------------------------------------------------------
// Reflection tables shared per datum.

namespace {

struct RootTables {
  std::vector<IntMat> refl;    // s_gamma acting on simple-root coordinates
  std::vector<IntVec> coroot;  // gamma^vee on the simple coroots
};

const RootTables& root_tables(const RootDatum& d) {
  static std::mutex mu;
  static std::unordered_map<std::string, std::unique_ptr<RootTables>> reg;
  std::lock_guard<std::mutex> lock(mu);
  auto key = d.series_tag();
  auto it = reg.find(key);
  if (it != reg.end()) return *it->second;
  auto t = std::make_unique<RootTables>();
  const int n = d.rank();
  for (const auto& g : d.positive_roots()) {
    IntVec cr = d.coroot_coords(g);
    IntMat m = IntMat::Identity(n, n);
    for (int j = 0; j < n; ++j) {
      // s_gamma(alpha_j) = alpha_j - <gamma^vee, alpha_j> gamma
      Int pairing = 0;
      for (int t2 = 0; t2 < n; ++t2) pairing += cr[t2] * d.cartan()(t2, j);
      for (int i = 0; i < n; ++i) m(i, j) -= pairing * g[i];
    }
    t->refl.push_back(std::move(m));
    t->coroot.push_back(std::move(cr));
  }
  const RootTables& ref = *t;
  reg.emplace(std::move(key), std::move(t));
  return ref;
}

// --------------------------------------------------------------------------
// Per-factor full flag engine.

class FactorEngine {
 public:
  explicit FactorEngine(RootDatumPtr d) : d_(std::move(d)) { build(); }

  static std::shared_ptr<FactorEngine> get(const RootDatumPtr& d) {
    static std::mutex mu;
    static std::unordered_map<std::string, std::shared_ptr<FactorEngine>> reg;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = reg[d->series_tag()];
    if (!slot) slot = std::make_shared<FactorEngine>(d);
    return slot;
  }

  const RootDatum& datum() const { return *d_; }
  const std::vector<WeylElement>& basis() const { return basis_; }
  int index_of(const WeylElement& w) const {
    auto it = index_.find(w);
    return it == index_.end() ? -1 : it->second;
  }
  int codim(int i) const { return dim_ - basis_[i].length; }

  const std::map<int, Int>& product(int u, int v) {
    std::lock_guard<std::mutex> lock(mu_);
    if (codim(u) + codim(v) > dim_) return kZero;
    if (codim(u) < codim(v)) std::swap(u, v);  // the higher-codim row is cheaper
    auto it = rows_.find(u);
    if (it == rows_.end()) {
      compute_row(u);
      it = rows_.find(u);
    }
    return it->second[v];
  }

 private:
  void build() {
    if (d_->factors().size() != 1)
      throw InconsistencyError("factor engine expects a simple datum");
    basis_ = enumerate_weyl(*d_);
    dim_ = d_->num_positive();
    by_codim_.assign(dim_ + 1, {});
    for (int i = 0; i < int(basis_.size()); ++i) {
      index_.emplace(basis_[i], i);
      by_codim_[codim(i)].push_back(i);
    }
    const auto& rt = root_tables(*d_);
    chev_.resize(basis_.size());
    for (int i = 0; i < int(basis_.size()); ++i) {
      for (int g = 0; g < d_->num_positive(); ++g) {
        WeylElement ws{basis_[i].action * rt.refl[g], 0};
        ws.length = weyl_length(*d_, ws.action);
        if (ws.length != basis_[i].length - 1) continue;
        chev_[i].emplace_back(g, index_.at(ws));
      }
    }
    build_expressions();
  }

  // Express every class of codimension c as sum_k E_k * (rational combination
  // of codimension c-1 classes); H*(G/B; Q) is generated in degree two, so
  // the solve succeeds at every level.
  void build_expressions() {
    const auto& rt = root_tables(*d_);
    const int rank = d_->rank();
    expr_.resize(basis_.size());
    for (int c = 1; c <= dim_; ++c) {
      const auto& cur = by_codim_[c];
      const auto& prev = by_codim_[c - 1];
      const int rows = int(cur.size());
      const int nm = rank * int(prev.size());
      std::unordered_map<int, int> local;
      for (int i = 0; i < rows; ++i) local.emplace(cur[i], i);
      RatMat aug(rows, nm + rows);
      for (int bo = 0; bo < int(prev.size()); ++bo) {
        const int b = prev[bo];
        for (const auto& [g, t] : chev_[b]) {
          for (int k = 0; k < rank; ++k) {
            Int cc = rt.coroot[g][k];
            if (cc == 0) continue;
            aug(local.at(t), k * int(prev.size()) + bo) += Rational(cc);
          }
        }
      }
      for (int i = 0; i < rows; ++i) aug(i, nm + i) = 1;
      auto pivots = rref(aug, nm);
      if (int(pivots.size()) != rows)
        throw InconsistencyError("degree-two generation failed at codimension " +
                                 std::to_string(c) + " on " + d_->series_tag());
      for (int vo = 0; vo < rows; ++vo) {
        auto& ex = expr_[cur[vo]];
        for (int r = 0; r < rows; ++r) {
          Rational q = aug(r, nm + vo);
          if (q == 0) continue;
          int pc = pivots[r];
          ex.push_back({pc / int(prev.size()), prev[pc % int(prev.size())], q});
        }
      }
    }
  }

  void compute_row(int u) {
    const auto& rt = root_tables(*d_);
    const int bound = dim_ - codim(u);
    std::vector<std::map<int, Int>> row(basis_.size());
    row[by_codim_[0][0]] = {{u, 1}};
    for (int c = 1; c <= bound; ++c) {
      for (int v : by_codim_[c]) {
        std::map<int, Rational> acc;
        for (const auto& term : expr_[v]) {
          for (const auto& [w, coef] : row[term.b]) {
            for (const auto& [g, t] : chev_[w]) {
              Int cc = rt.coroot[g][term.k];
              if (cc == 0) continue;
              acc[t] += term.q * Rational(coef * cc);
            }
          }
        }
        auto& out = row[v];
        for (const auto& [t, q] : acc) {
          Int val = to_int_checked(q, "structure constant");
          if (val != 0) out.emplace(t, val);
        }
      }
    }
    rows_.emplace(u, std::move(row));
  }

  RootDatumPtr d_;
  int dim_ = 0;
  std::vector<WeylElement> basis_;
  std::unordered_map<WeylElement, int, WeylElementHash> index_;
  std::vector<std::vector<int>> by_codim_;
  std::vector<std::vector<std::pair<int, int>>> chev_;
  struct ExprTerm {
    int k;
    int b;
    Rational q;
  };
  std::vector<std::vector<ExprTerm>> expr_;
  std::unordered_map<int, std::vector<std::map<int, Int>>> rows_;
  std::mutex mu_;
  static inline const std::map<int, Int> kZero{};
};

}  // namespace

// --------------------------------------------------------------------------
// Parabolic-level calculator: factor engines + Kunneth.

class SchubertCalc {
 public:
  static std::shared_ptr<SchubertCalc> get(const ParabolicPtr& p) {
    static std::mutex mu;
    static std::unordered_map<std::string, std::shared_ptr<SchubertCalc>> reg;
    std::lock_guard<std::mutex> lock(mu);
    std::string key = p->datum().series_tag() + "|";
    for (int k : p->delta_p()) key += std::to_string(k) + ",";
    if (cache_directory()) key += "|disk";
    auto& slot = reg[key];
    if (!slot) slot = std::shared_ptr<SchubertCalc>(new SchubertCalc(p));
    return slot;
  }

  int size() const { return n_; }

  const std::map<int, Int>& product(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw Error("basis index outside W^P");
    Int key = Int(std::min(u, v)) * n_ + std::max(u, v);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    if (preloaded_) return kZero;
    return memo_.emplace(key, compute(u, v)).first->second;
  }

  void materialize(bool persist) {
    for (int u = 0; u < n_; ++u)
      for (int v = u; v < n_; ++v) (void)product(u, v);
    if (persist && cache_directory() && p_->datum().factors().size() == 1) {
      namespace fs = std::filesystem;
      fs::path dir(*cache_directory());
      fs::create_directories(dir);
      store_table_file(dir / table_cache_filename(p_->datum(), p_->delta_p()), p_->datum(),
                       p_->delta_p(), collect_triples());
    }
  }

  std::vector<std::array<Int, 4>> collect_triples() {
    std::vector<std::array<Int, 4>> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u; v < n_; ++v)
        for (const auto& [w, d] : product(u, v)) out.push_back({u, v, w, d});
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  explicit SchubertCalc(const ParabolicPtr& p) : p_(p) {
    const RootDatum& d = p->datum();
    const auto& reps = p->minimal_reps();
    n_ = int(reps.size());
    nfac_ = int(d.factors().size());
    const auto& roff = d.rank_offsets();
    std::vector<int> counts;
    for (int f = 0; f < nfac_; ++f) {
      auto fd = build_root_datum(d.factors()[f].series, d.factors()[f].rank);
      const int lo = roff[f], r = fd->rank();
      IntVec slice = p->lambda_dot().coords.segment(lo, r);
      auto fp = make_parabolic(fd, Coweight{slice});
      auto eng = FactorEngine::get(fd);
      const auto& freps = fp->minimal_reps();
      std::vector<int> to_gb(freps.size());
      std::vector<int> from_gb(eng->basis().size(), -1);
      for (int i = 0; i < int(freps.size()); ++i) {
        int gi = eng->index_of(multiply(*fd, freps[i], fp->wp()));
        if (gi < 0) throw InconsistencyError("coset representative not in the factor basis");
        to_gb[i] = gi;
        from_gb[gi] = i;
      }
      counts.push_back(int(freps.size()));
      fdat_.push_back(fd);
      fpar_.push_back(std::move(fp));
      eng_.push_back(std::move(eng));
      rep_to_gb_.push_back(std::move(to_gb));
      gb_to_rep_.push_back(std::move(from_gb));
    }
    strides_.assign(nfac_, 1);
    for (int f = nfac_ - 2; f >= 0; --f) strides_[f] = strides_[f + 1] * counts[f + 1];
    tuples_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      Int key = 0;
      std::vector<int> tup(nfac_);
      for (int f = 0; f < nfac_; ++f) {
        const int lo = roff[f], r = fdat_[f]->rank();
        WeylElement sub{reps[i].action.block(lo, lo, r, r), 0};
        sub.length = weyl_length(*fdat_[f], sub.action);
        int fi = fpar_[f]->rep_index(sub);
        if (fi < 0) throw InconsistencyError("product representative does not split");
        tup[f] = fi;
        key += Int(fi) * strides_[f];
      }
      tuple_to_rep_.emplace(key, i);
      tuples_[i] = std::move(tup);
    }
    if (cache_directory() && nfac_ == 1) {
      namespace fs = std::filesystem;
      fs::path file = fs::path(*cache_directory()) /
                      table_cache_filename(p_->datum(), p_->delta_p());
      std::vector<std::array<Int, 4>> triples;
      if (load_table_file(file, p_->datum(), p_->delta_p(), triples)) {
        for (const auto& t : triples)
          memo_[t[0] * Int(n_) + t[1]].emplace(int(t[2]), t[3]);
        preloaded_ = true;
      }
    }
  }

  std::map<int, Int> compute(int u, int v) {
    // factorwise products, then the Kunneth splice
    std::vector<std::map<int, Int>> parts(nfac_);
    for (int f = 0; f < nfac_; ++f) {
      const auto& gb = eng_[f]->product(rep_to_gb_[f][tuples_[u][f]],
                                        rep_to_gb_[f][tuples_[v][f]]);
      for (const auto& [x, c] : gb) {
        int r = gb_to_rep_[f][x];
        if (r < 0)
          throw InconsistencyError("product left the image of the parabolic pullback");
        parts[f].emplace(r, c);
      }
    }
    std::vector<std::pair<Int, Int>> combos{{0, 1}};  // (tuple key, coefficient)
    for (int f = 0; f < nfac_; ++f) {
      std::vector<std::pair<Int, Int>> next;
      next.reserve(combos.size() * std::max<size_t>(parts[f].size(), 1));
      for (const auto& [key, c] : combos)
        for (const auto& [r, cf] : parts[f])
          next.emplace_back(key + Int(r) * strides_[f], c * cf);
      combos = std::move(next);
    }
    std::map<int, Int> out;
    for (const auto& [key, c] : combos) {
      auto it = tuple_to_rep_.find(key);
      if (it == tuple_to_rep_.end())
        throw InconsistencyError("Kunneth target outside the basis");
      out[it->second] += c;
    }
    return out;
  }

  ParabolicPtr p_;
  int n_ = 0;
  int nfac_ = 0;
  std::vector<RootDatumPtr> fdat_;
  std::vector<ParabolicPtr> fpar_;
  std::vector<std::shared_ptr<FactorEngine>> eng_;
  std::vector<std::vector<int>> rep_to_gb_;
  std::vector<std::vector<int>> gb_to_rep_;
  std::vector<std::vector<int>> tuples_;
  std::vector<Int> strides_;
  std::unordered_map<Int, int> tuple_to_rep_;
  std::unordered_map<Int, std::map<int, Int>> memo_;
  bool preloaded_ = false;
  std::mutex mu_;
  static inline const std::map<int, Int> kZero{};
};

// --------------------------------------------------------------------------

std::map<int, Int> structure_constants(const ParabolicPtr& p, int u, int v) {
  return SchubertCalc::get(p)->product(u, v);
}

std::map<int, Int> structure_constants(const ParabolicPtr& p, const WeylElement& u,
                                       const WeylElement& v) {
  int iu = p->rep_index(u), iv = p->rep_index(v);
  if (iu < 0 || iv < 0) throw Error("structure_constants: element is not in W^P");
  return structure_constants(p, iu, iv);
}

CohomologyClass multiply(const CohomologyClass& a, const CohomologyClass& b) {
  if (!a.parabolic || !b.parabolic ||
      (a.parabolic != b.parabolic &&
       (a.parabolic->datum().series_tag() != b.parabolic->datum().series_tag() ||
        a.parabolic->delta_p() != b.parabolic->delta_p())))
    throw Error("multiply: classes live on different flag varieties");
  auto calc = SchubertCalc::get(a.parabolic);
  CohomologyClass out{a.parabolic, {}};
  for (const auto& [u, cu] : a.coeffs)
    for (const auto& [v, cv] : b.coeffs)
      for (const auto& [w, d] : calc->product(u, v)) out.add(w, cu * cv * d);
  return out;
}

CohomologyClass chevalley_multiply(const ParabolicPtr& p, int k, const CohomologyClass& c) {
  if (k < 0 || k >= p->datum().rank()) throw Error("chevalley_multiply: no such simple root");
  if (p->in_delta_p(k))
    throw Error("chevalley_multiply: alpha_" + std::to_string(k + 1) +
                " lies in Delta(P); G/P has no such divisor class");
  const RootDatum& d = p->datum();
  const auto& rt = root_tables(d);
  const auto& reps = p->minimal_reps();
  CohomologyClass out{c.parabolic, {}};
  for (const auto& [i, coef] : c.coeffs) {
    const WeylElement& w = reps[i];
    for (int gi : p->non_levi_positive()) {
      Int cc = rt.coroot[gi][k];
      if (cc == 0) continue;
      WeylElement ws{w.action * rt.refl[gi], 0};
      ws.length = weyl_length(d, ws.action);
      if (ws.length != w.length - 1) continue;
      if (!p->is_minimal_rep(ws)) continue;
      int t = p->rep_index(ws);
      if (t < 0) throw InconsistencyError("Chevalley target missing from the basis");
      out.add(t, coef * cc);
    }
  }
  return out;
}

std::string class_to_string(const CohomologyClass& c) {
  if (c.is_zero()) return "0";
  const auto& p = *c.parabolic;
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, v] : c.coeffs) {
    if (!first) os << " + ";
    first = false;
    if (v != 1) os << v << "*";
    os << "[L(" << word_string(reduced_word(p.datum(), p.minimal_reps()[i])) << ")]";
  }
  return os.str();
}

void materialize_table(const ParabolicPtr& p) { SchubertCalc::get(p)->materialize(true); }

std::vector<std::array<Int, 4>> all_triples(const ParabolicPtr& p) {
  auto calc = SchubertCalc::get(p);
  calc->materialize(false);
  return calc->collect_triples();
}

}  // namespace bk
