#include "mgreg/local_cohomology.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "mgreg/errors.hpp"
#include "mgreg/koszul.hpp"

namespace mgreg {

std::string to_string(LcPath p) {
  switch (p) {
    case LcPath::P1: return "P1";
    case LcPath::P2: return "P2";
    case LcPath::P3: return "P3";
  }
  return "?";
}

std::string to_string(EntryStatus s) {
  switch (s) {
    case EntryStatus::Exact: return "exact";
    case EntryStatus::Certified: return "certified";
    case EntryStatus::Stabilized: return "stabilized";
    case EntryStatus::TMaxReached: return "tmax";
  }
  return "?";
}

namespace {

constexpr int kMaxGenerators = 20;

using Mask = std::uint32_t;

std::vector<std::vector<Mask>> subsets_by_size(int s) {
  std::vector<std::vector<Mask>> out(static_cast<std::size_t>(s + 1));
  for (Mask m = 0; m < (Mask{1} << s); ++m) out[static_cast<std::size_t>(std::popcount(m))].push_back(m);
  return out;
}

Mask support_mask(const Exponent& e) {
  Mask m = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0) m |= Mask{1} << i;
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// RingCohomology

RingCohomology::RingCohomology(std::shared_ptr<const Grading> grading, const MonomialIdeal& b)
    : grading_(std::move(grading)), radical_(b.radical()) {
  const int n = grading_->num_vars();
  const int s = length();
  if (s > kMaxGenerators) throw Error("too many generators in sqrt(B)");
  if (n > 24) throw Error("too many variables for the closed form");
  std::vector<Mask> supp(std::size_t{1} << s, 0);
  for (Mask J = 1; J < (Mask{1} << s); ++J) {
    int p = std::countr_zero(J);
    supp[J] = supp[J & (J - 1)] | support_mask(radical_.generators()[static_cast<std::size_t>(p)]);
  }
  auto by_size = subsets_by_size(s);
  // ranks over a large prime field; the complexes have entries +-1
  PrimeField f(2147483647u);
  const Mask all = support_mask(radical_.lcm_all());
  for (Mask a = 0; a < (Mask{1} << n); ++a) {
    if ((a & all) != a) continue;
    std::vector<std::vector<Mask>> basis(static_cast<std::size_t>(s + 1));
    std::vector<std::unordered_map<Mask, int>> index(static_cast<std::size_t>(s + 1));
    for (int j = 0; j <= s; ++j)
      for (Mask J : by_size[static_cast<std::size_t>(j)])
        if ((supp[J] & a) == a) {
          index[static_cast<std::size_t>(j)][J] = static_cast<int>(basis[static_cast<std::size_t>(j)].size());
          basis[static_cast<std::size_t>(j)].push_back(J);
        }
    std::vector<int> rk(static_cast<std::size_t>(s + 1), 0);
    for (int j = 0; j < s; ++j) {
      const auto& src = basis[static_cast<std::size_t>(j)];
      const auto& tgt = index[static_cast<std::size_t>(j + 1)];
      if (src.empty() || tgt.empty()) continue;
      MatrixBuilder<PrimeField> mb(f, static_cast<int>(tgt.size()), static_cast<int>(src.size()));
      for (std::size_t c = 0; c < src.size(); ++c)
        for (int p = 0; p < s; ++p) {
          Mask J = src[c];
          if (J & (Mask{1} << p)) continue;
          auto it = tgt.find(J | (Mask{1} << p));
          if (it == tgt.end()) continue;
          bool neg = std::popcount(J & ((Mask{1} << p) - 1)) % 2 == 1;
          mb.add(it->second, static_cast<int>(c), neg ? f.neg(1) : 1);
        }
      rk[static_cast<std::size_t>(j)] = static_cast<int>(rank(f, mb.build()));
    }
    std::vector<int> nn(static_cast<std::size_t>(s + 1), 0);
    bool any = false;
    for (int j = 0; j <= s; ++j) {
      int v = static_cast<int>(basis[static_cast<std::size_t>(j)].size()) - rk[static_cast<std::size_t>(j)] -
              (j > 0 ? rk[static_cast<std::size_t>(j - 1)] : 0);
      nn[static_cast<std::size_t>(j)] = v;
      any = any || v != 0;
    }
    if (!any) continue;
    Exponent ae(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ae[static_cast<std::size_t>(i)] = (a >> i) & 1;
    n_.emplace(ae, nn);
  }
}

std::optional<std::vector<Exponent>> RingCohomology::lifts(const Exponent& a, const Degree& d) const {
  const Grading& g = *grading_;
  const std::size_t n = static_cast<std::size_t>(g.num_vars());
  const std::size_t k = static_cast<std::size_t>(g.rank());
  if (g.is_standard()) {
    auto blocks = g.blocks();
    bool mixed = false;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      long in = 0;
      for (int v : blocks[j]) in += a[static_cast<std::size_t>(v)];
      long size = static_cast<long>(blocks[j].size());
      if (in == size && d[j] > -size) return std::vector<Exponent>{};
      if (in == 0 && d[j] < 0) return std::vector<Exponent>{};
      if (in != 0 && in != size) mixed = true;
    }
    if (mixed) return std::nullopt;
  }
  // g_c = y_c for c outside a, g_c = -1 - y_c inside, y >= 0
  std::vector<Degree> cols(n);
  Degree target = d;
  for (std::size_t c = 0; c < n; ++c) {
    cols[c] = a[c] ? -g.degree(static_cast<int>(c)) : g.degree(static_cast<int>(c));
    if (a[c]) target += g.degree(static_cast<int>(c));
  }
  auto phi = find_positivity_functional(cols, k);
  if (!phi) return std::nullopt;
  std::vector<Exponent> out;
  for (auto& y : nonneg_solutions(cols, target, integer_weights(*phi))) {
    Exponent e(n);
    for (std::size_t c = 0; c < n; ++c) e[c] = a[c] ? -1 - y[c] : y[c];
    out.push_back(e);
  }
  return out;
}

std::optional<std::vector<long>> RingCohomology::dims(const Degree& d) const {
  std::vector<long> out(static_cast<std::size_t>(length() + 1), 0);
  for (const auto& [a, nn] : n_) {
    auto l = lifts(a, d);
    if (!l) return std::nullopt;
    for (std::size_t i = 0; i < nn.size(); ++i) out[i] += static_cast<long>(nn[i]) * static_cast<long>(l->size());
  }
  return out;
}

std::optional<int> RingCohomology::stage_floor(const Degree& d) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = floor_cache_.find(d);
    if (it != floor_cache_.end()) return it->second;
  }
  std::optional<int> t = 1;
  for (const auto& [a, nn] : n_) {
    auto l = lifts(a, d);
    if (!l) {
      t = std::nullopt;
      break;
    }
    for (const auto& e : *l) t = std::max<int>(*t, static_cast<int>(-e.min_entry()));
  }
  std::lock_guard<std::mutex> lock(mu_);
  floor_cache_.emplace(d, t);
  return t;
}

std::optional<InfiniteForm> RingCohomology::support_form(int i) const {
  const Grading& g = *grading_;
  if (!g.is_standard()) return std::nullopt;
  auto blocks = g.blocks();
  const std::size_t k = static_cast<std::size_t>(g.rank());
  InfiniteForm form(k);
  for (const auto& [a, nn] : n_) {
    if (i < 0 || i >= static_cast<int>(nn.size()) || nn[static_cast<std::size_t>(i)] == 0) continue;
    IntervalProduct p{std::vector<Interval>(k)};
    for (std::size_t j = 0; j < k; ++j) {
      long in = 0;
      for (int v : blocks[j]) in += a[static_cast<std::size_t>(v)];
      long size = static_cast<long>(blocks[j].size());
      if (in == size) p.factors[j].hi = -size;
      else if (in == 0) p.factors[j].lo = 0;
    }
    form = form.unite(InfiniteForm::single(p));
  }
  return form;
}

int RingCohomology::cohomological_dimension() const {
  int cd = -1;
  for (const auto& [a, nn] : n_)
    for (std::size_t i = 0; i < nn.size(); ++i)
      if (nn[i] != 0) cd = std::max(cd, static_cast<int>(i));
  return cd;
}

// ---------------------------------------------------------------------------
// Stage complexes

namespace {

template <class F>
struct StageComplex {
  std::vector<std::vector<Mask>> subsets;
  std::vector<std::vector<int>> offsets;
  std::vector<int> dims;
  std::vector<SparseMatrix<F>> d;  // d[j] : C^j -> C^{j+1}
  std::vector<int> ranks;
};

struct StageShape {
  std::vector<Exponent> e;  // e_J per mask
  std::vector<Degree> deg;  // deg e_J
  std::vector<std::vector<Mask>> by_size;
};

StageShape make_shape(const Grading& grading, const std::vector<Exponent>& gens, bool use_lcm) {
  const int s = static_cast<int>(gens.size());
  if (s > kMaxGenerators) throw Error("too many generators for the stage complex");
  StageShape sh;
  const std::size_t n = static_cast<std::size_t>(grading.num_vars());
  sh.e.assign(std::size_t{1} << s, Exponent(n));
  for (Mask J = 1; J < (Mask{1} << s); ++J) {
    int p = std::countr_zero(J);
    const Exponent& prev = sh.e[J & (J - 1)];
    const Exponent& gp = gens[static_cast<std::size_t>(p)];
    sh.e[J] = use_lcm ? componentwise_max(prev, gp) : prev + gp;
  }
  sh.deg.reserve(sh.e.size());
  for (const auto& e : sh.e) sh.deg.push_back(grading.degree_of(e));
  sh.by_size = subsets_by_size(s);
  return sh;
}

template <class F>
StageComplex<F> build_stage(const GradedModule<F>& m, const StageShape& sh, const Degree& d, int t) {
  const F& f = m.field();
  const int s = static_cast<int>(sh.by_size.size()) - 1;
  StageComplex<F> c;
  c.subsets = sh.by_size;
  c.offsets.resize(static_cast<std::size_t>(s + 1));
  c.dims.assign(static_cast<std::size_t>(s + 1), 0);
  std::vector<int> piece(sh.e.size(), 0);
  std::vector<int> where(sh.e.size(), 0);
  for (int j = 0; j <= s; ++j) {
    int off = 0;
    for (std::size_t q = 0; q < c.subsets[static_cast<std::size_t>(j)].size(); ++q) {
      Mask J = c.subsets[static_cast<std::size_t>(j)][q];
      piece[J] = m.dim(d + t * sh.deg[J]);
      where[J] = off;
      c.offsets[static_cast<std::size_t>(j)].push_back(off);
      off += piece[J];
    }
    c.dims[static_cast<std::size_t>(j)] = off;
  }
  c.d.resize(static_cast<std::size_t>(s));
  c.ranks.assign(static_cast<std::size_t>(s), 0);
  for (int j = 0; j < s; ++j) {
    MatrixBuilder<F> mb(f, c.dims[static_cast<std::size_t>(j + 1)], c.dims[static_cast<std::size_t>(j)]);
    if (c.dims[static_cast<std::size_t>(j)] > 0 && c.dims[static_cast<std::size_t>(j + 1)] > 0) {
      for (Mask J : c.subsets[static_cast<std::size_t>(j)]) {
        if (piece[J] == 0) continue;
        for (int p = 0; p < s; ++p) {
          if (J & (Mask{1} << p)) continue;
          Mask K = J | (Mask{1} << p);
          if (piece[K] == 0) continue;
          auto block = m.act(d + t * sh.deg[J], t * (sh.e[K] - sh.e[J]));
          bool neg = std::popcount(J & ((Mask{1} << p) - 1)) % 2 == 1;
          mb.add_block(where[K], where[J], block, neg ? f.neg(f.one()) : f.one());
        }
      }
    }
    c.d[static_cast<std::size_t>(j)] = mb.build();
    c.ranks[static_cast<std::size_t>(j)] = static_cast<int>(rank(f, c.d[static_cast<std::size_t>(j)]));
  }
  return c;
}

template <class F>
std::vector<int> stage_dims(const StageComplex<F>& c) {
  const std::size_t s = c.dims.size();
  std::vector<int> h(s, 0);
  for (std::size_t j = 0; j < s; ++j)
    h[j] = c.dims[j] - (j < c.ranks.size() ? c.ranks[j] : 0) - (j > 0 ? c.ranks[j - 1] : 0);
  return h;
}

/// Ranks of H^j(stage t) -> H^j(stage t + w).
template <class F>
std::vector<int> transition_ranks(const GradedModule<F>& m, const StageShape& sh, const Degree& d, int t, int w,
                                  const StageComplex<F>& a, const StageComplex<F>& b) {
  const F& f = m.field();
  const std::size_t s = a.dims.size();
  std::vector<int> out(s, 0);
  for (std::size_t j = 0; j < s; ++j) {
    if (a.dims[j] == 0 || b.dims[j] == 0) continue;
    MatrixBuilder<F> mb(f, b.dims[j], a.dims[j]);
    for (std::size_t q = 0; q < a.subsets[j].size(); ++q) {
      Mask J = a.subsets[j][q];
      int src = (q + 1 < a.subsets[j].size() ? a.offsets[j][q + 1] : a.dims[j]) - a.offsets[j][q];
      int tgt = (q + 1 < b.subsets[j].size() ? b.offsets[j][q + 1] : b.dims[j]) - b.offsets[j][q];
      if (src == 0 || tgt == 0) continue;
      mb.add_block(b.offsets[j][q], a.offsets[j][q], m.act(d + t * sh.deg[J], w * sh.e[J]), f.one());
    }
    auto phi = mb.build();
    SparseMatrix<F> cycles = j < a.d.size() ? kernel_basis(f, a.d[j]) : identity_matrix(f, a.dims[j]);
    SparseMatrix<F> bounds = j > 0 ? b.d[j - 1] : SparseMatrix<F>(b.dims[j], 0);
    out[j] = static_cast<int>(induced_rank(f, phi, cycles, bounds));
  }
  return out;
}

}  // namespace

template <class F>
StageResult<F> stage_cohomology(const GradedModule<F>& m, const std::vector<Exponent>& gens, bool use_lcm,
                                const Degree& d, int t, int transition_step) {
  auto sh = make_shape(m.grading(), gens, use_lcm);
  auto a = build_stage(m, sh, d, t);
  StageResult<F> r;
  r.dims = stage_dims(a);
  if (transition_step > 0) {
    auto b = build_stage(m, sh, d, t + transition_step);
    r.transition_ranks = transition_ranks(m, sh, d, t, transition_step, a, b);
  }
  return r;
}

// ---------------------------------------------------------------------------
// LocalCohomology

template <class F>
LocalCohomology<F>::LocalCohomology(std::shared_ptr<const GradedModule<F>> module, MonomialIdeal b, LcOptions options)
    : module_(std::move(module)), b_(std::move(b)), opts_(options) {
  if (opts_.t_max < 1) throw SchemaError("t_max must be positive");
  if (opts_.window < 1) throw SchemaError("window must be positive");
  if (b_.num_vars() != static_cast<std::size_t>(module_->grading().num_vars()))
    throw SchemaError("ideal lives in a different ring");
  ring_ = std::make_shared<RingCohomology>(module_->grading_ptr(), b_);
  gens_ = opts_.path == LcPath::P1 ? b_.generators() : ring_->radical().generators();
  if (opts_.path == LcPath::P3) {
    if (!module_is_ring()) throw HypothesisFailed("the closed form applies to M = R only");
    return;
  }
  if (auto rs = module_->resolution_shifts()) {
    shifts_ = *rs;
    shifts_exact_ = true;
  } else {
    auto w = module_->betti_window();
    std::set<Degree> all;
    for (const auto& sj : betti_supports(*module_)) all.insert(sj.begin(), sj.end());
    shifts_.assign(all.begin(), all.end());
    shifts_exact_ = w.exact;
  }
}

template <class F>
int LocalCohomology<F>::length() const {
  return static_cast<int>(gens_.size());
}

template <class F>
bool LocalCohomology<F>::module_is_ring() const {
  auto* q = dynamic_cast<const MonomialQuotient<F>*>(module_.get());
  return q != nullptr && q->ideal().is_zero();
}

template <class F>
std::vector<Degree> LocalCohomology<F>::resolution_shifts(bool* exact) const {
  if (exact) *exact = shifts_exact_;
  return shifts_;
}

template <class F>
std::optional<int> LocalCohomology<F>::certified_floor(const Degree& d) const {
  if (!shifts_exact_) return std::nullopt;
  int t = 1;
  for (const auto& tau : shifts_) {
    auto f = ring_->stage_floor(d - tau);
    if (!f) return std::nullopt;
    t = std::max(t, *f);
  }
  return t;
}

template <class F>
std::vector<LcEntry> LocalCohomology<F>::entries(const Degree& d) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(d);
    if (it != cache_.end()) return it->second;
  }
  auto v = compute(d);
  std::lock_guard<std::mutex> lock(mu_);
  cache_.emplace(d, v);
  return v;
}

template <class F>
LcEntry LocalCohomology<F>::entry(int i, const Degree& d) const {
  if (i < 0 || i > length()) return LcEntry{0, EntryStatus::Exact, opts_.path, 0};
  return entries(d)[static_cast<std::size_t>(i)];
}

template <class F>
std::vector<LcEntry> LocalCohomology<F>::compute(const Degree& d) const {
  const std::size_t L = static_cast<std::size_t>(length() + 1);
  std::vector<LcEntry> out(L);
  for (auto& e : out) e.path = opts_.path;
  if (opts_.path == LcPath::P3) {
    auto dims = ring_->dims(d);
    if (!dims) throw Error("H_B(R) has an infinite-dimensional piece in degree " + d.str());
    for (std::size_t i = 0; i < L; ++i) {
      out[i].dim = static_cast<int>((*dims)[i]);
      out[i].status = EntryStatus::Exact;
    }
    return out;
  }
  const bool use_lcm = opts_.path == LcPath::P2;
  auto sh = make_shape(module_->grading(), gens_, use_lcm);
  // lowest stage at which the Ext comparison holds for the known shifts
  std::optional<int> floor = 1;
  for (const auto& tau : shifts_) {
    auto f = ring_->stage_floor(d - tau);
    if (!f) {
      floor = std::nullopt;
      break;
    }
    floor = std::max(*floor, *f);
  }
  if (use_lcm && shifts_exact_ && floor && *floor <= opts_.t_max) {
    auto h = stage_dims(build_stage(*module_, sh, d, *floor));
    for (std::size_t i = 0; i < L; ++i) {
      out[i].dim = h[i];
      out[i].status = EntryStatus::Certified;
      out[i].t_stab = *floor;
    }
    return out;
  }
  int t = std::min(floor.value_or(1), opts_.t_max);
  struct Obs {
    std::vector<int> dims, ranks;
  };
  std::vector<Obs> hist;
  auto cur = build_stage(*module_, sh, d, t);
  for (; t <= opts_.t_max; ++t) {
    auto next = build_stage(*module_, sh, d, t + 1);
    hist.push_back({stage_dims(cur), transition_ranks(*module_, sh, d, t, 1, cur, next)});
    cur = std::move(next);
    const std::size_t w = static_cast<std::size_t>(opts_.window);
    if (hist.size() >= w) {
      bool stable = true;
      for (std::size_t q = hist.size() - w; q + 1 < hist.size(); ++q)
        stable = stable && hist[q].dims == hist.back().dims && hist[q].ranks == hist.back().ranks;
      if (stable) {
        for (std::size_t i = 0; i < L; ++i) {
          out[i].dim = hist.back().ranks[i];
          out[i].status = EntryStatus::Stabilized;
          out[i].t_stab = t - opts_.window + 1;
        }
        return out;
      }
    }
  }
  for (std::size_t i = 0; i < L; ++i) {
    out[i].dim = hist.back().ranks[i];
    out[i].status = EntryStatus::TMaxReached;
    out[i].t_stab = opts_.t_max;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tables

const LcEntry& CohomologyTable::at(int i, const Degree& d) const {
  static const LcEntry zero{};
  if (!box.contains(d)) throw InsufficientTable("degree " + d.str() + " outside " + box.str());
  if (i < 0 || i > length) return zero;
  return cells[box.index(d)][static_cast<std::size_t>(i)];
}

int CohomologyTable::dim(int i, const Degree& d) const { return at(i, d).dim; }

LatticeRegion CohomologyTable::support(int i) const {
  return LatticeRegion::from_predicate(box, [&](const Degree& d) { return dim(i, d) > 0; });
}

bool CohomologyTable::all_trusted() const {
  for (const auto& c : cells)
    for (const auto& e : c)
      if (!e.trusted()) return false;
  return true;
}

bool CohomologyTable::any_status(EntryStatus s) const {
  for (const auto& c : cells)
    for (const auto& e : c)
      if (e.status == s) return true;
  return false;
}

std::pair<int, int> CohomologyTable::cd_bracket() const {
  int lo = -1;
  for (const auto& c : cells)
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i].dim > 0) lo = std::max(lo, static_cast<int>(i));
  return {lo, length};
}

template <class F>
CohomologyTable cohomology_table(const LocalCohomology<F>& lc, const Box& box) {
  CohomologyTable t;
  t.box = box;
  t.length = lc.length();
  t.path = lc.options().path;
  t.cells.reserve(box.size());
  for (const auto& d : box.points()) t.cells.push_back(lc.entries(d));
  return t;
}

template <class F>
LatticeRegion mayer_vietoris_bound(const LocalCohomology<F>& lc, int l, const Box& box) {
  const std::size_t n = lc.ideal().num_vars();
  auto primes = lc.ideal().radical().minimal_primes();
  LatticeRegion out(box);
  if (primes.size() > 16) throw Error("too many minimal primes for the Mayer-Vietoris bound");
  LcOptions opts = lc.options();
  if (opts.path != LcPath::P3 || !lc.module_is_ring()) opts.path = LcPath::P2;
  std::map<std::set<int>, std::set<int>> wanted;  // union of primes -> cohomological indices
  for (Mask S = 1; S < (Mask{1} << primes.size()); ++S) {
    std::set<int> vars;
    for (std::size_t q = 0; q < primes.size(); ++q)
      if (S & (Mask{1} << q)) vars.insert(primes[q].begin(), primes[q].end());
    wanted[vars].insert(l + std::popcount(S) - 1);
  }
  for (const auto& [vars, idx] : wanted) {
    LocalCohomology<F> sub(lc.module_ptr(), MonomialIdeal::coordinate(n, std::vector<int>(vars.begin(), vars.end())),
                           opts);
    for (const auto& d : box.points()) {
      if (out.contains(d)) continue;
      auto e = sub.entries(d);
      for (int i : idx)
        if (i >= 0 && i < static_cast<int>(e.size()) && e[static_cast<std::size_t>(i)].dim > 0) out.set(d, true);
    }
  }
  return out;
}

#define MGREG_INSTANTIATE(F)                                                                                      \
  template struct StageResult<F>;                                                                                \
  template StageResult<F> stage_cohomology(const GradedModule<F>&, const std::vector<Exponent>&, bool,          \
                                           const Degree&, int, int);                                             \
  template class LocalCohomology<F>;                                                                             \
  template CohomologyTable cohomology_table(const LocalCohomology<F>&, const Box&);                              \
  template LatticeRegion mayer_vietoris_bound(const LocalCohomology<F>&, int, const Box&);

MGREG_INSTANTIATE(PrimeField)
MGREG_INSTANTIATE(RationalField)

}  // namespace mgreg
