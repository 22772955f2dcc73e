#include "mgreg/module.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mgreg/errors.hpp"

namespace mgreg {

namespace {

Degree sum_of_degrees(const Grading& g) {
  Degree s = g.zero();
  for (const auto& d : g.degrees()) s += d;
  return s;
}

Box hull(const std::vector<Degree>& pts, std::size_t k) {
  if (pts.empty()) return Box(Degree(k, 0), Degree(k, -1));
  Degree lo = pts.front(), hi = pts.front();
  for (const auto& p : pts) {
    lo = componentwise_min(lo, p);
    hi = componentwise_max(hi, p);
  }
  return Box(lo, hi);
}

}  // namespace

template <class F>
std::vector<std::string> GradedModule<F>::basis_labels(const Degree& g) const {
  std::vector<std::string> out;
  for (int i = 0; i < dim(g); ++i) out.push_back("b" + std::to_string(i));
  return out;
}

template <class F>
Exponent GradedModule<F>::unit(int var) const {
  Exponent e(static_cast<std::size_t>(grading_->num_vars()));
  e[static_cast<std::size_t>(var)] = 1;
  return e;
}

template <class F>
typename GradedModule<F>::Matrix GradedModule<F>::mult_map(const Degree& g, int var) const {
  return act(g, unit(var));
}

template <class F>
typename GradedModule<F>::Matrix GradedModule<F>::act_poly(const Degree& g, const Polynomial& p) const {
  auto d = p.homogeneous_degree(*grading_);
  if (!d) throw Error("act_poly needs a nonzero homogeneous polynomial");
  MatrixBuilder<F> b(field_, dim(g + *d), dim(g));
  for (const auto& [e, c] : p.terms) b.add_block(0, 0, act(g, e), field_.from_rational(c));
  return b.build();
}

// ---------------------------------------------------------------- quotient

template <class F>
MonomialQuotient<F>::MonomialQuotient(std::shared_ptr<const Grading> grading, F field, MonomialIdeal ideal)
    : GradedModule<F>(std::move(grading), std::move(field)), ideal_(std::move(ideal)) {
  if (ideal_.num_vars() != static_cast<std::size_t>(this->grading().num_vars()))
    throw SchemaError("ideal and grading have different numbers of variables");
}

template <class F>
std::shared_ptr<const typename MonomialQuotient<F>::Piece> MonomialQuotient<F>::piece(const Degree& g) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(g);
    if (it != cache_.end()) return it->second;
  }
  auto p = std::make_shared<Piece>();
  for (const auto& e : *this->grading().monomials_of_degree(g)) {
    if (ideal_.contains(e)) continue;
    p->index.emplace(e, static_cast<int>(p->basis.size()));
    p->basis.push_back(e);
  }
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(g, std::move(p)).first->second;
}

template <class F>
int MonomialQuotient<F>::dim(const Degree& g) const {
  return static_cast<int>(piece(g)->basis.size());
}

template <class F>
typename MonomialQuotient<F>::Matrix MonomialQuotient<F>::act(const Degree& g, const Exponent& e) const {
  auto src = piece(g);
  auto tgt = piece(g + this->grading().degree_of(e));
  Matrix m(static_cast<int>(tgt->basis.size()), static_cast<int>(src->basis.size()));
  for (std::size_t c = 0; c < src->basis.size(); ++c) {
    auto it = tgt->index.find(src->basis[c] + e);
    if (it != tgt->index.end()) m.columns[c].emplace_back(it->second, this->field().one());
  }
  return m;
}

template <class F>
std::vector<std::string> MonomialQuotient<F>::basis_labels(const Degree& g) const {
  std::vector<std::string> out;
  for (const auto& e : piece(g)->basis) out.push_back(this->grading().monomial_string(e));
  return out;
}

template <class F>
std::optional<std::vector<Degree>> MonomialQuotient<F>::resolution_shifts() const {
  const auto& gens = ideal_.generators();
  if (gens.size() > 16) return std::nullopt;
  std::set<Degree> shifts;
  const std::size_t m = gens.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<int> sub;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::size_t{1} << i)) sub.push_back(static_cast<int>(i));
    shifts.insert(this->grading().degree_of(ideal_.lcm_of(sub)));
  }
  return std::vector<Degree>(shifts.begin(), shifts.end());
}

template <class F>
BettiWindow MonomialQuotient<F>::betti_window() const {
  auto s = resolution_shifts();
  if (s) return {hull(*s, static_cast<std::size_t>(this->grading().rank())), true};
  Degree lcm_deg = this->grading().degree_of(ideal_.lcm_all());
  return {hull({this->grading().zero(), lcm_deg}, static_cast<std::size_t>(this->grading().rank())), true};
}

template <class F>
std::string MonomialQuotient<F>::describe() const {
  if (ideal_.is_zero()) return "R";
  return "R/" + ideal_.str(this->grading().names());
}

// --------------------------------------------------------------- presented

template <class F>
PresentedModule<F>::PresentedModule(std::shared_ptr<const Grading> grading, F field, GradedMatrix presentation)
    : GradedModule<F>(std::move(grading), std::move(field)), pres_(std::move(presentation)) {
  const auto& gr = this->grading();
  const std::size_t k = static_cast<std::size_t>(gr.rank());
  for (const auto& d : pres_.row_shifts)
    if (d.size() != k) throw SchemaError("row shift has wrong length");
  for (const auto& d : pres_.col_shifts)
    if (d.size() != k) throw SchemaError("column shift has wrong length");
  if (pres_.entries.size() != pres_.row_shifts.size()) throw SchemaError("presentation has wrong number of rows");
  for (std::size_t r = 0; r < pres_.entries.size(); ++r) {
    if (pres_.entries[r].size() != pres_.col_shifts.size())
      throw SchemaError("presentation row " + std::to_string(r) + " has wrong number of columns");
    for (std::size_t c = 0; c < pres_.col_shifts.size(); ++c) {
      const auto& p = pres_.entries[r][c];
      if (p.is_zero()) continue;
      auto d = p.homogeneous_degree(gr);
      if (!d) throw SchemaError("entry (" + std::to_string(r) + "," + std::to_string(c) + ") is not homogeneous");
      if (!(*d == pres_.col_shifts[c] - pres_.row_shifts[r]))
        throw SchemaError("entry (" + std::to_string(r) + "," + std::to_string(c) + ") has degree " + d->str() +
                          ", expected " + (pres_.col_shifts[c] - pres_.row_shifts[r]).str());
    }
  }
}

template <class F>
std::shared_ptr<PresentedModule<F>> PresentedModule<F>::quotient(std::shared_ptr<const Grading> grading, F field,
                                                                 const std::vector<Polynomial>& gens) {
  GradedMatrix m;
  m.row_shifts.push_back(grading->zero());
  m.entries.emplace_back();
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    auto d = g.homogeneous_degree(*grading);
    if (!d) throw SchemaError("generator '" + g.str(grading->names()) + "' is not homogeneous");
    m.col_shifts.push_back(*d);
    m.entries[0].push_back(g);
  }
  return std::make_shared<PresentedModule<F>>(std::move(grading), std::move(field), std::move(m));
}

template <class F>
std::vector<std::pair<int, typename F::Elem>> PresentedModule<F>::reduce(const Piece& p, std::map<int, Elem> v) const {
  const F& f = this->field();
  std::vector<std::pair<int, Elem>> out;
  while (!v.empty()) {
    auto it = v.begin();
    int i = it->first;
    Elem a = it->second;
    v.erase(it);
    if (f.is_zero(a)) continue;
    int row = p.pivot_of[static_cast<std::size_t>(i)];
    if (row < 0) {
      out.emplace_back(p.std_pos.empty() ? i : p.std_pos[static_cast<std::size_t>(i)], a);
      continue;
    }
    for (const auto& [j, b] : p.echelon[static_cast<std::size_t>(row)]) {
      if (j == i) continue;
      auto jt = v.find(j);
      Elem delta = f.neg(f.mul(a, b));
      if (jt == v.end()) {
        v.emplace(j, delta);
      } else {
        jt->second = f.add(jt->second, delta);
      }
    }
  }
  return out;
}

template <class F>
std::shared_ptr<const typename PresentedModule<F>::Piece> PresentedModule<F>::piece(const Degree& g) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(g);
    if (it != cache_.end()) return it->second;
  }
  const auto& gr = this->grading();
  const F& f = this->field();
  auto p = std::make_shared<Piece>();
  for (const auto& r : pres_.row_shifts) {
    p->row_offset.push_back(p->free_dim);
    auto m = gr.monomials_of_degree(g - r);
    std::unordered_map<Exponent, int, IntVecHash> idx;
    for (std::size_t i = 0; i < m->size(); ++i) idx.emplace((*m)[i], p->free_dim + static_cast<int>(i));
    p->free_dim += static_cast<int>(m->size());
    p->monos.push_back(m);
    p->index.push_back(std::move(idx));
  }
  p->pivot_of.assign(static_cast<std::size_t>(p->free_dim), -1);
  for (std::size_t c = 0; c < pres_.col_shifts.size(); ++c) {
    auto us = gr.monomials_of_degree(g - pres_.col_shifts[c]);
    for (const auto& u : *us) {
      std::map<int, Elem> v;
      for (std::size_t r = 0; r < pres_.row_shifts.size(); ++r)
        for (const auto& [e, coef] : pres_.entries[r][c].terms) {
          int i = p->index[r].at(u + e);
          Elem x = f.from_rational(coef);
          auto it = v.find(i);
          if (it == v.end()) v.emplace(i, x);
          else it->second = f.add(it->second, x);
        }
      auto red = reduce(*p, std::move(v));
      if (red.empty()) continue;
      Elem inv = f.inv(red.front().second);
      for (auto& [j, x] : red) x = f.mul(x, inv);
      p->pivot_of[static_cast<std::size_t>(red.front().first)] = static_cast<int>(p->echelon.size());
      p->echelon.push_back(std::move(red));
    }
  }
  p->std_pos.assign(static_cast<std::size_t>(p->free_dim), -1);
  for (int i = 0; i < p->free_dim; ++i)
    if (p->pivot_of[static_cast<std::size_t>(i)] < 0) {
      p->std_pos[static_cast<std::size_t>(i)] = static_cast<int>(p->std_basis.size());
      p->std_basis.push_back(i);
    }
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(g, std::move(p)).first->second;
}

template <class F>
int PresentedModule<F>::dim(const Degree& g) const {
  return static_cast<int>(piece(g)->std_basis.size());
}

template <class F>
int PresentedModule<F>::free_dim(const Degree& g) const {
  return piece(g)->free_dim;
}

template <class F>
int PresentedModule<F>::relation_rank(const Degree& g) const {
  return static_cast<int>(piece(g)->echelon.size());
}

template <class F>
typename PresentedModule<F>::Matrix PresentedModule<F>::act(const Degree& g, const Exponent& e) const {
  auto src = piece(g);
  auto tgt = piece(g + this->grading().degree_of(e));
  Matrix m(static_cast<int>(tgt->std_basis.size()), static_cast<int>(src->std_basis.size()));
  for (std::size_t c = 0; c < src->std_basis.size(); ++c) {
    int fi = src->std_basis[c];
    std::size_t r = 0;
    while (r + 1 < src->row_offset.size() && src->row_offset[r + 1] <= fi) ++r;
    const Exponent& u = (*src->monos[r])[static_cast<std::size_t>(fi - src->row_offset[r])];
    int ti = tgt->index[r].at(u + e);
    std::map<int, Elem> v{{ti, this->field().one()}};
    m.columns[c] = reduce(*tgt, std::move(v));
    std::sort(m.columns[c].begin(), m.columns[c].end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return m;
}

template <class F>
std::vector<std::string> PresentedModule<F>::basis_labels(const Degree& g) const {
  auto p = piece(g);
  std::vector<std::string> out;
  for (int fi : p->std_basis) {
    std::size_t r = 0;
    while (r + 1 < p->row_offset.size() && p->row_offset[r + 1] <= fi) ++r;
    std::string mono = this->grading().monomial_string((*p->monos[r])[static_cast<std::size_t>(fi - p->row_offset[r])]);
    out.push_back(pres_.row_shifts.size() == 1 ? mono : "e" + std::to_string(r + 1) + "*" + mono);
  }
  return out;
}

template <class F>
std::optional<std::vector<Degree>> PresentedModule<F>::resolution_shifts() const {
  std::size_t nonzero_cols = 0;
  for (std::size_t c = 0; c < pres_.col_shifts.size(); ++c)
    for (std::size_t r = 0; r < pres_.row_shifts.size(); ++r)
      if (!pres_.entries[r][c].is_zero()) {
        ++nonzero_cols;
        break;
      }
  if (nonzero_cols == 0) return pres_.row_shifts;
  if (pres_.row_shifts.size() == 1 && pres_.col_shifts.size() == 1)
    return std::vector<Degree>{pres_.row_shifts[0], pres_.col_shifts[0]};
  return std::nullopt;
}

template <class F>
BettiWindow PresentedModule<F>::betti_window() const {
  const std::size_t k = static_cast<std::size_t>(this->grading().rank());
  if (auto s = resolution_shifts()) return {hull(*s, k), true};
  std::vector<Degree> pts = pres_.row_shifts;
  pts.insert(pts.end(), pres_.col_shifts.begin(), pres_.col_shifts.end());
  Box b = hull(pts, k);
  b.hi += sum_of_degrees(this->grading());
  return {b, false};
}

template <class F>
MonomialIdeal PresentedModule<F>::annihilator_witness() const {
  if (witness_) return *witness_;
  const std::size_t n = static_cast<std::size_t>(this->grading().num_vars());
  if (pres_.row_shifts.size() == 1) {
    std::vector<Exponent> mons;
    for (const auto& p : pres_.entries[0])
      if (p.is_monomial()) mons.push_back(p.terms.begin()->first);
    if (!mons.empty()) return MonomialIdeal(n, mons);
  }
  return MonomialIdeal::zero(n);
}

template <class F>
std::string PresentedModule<F>::describe() const {
  std::ostringstream os;
  if (pres_.row_shifts.size() == 1 && pres_.row_shifts[0].min_entry() == 0 && pres_.row_shifts[0].max_entry() == 0) {
    os << "R/(";
    for (std::size_t c = 0; c < pres_.col_shifts.size(); ++c) {
      if (c) os << ", ";
      os << pres_.entries[0][c].str(this->grading().names());
    }
    os << ")";
    return os.str();
  }
  os << "coker " << pres_.row_shifts.size() << "x" << pres_.col_shifts.size();
  return os.str();
}

// -------------------------------------------------------------- truncation

bool StableSet::contains(const Degree& g, const Grading& grading) const {
  switch (kind) {
    case Kind::All: return true;
    case Kind::Empty: return false;
    case Kind::Generated:
      for (const auto& s : generators)
        if (grading.in_monoid(g - s)) return true;
      return false;
  }
  return false;
}

LatticeRegion StableSet::region(const Box& box, const Grading& grading) const {
  auto r = LatticeRegion::from_predicate(box, [&](const Degree& g) { return contains(g, grading); });
  if (kind == Kind::All) return LatticeRegion::from_form(box, InfiniteForm::all(box.rank()));
  if (kind == Kind::Empty) return LatticeRegion::from_form(box, InfiniteForm::none(box.rank()));
  if (grading.is_standard()) {
    InfiniteForm f(box.rank());
    for (const auto& s : generators) f = f.unite(InfiniteForm::orthant(s));
    return LatticeRegion::from_form(box, f);
  }
  return r;
}

std::string StableSet::str() const {
  switch (kind) {
    case Kind::All: return "G";
    case Kind::Empty: return "{}";
    case Kind::Generated: {
      std::string s;
      for (const auto& g : generators) s += (s.empty() ? "" : " u ") + g.str() + "+C";
      return s.empty() ? "{}" : s;
    }
  }
  return "";
}

template <class F>
TruncatedModule<F>::TruncatedModule(std::shared_ptr<const GradedModule<F>> base, StableSet set)
    : GradedModule<F>(base->grading_ptr(), base->field()), base_(std::move(base)), set_(std::move(set)) {}

template <class F>
int TruncatedModule<F>::dim(const Degree& g) const {
  return in_set(g) ? base_->dim(g) : 0;
}

template <class F>
typename TruncatedModule<F>::Matrix TruncatedModule<F>::act(const Degree& g, const Exponent& e) const {
  Degree h = g + this->grading().degree_of(e);
  if (!in_set(g)) return Matrix(dim(h), 0);
  // S + C = S, so g in S implies h in S
  return base_->act(g, e);
}

template <class F>
std::vector<std::string> TruncatedModule<F>::basis_labels(const Degree& g) const {
  return in_set(g) ? base_->basis_labels(g) : std::vector<std::string>{};
}

template <class F>
std::vector<Degree> TruncatedModule<F>::generator_degrees() const {
  if (set_.kind == StableSet::Kind::Empty) return {};
  std::vector<Degree> out;
  for (const auto& g : base_->generator_degrees())
    if (in_set(g)) out.push_back(g);
  if (set_.kind == StableSet::Kind::Generated)
    for (const auto& s : set_.generators) out.push_back(s);
  return out;
}

template <class F>
BettiWindow TruncatedModule<F>::betti_window() const {
  BettiWindow w = base_->betti_window();
  if (set_.kind == StableSet::Kind::All) return w;
  const std::size_t k = static_cast<std::size_t>(this->grading().rank());
  if (set_.kind == StableSet::Kind::Empty) return {Box(Degree(k, 0), Degree(k, -1)), true};
  Degree lo = w.box.lo, hi = w.box.hi;
  for (const auto& s : set_.generators) {
    lo = componentwise_min(lo, s);
    hi = componentwise_max(hi, s);
  }
  hi += sum_of_degrees(this->grading());
  // for Z-graded standard rings, reg(M_{>=d}) <= max(reg M, d) bounds every Tor
  bool exact = w.exact && k == 1 && this->grading().is_standard();
  return {Box(lo, hi), exact};
}

template <class F>
std::string TruncatedModule<F>::describe() const {
  return "(" + base_->describe() + ")_{" + set_.str() + "}";
}

// ------------------------------------------------------------------ shifts

template <class F>
ShiftedModule<F>::ShiftedModule(std::shared_ptr<const GradedModule<F>> base, Degree shift)
    : GradedModule<F>(base->grading_ptr(), base->field()), base_(std::move(base)), shift_(std::move(shift)) {}

template <class F>
std::vector<Degree> ShiftedModule<F>::generator_degrees() const {
  std::vector<Degree> out;
  for (const auto& g : base_->generator_degrees()) out.push_back(g - shift_);
  return out;
}

template <class F>
std::optional<std::vector<Degree>> ShiftedModule<F>::resolution_shifts() const {
  auto s = base_->resolution_shifts();
  if (!s) return s;
  for (auto& d : *s) d -= shift_;
  return s;
}

template <class F>
BettiWindow ShiftedModule<F>::betti_window() const {
  BettiWindow w = base_->betti_window();
  w.box = Box(w.box.lo - shift_, w.box.hi - shift_);
  return w;
}

template <class F>
std::string ShiftedModule<F>::describe() const {
  return "(" + base_->describe() + ")[" + shift_.str() + "]";
}

template <class F>
BettiWindow ZeroModule<F>::betti_window() const {
  const std::size_t k = static_cast<std::size_t>(this->grading().rank());
  return {Box(Degree(k, 0), Degree(k, -1)), true};
}

template <class F>
MonomialIdeal ZeroModule<F>::annihilator_witness() const {
  const std::size_t n = static_cast<std::size_t>(this->grading().num_vars());
  return MonomialIdeal(n, {Exponent(n)});
}

#define MGREG_INSTANTIATE(F)            \
  template class GradedModule<F>;       \
  template class MonomialQuotient<F>;   \
  template class PresentedModule<F>;    \
  template class TruncatedModule<F>;    \
  template class ShiftedModule<F>;      \
  template class ZeroModule<F>;

MGREG_INSTANTIATE(PrimeField)
MGREG_INSTANTIATE(RationalField)

}  // namespace mgreg
