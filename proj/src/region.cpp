#include "mgreg/region.hpp"

#include <algorithm>
#include <sstream>

#include "mgreg/errors.hpp"

namespace mgreg {

bool Box::empty() const {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) return true;
  return false;
}

bool Box::contains(const Degree& g) const {
  if (g.size() != lo.size()) return false;
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (g[i] < lo[i] || g[i] > hi[i]) return false;
  return true;
}

std::size_t Box::size() const {
  if (empty()) return 0;
  std::size_t s = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) s *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
  return s;
}

std::size_t Box::index(const Degree& g) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < lo.size(); ++i)
    idx = idx * static_cast<std::size_t>(hi[i] - lo[i] + 1) + static_cast<std::size_t>(g[i] - lo[i]);
  return idx;
}

Degree Box::point(std::size_t idx) const {
  Degree g(lo.size());
  for (std::size_t i = lo.size(); i-- > 0;) {
    auto w = static_cast<std::size_t>(hi[i] - lo[i] + 1);
    g[i] = lo[i] + static_cast<long>(idx % w);
    idx /= w;
  }
  return g;
}

std::vector<Degree> Box::points() const {
  std::vector<Degree> out;
  std::size_t n = size();
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(point(i));
  return out;
}

Box Box::intersect(const Box& o) const { return Box(componentwise_max(lo, o.lo), componentwise_min(hi, o.hi)); }

std::string Box::str() const { return "[" + lo.str() + ".." + hi.str() + "]"; }

bool Interval::contains(const Interval& o) const {
  if (o.empty()) return true;
  if (lo && (!o.lo || *o.lo < *lo)) return false;
  if (hi && (!o.hi || *o.hi > *hi)) return false;
  return true;
}

Interval Interval::intersect(const Interval& o) const {
  Interval r = *this;
  if (o.lo) r.lo = r.lo ? std::max(*r.lo, *o.lo) : *o.lo;
  if (o.hi) r.hi = r.hi ? std::min(*r.hi, *o.hi) : *o.hi;
  return r;
}

bool IntervalProduct::contains(const Degree& g) const {
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (!factors[i].contains(g[i])) return false;
  return true;
}

bool IntervalProduct::empty() const {
  return std::any_of(factors.begin(), factors.end(), [](const Interval& f) { return f.empty(); });
}

bool IntervalProduct::contains(const IntervalProduct& o) const {
  if (o.empty()) return true;
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (!factors[i].contains(o.factors[i])) return false;
  return true;
}

IntervalProduct IntervalProduct::intersect(const IntervalProduct& o) const {
  IntervalProduct r = *this;
  for (std::size_t i = 0; i < factors.size(); ++i) r.factors[i] = factors[i].intersect(o.factors[i]);
  return r;
}

IntervalProduct IntervalProduct::translate(const Degree& s) const {
  IntervalProduct r = *this;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (r.factors[i].lo) *r.factors[i].lo += s[i];
    if (r.factors[i].hi) *r.factors[i].hi += s[i];
  }
  return r;
}

InfiniteForm InfiniteForm::all(std::size_t k) {
  InfiniteForm f(k);
  f.parts_.push_back(IntervalProduct{std::vector<Interval>(k)});
  return f;
}

InfiniteForm InfiniteForm::orthant(const Degree& base) {
  IntervalProduct p{std::vector<Interval>(base.size())};
  for (std::size_t i = 0; i < base.size(); ++i) p.factors[i].lo = base[i];
  return single(p);
}

InfiniteForm InfiniteForm::single(IntervalProduct p) {
  InfiniteForm f(p.factors.size());
  f.add(std::move(p));
  return f;
}

InfiniteForm InfiniteForm::point(const Degree& g) {
  IntervalProduct p{std::vector<Interval>(g.size())};
  for (std::size_t i = 0; i < g.size(); ++i) p.factors[i] = Interval{g[i], g[i]};
  return single(p);
}

void InfiniteForm::add(IntervalProduct p) {
  if (p.empty()) return;
  for (const auto& q : parts_)
    if (q.contains(p)) return;
  parts_.erase(std::remove_if(parts_.begin(), parts_.end(), [&](const IntervalProduct& q) { return p.contains(q); }),
               parts_.end());
  parts_.push_back(std::move(p));
}

bool InfiniteForm::contains(const Degree& g) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const IntervalProduct& p) { return p.contains(g); });
}

InfiniteForm InfiniteForm::unite(const InfiniteForm& o) const {
  InfiniteForm r = *this;
  for (const auto& p : o.parts_) r.add(p);
  return r;
}

InfiniteForm InfiniteForm::intersect(const InfiniteForm& o) const {
  InfiniteForm r(k_);
  for (const auto& p : parts_)
    for (const auto& q : o.parts_) r.add(p.intersect(q));
  return r;
}

InfiniteForm InfiniteForm::complement() const {
  InfiniteForm acc = all(k_);
  for (const auto& p : parts_) {
    // complement of one product, written as a disjoint union
    InfiniteForm c(k_);
    IntervalProduct prefix{std::vector<Interval>(k_)};
    for (std::size_t j = 0; j < k_; ++j) {
      const Interval& f = p.factors[j];
      if (f.lo) {
        IntervalProduct q = prefix;
        q.factors[j] = Interval{std::nullopt, *f.lo - 1};
        c.add(q);
      }
      if (f.hi) {
        IntervalProduct q = prefix;
        q.factors[j] = Interval{*f.hi + 1, std::nullopt};
        c.add(q);
      }
      prefix.factors[j] = f;
    }
    acc = acc.intersect(c);
  }
  return acc;
}

InfiniteForm InfiniteForm::translate(const Degree& s) const {
  InfiniteForm r(k_);
  for (const auto& p : parts_) r.add(p.translate(s));
  return r;
}

InfiniteForm InfiniteForm::minkowski(const std::vector<Degree>& shifts) const {
  InfiniteForm r(k_);
  for (const auto& s : shifts)
    for (const auto& p : parts_) r.add(p.translate(s));
  return r;
}

InfiniteForm InfiniteForm::down_closure() const {
  InfiniteForm r(k_);
  for (auto p : parts_) {
    for (auto& f : p.factors) f.lo.reset();
    r.add(p);
  }
  return r;
}

InfiniteForm InfiniteForm::up_closure() const {
  InfiniteForm r(k_);
  for (auto p : parts_) {
    for (auto& f : p.factors) f.hi.reset();
    r.add(p);
  }
  return r;
}

std::string InfiniteForm::str() const {
  if (parts_.empty()) return "{}";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << " u ";
    for (std::size_t j = 0; j < k_; ++j) {
      const auto& f = parts_[i].factors[j];
      if (j) os << 'x';
      os << '[' << (f.lo ? std::to_string(*f.lo) : "-inf") << ',' << (f.hi ? std::to_string(*f.hi) : "inf") << ']';
    }
  }
  return os.str();
}

LatticeRegion::LatticeRegion(Box box) : box_(box), exact_(box), bits_(box.size(), 0) {}

LatticeRegion LatticeRegion::from_predicate(const Box& box, const std::function<bool(const Degree&)>& pred) {
  LatticeRegion r(box);
  for (std::size_t i = 0; i < r.bits_.size(); ++i) r.bits_[i] = pred(box.point(i)) ? 1 : 0;
  return r;
}

LatticeRegion LatticeRegion::from_form(const Box& box, InfiniteForm form) {
  LatticeRegion r = from_predicate(box, [&](const Degree& g) { return form.contains(g); });
  r.form_ = std::move(form);
  return r;
}

bool LatticeRegion::contains(const Degree& g) const {
  if (box_.contains(g)) return bits_[box_.index(g)] != 0;
  return form_ && form_->contains(g);
}

std::optional<bool> LatticeRegion::lookup(const Degree& g) const {
  if (form_) return form_->contains(g);
  if (exact_.contains(g)) return bits_[box_.index(g)] != 0;
  return std::nullopt;
}

void LatticeRegion::set(const Degree& g, bool v) {
  bits_[box_.index(g)] = v ? 1 : 0;
  form_.reset();
}

std::size_t LatticeRegion::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::vector<Degree> LatticeRegion::points() const {
  std::vector<Degree> out;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(box_.point(i));
  return out;
}

void LatticeRegion::check_same_box(const LatticeRegion& o) const {
  if (!(box_ == o.box_)) throw BoxMismatch(box_.str() + " vs " + o.box_.str());
}

LatticeRegion LatticeRegion::unite(const LatticeRegion& o) const {
  check_same_box(o);
  LatticeRegion r = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = (bits_[i] || o.bits_[i]) ? 1 : 0;
  r.exact_ = exact_.intersect(o.exact_);
  if (form_ && o.form_) r.form_ = form_->unite(*o.form_);
  else r.form_.reset();
  return r;
}

LatticeRegion LatticeRegion::intersect(const LatticeRegion& o) const {
  check_same_box(o);
  LatticeRegion r = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = (bits_[i] && o.bits_[i]) ? 1 : 0;
  r.exact_ = exact_.intersect(o.exact_);
  if (form_ && o.form_) r.form_ = form_->intersect(*o.form_);
  else r.form_.reset();
  return r;
}

LatticeRegion LatticeRegion::complement() const {
  LatticeRegion r = *this;
  for (auto& b : r.bits_) b = b ? 0 : 1;
  if (form_) r.form_ = form_->complement();
  return r;
}

LatticeRegion LatticeRegion::translate(const Degree& s) const {
  if (form_) return from_form(box_, form_->translate(s));
  LatticeRegion r(box_);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    Degree g = box_.point(i) - s;
    r.bits_[i] = (box_.contains(g) && bits_[box_.index(g)]) ? 1 : 0;
  }
  r.exact_ = Box(exact_.lo + s, exact_.hi + s).intersect(box_);
  return r;
}

LatticeRegion LatticeRegion::minkowski(const std::vector<Degree>& shifts) const {
  if (form_) return from_form(box_, form_->minkowski(shifts));
  LatticeRegion r(box_);
  if (shifts.empty()) return r;
  Degree smax = shifts.front(), smin = shifts.front();
  for (const auto& s : shifts) {
    smax = componentwise_max(smax, s);
    smin = componentwise_min(smin, s);
  }
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    Degree g = box_.point(i);
    for (const auto& s : shifts) {
      Degree h = g - s;
      if (box_.contains(h) && bits_[box_.index(h)]) {
        r.bits_[i] = 1;
        break;
      }
    }
  }
  r.exact_ = Box(exact_.lo + smax, exact_.hi + smin).intersect(box_);
  if (r.exact_.empty()) throw InsufficientPadding("Minkowski sum leaves no exact points in " + box_.str());
  return r;
}

LatticeRegion LatticeRegion::restrict_to(const Box& b) const {
  LatticeRegion r(b);
  for (std::size_t i = 0; i < r.bits_.size(); ++i) r.bits_[i] = contains(b.point(i)) ? 1 : 0;
  r.exact_ = exact_.intersect(b);
  r.form_ = form_;
  if (form_) r.exact_ = b;
  return r;
}

std::vector<LatticeRegion::Generator> LatticeRegion::minimal_generators(const Grading& grading) const {
  if (!is_stable(grading)) throw NotStable("region is not closed under adding variable degrees");
  std::vector<Generator> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (!bits_[i]) continue;
    Degree g = box_.point(i);
    bool minimal = true, boundary = false;
    for (const auto& d : grading.degrees()) {
      Degree h = g - d;
      if (!box_.contains(h)) {
        boundary = true;
        continue;
      }
      if (bits_[box_.index(h)]) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back({g, boundary});
  }
  return out;
}

bool LatticeRegion::is_stable(const Grading& grading) const {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (!bits_[i]) continue;
    Degree g = box_.point(i);
    for (const auto& d : grading.degrees()) {
      Degree h = g + d;
      if (box_.contains(h) && !bits_[box_.index(h)]) return false;
    }
  }
  return true;
}

LatticeRegion stable_closure(const std::vector<Degree>& points, const Box& box, const Grading& grading) {
  if (grading.is_standard()) {
    InfiniteForm f(box.rank());
    for (const auto& p : points) f = f.unite(InfiniteForm::orthant(p));
    return LatticeRegion::from_form(box, f);
  }
  return LatticeRegion::from_predicate(box, [&](const Degree& g) {
    for (const auto& p : points)
      if (grading.in_monoid(g - p)) return true;
    return false;
  });
}

bool LatticeRegion::same_points(const LatticeRegion& o) const { return box_ == o.box_ && bits_ == o.bits_; }

}  // namespace mgreg
