#include "mgreg/regularity.hpp"

#include <algorithm>
#include <map>

#include "mgreg/errors.hpp"
#include "mgreg/koszul.hpp"

namespace mgreg {

std::string to_string(Flavor f) { return f == Flavor::Weak ? "weak" : "very-weak"; }

ShiftKind shift_kind(Flavor f) { return f == Flavor::Weak ? ShiftKind::F : ShiftKind::E; }

std::vector<ShiftSet> regularity_shifts(const Grading& grading, int length, Flavor flavor) {
  std::vector<ShiftSet> out;
  for (int i = 0; i <= length; ++i) out.push_back(shift_set(grading, i - 1, shift_kind(flavor)));
  return out;
}

bool weakly_regular(const CohomologyTable& table, const Grading& grading, const Degree& gamma, int level,
                    Flavor flavor, bool* trusted) {
  auto shifts = regularity_shifts(grading, table.length, flavor);
  bool tr = true;
  bool regular = true;
  for (int i = std::max(level, 0); i <= table.length && regular; ++i)
    for (const auto& s : shifts[static_cast<std::size_t>(i)].points) {
      const LcEntry& e = table.at(i, gamma - s);
      tr = tr && e.trusted();
      if (e.dim > 0) {
        regular = false;
        // one trusted witness settles the answer
        tr = e.trusted();
        break;
      }
    }
  if (trusted) *trusted = tr;
  return regular;
}

Box required_table_box(const Grading& grading, int length, int level, Flavor flavor, const Box& box) {
  auto shifts = regularity_shifts(grading, length, flavor);
  const std::size_t k = static_cast<std::size_t>(grading.rank());
  Degree smax(k), smin(k);
  bool any = false;
  for (int i = std::max(level, 0); i <= length; ++i)
    for (const auto& s : shifts[static_cast<std::size_t>(i)].points) {
      smax = any ? componentwise_max(smax, s) : s;
      smin = any ? componentwise_min(smin, s) : s;
      any = true;
    }
  if (!any) return box;
  return Box(box.lo - componentwise_max(smax, Degree(k)), box.hi - componentwise_min(smin, Degree(k)));
}

template <class F>
BettiData betti_data(const GradedModule<F>& m) {
  return {betti_supports(m), m.betti_window().exact};
}

InfiniteForm ring_irregular_form(const RingCohomology& rc, int level, Flavor flavor) {
  const Grading& g = rc.grading();
  const std::size_t k = static_cast<std::size_t>(g.rank());
  auto shifts = regularity_shifts(g, rc.length(), flavor);
  InfiniteForm bad(k);
  for (int i = std::max(level, 0); i <= rc.length(); ++i) {
    auto s = rc.support_form(i);
    if (!s) throw Error("exact ring supports need a standard multigrading");
    if (s->is_empty()) continue;
    bad = bad.unite(s->minkowski(shifts[static_cast<std::size_t>(i)].points));
  }
  return bad;
}

InfiniteForm ring_regularity_form(const RingCohomology& rc, int level, Flavor flavor) {
  return ring_irregular_form(rc, level, flavor).down_closure().complement();
}

InfiniteForm irregular_outer_bound(const RingCohomology& rc, const BettiData& betti, int level, Flavor flavor) {
  const Grading& g = rc.grading();
  const std::size_t k = static_cast<std::size_t>(g.rank());
  const int L = rc.length();
  auto shifts = regularity_shifts(g, L, flavor);
  std::vector<InfiniteForm> supp;
  for (int i = 0; i <= L; ++i) {
    auto s = rc.support_form(i);
    if (!s) throw Error("exact ring supports need a standard multigrading");
    supp.push_back(*s);
  }
  InfiniteForm out(k);
  for (int i = std::max(level, 0); i <= L; ++i) {
    InfiniteForm hm(k);  // outer bound for Supp H^i_B(M)
    for (std::size_t j = 0; j < betti.supports.size() && i + static_cast<int>(j) <= L; ++j) {
      if (betti.supports[j].empty()) continue;
      const auto& s = supp[static_cast<std::size_t>(i) + j];
      if (s.is_empty()) continue;
      hm = hm.unite(s.minkowski(betti.supports[j]));
    }
    if (!hm.is_empty()) out = out.unite(hm.minkowski(shifts[static_cast<std::size_t>(i)].points));
  }
  return out;
}

InfiniteForm reg_lower_bound_from_betti(const RingCohomology& rc, const BettiData& betti, int level) {
  const Grading& g = rc.grading();
  const std::size_t k = static_cast<std::size_t>(g.rank());
  std::map<int, InfiniteForm> cache;
  auto reg = [&](int m) -> const InfiniteForm& {
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, ring_regularity_form(rc, m, Flavor::Weak)).first;
    return it->second;
  };
  auto degrees = g.distinct_degrees();
  InfiniteForm out = InfiniteForm::all(k);
  for (std::size_t i = 0; i < betti.supports.size(); ++i) {
    const int ii = static_cast<int>(i);
    for (const auto& gamma : betti.supports[i]) {
      const int lv = std::max(level, 1);
      for (const auto& f : shift_set(g, ii, ShiftKind::F).points) out = out.intersect(reg(lv + ii).translate(gamma - f));
      if (level > 0) continue;
      if (i == 0) {
        out = out.intersect(reg(0).translate(gamma));
      } else {
        for (const auto& d : degrees)
          for (const auto& f : shift_set(g, ii - 1, ShiftKind::F).points)
            out = out.intersect(reg(ii).translate(gamma - d - f));
      }
    }
  }
  return out;
}

bool RegularityRegion::all_certified() const {
  return std::all_of(certified.begin(), certified.end(), [](char c) { return c != 0; });
}

std::size_t RegularityRegion::uncertified_count() const {
  return static_cast<std::size_t>(std::count(certified.begin(), certified.end(), 0));
}

bool RegularityRegion::maybe_outside(const Degree& g, const Grading& grading) const {
  if (form) return !form->contains(g);
  if (box.contains(g)) return !is_certified(g) || !contains(g);
  if (!grading.is_standard() || !g.dominated_by(box.hi)) return true;
  // regions are C-stable: g is outside as soon as the first box point of g + C is
  Degree q = componentwise_max(g, box.lo);
  return !is_certified(q) || !contains(q);
}

std::vector<LatticeRegion::Generator> RegularityRegion::generators(const Grading& grading) const {
  return region.minimal_generators(grading);
}

template <class F>
RegularityRegion regularity_region(const LocalCohomology<F>& lc, const CohomologyTable& table, int level,
                                   Flavor flavor, const Box& box, const BettiData* betti) {
  const Grading& g = lc.module().grading();
  const std::size_t k = static_cast<std::size_t>(g.rank());
  Box need = required_table_box(g, table.length, level, flavor, box);
  if (!(table.box.intersect(need) == need))
    throw InsufficientTable("table " + table.box.str() + " does not cover " + need.str());
  RegularityRegion r;
  r.level = level;
  r.flavor = flavor;
  r.box = box;
  const std::size_t N = box.size();
  r.weak.assign(N, 0);
  std::vector<char>& trusted = r.weak_trusted;
  trusted.assign(N, 0);
  std::vector<char> ok(N, 0), ray_trusted(N, 0);
  for (std::size_t idx = 0; idx < N; ++idx) {
    bool tr = false;
    r.weak[idx] = weakly_regular(table, g, box.point(idx), level, flavor, &tr);
    trusted[idx] = tr;
  }
  if (g.is_standard()) {
    // lexicographically decreasing order visits g + e_c before g
    for (std::size_t q = N; q-- > 0;) {
      Degree p = box.point(q);
      bool o = r.weak[q] != 0, t = trusted[q] != 0;
      for (std::size_t c = 0; c < k; ++c) {
        Degree s = p;
        s[c] += 1;
        if (!box.contains(s)) continue;
        std::size_t si = box.index(s);
        o = o && ok[si];
        t = t && ray_trusted[si];
      }
      ok[q] = o;
      ray_trusted[q] = t;
    }
  } else {
    for (std::size_t q = 0; q < N; ++q) {
      Degree p = box.point(q);
      bool o = true, t = true;
      for (std::size_t s = 0; s < N; ++s) {
        Degree d = box.point(s) - p;
        if (!g.in_monoid(d)) continue;
        o = o && r.weak[s];
        t = t && trusted[s];
      }
      ok[q] = o;
      ray_trusted[q] = t;
    }
  }

  std::optional<InfiniteForm> outer, lower;
  if (g.is_standard()) {
    BettiData own;
    if (!betti) {
      own = betti_data(lc.module());
      betti = &own;
    }
    if (betti->exact) {
      outer = irregular_outer_bound(lc.ring(), *betti, level, flavor);
      if (flavor == Flavor::Weak) lower = reg_lower_bound_from_betti(lc.ring(), *betti, level);
    }
    if (lc.module_is_ring()) r.form = ring_regularity_form(lc.ring(), level, flavor);
  }
  auto tail_ok = [&](const Degree& p) {
    if (!outer) return false;
    auto hit = InfiniteForm::orthant(p).intersect(*outer);
    for (const auto& part : hit.parts()) {
      if (part.empty()) continue;
      for (std::size_t c = 0; c < k; ++c)
        if (!part.factors[c].hi || *part.factors[c].hi > box.hi[c]) return false;
    }
    return true;
  };

  r.region = LatticeRegion(box);
  r.certified.assign(N, 0);
  for (std::size_t q = 0; q < N; ++q) {
    Degree p = box.point(q);
    r.region.set(p, ok[q] != 0);
    bool cert;
    if (ok[q]) {
      cert = (lower && lower->contains(p)) || (ray_trusted[q] && tail_ok(p));
    } else {
      cert = ray_trusted[q] != 0;
    }
    if (r.form && r.form->contains(p) != (ok[q] != 0)) cert = false;
    r.certified[q] = cert;
  }
  return r;
}

LatticeRegion tor_bound_from_reg(const RegularityRegion& reg, const Grading& grading, int j, TorBoundKind kind,
                                 int direction, const CohomologyTable* h0) {
  const int n = grading.num_vars();
  auto degrees = grading.distinct_degrees();
  auto in_comp = [&](const Degree& p) { return reg.maybe_outside(p, grading); };
  auto shifted_hit = [&](const Degree& eta, const std::vector<Degree>& shifts) {
    for (const auto& s : shifts)
      if (in_comp(eta - s)) return true;
    return false;
  };
  auto directional = [&](int p) {
    std::vector<Degree> shifts;
    for (const auto& e : shift_set(grading, j, ShiftKind::E).points) shifts.push_back(degrees[static_cast<std::size_t>(p)] + e);
    return shifts;
  };
  switch (kind) {
    case TorBoundKind::Generic: {
      if (j == n) {
        if (!h0) throw Error("the top Tor bound needs the H^0 table");
        auto en = shift_set(grading, n, ShiftKind::E).points;
        return LatticeRegion::from_predicate(reg.box, [&](const Degree& eta) {
          for (const auto& e : en) {
            Degree p = eta - e;
            if (!h0->covers(p) || h0->dim(0, p) > 0) return true;
          }
          return false;
        });
      }
      auto shifts = shift_set(grading, j + 1, ShiftKind::E).points;
      return LatticeRegion::from_predicate(reg.box, [&](const Degree& eta) { return shifted_hit(eta, shifts); });
    }
    case TorBoundKind::Directional: {
      if (direction < 0 || direction >= static_cast<int>(degrees.size())) throw Error("bad direction index");
      auto shifts = directional(direction);
      return LatticeRegion::from_predicate(reg.box, [&](const Degree& eta) { return shifted_hit(eta, shifts); });
    }
    case TorBoundKind::Intersection: {
      std::vector<std::vector<Degree>> all;
      for (int p = 0; p < static_cast<int>(degrees.size()); ++p) all.push_back(directional(p));
      return LatticeRegion::from_predicate(reg.box, [&](const Degree& eta) {
        for (const auto& s : all)
          if (!shifted_hit(eta, s)) return false;
        return true;
      });
    }
  }
  return LatticeRegion(reg.box);
}

MonomialIdeal degree_ideal(const Grading& grading, int p) {
  auto degrees = grading.distinct_degrees();
  std::vector<int> vars;
  for (int v = 0; v < grading.num_vars(); ++v)
    if (grading.degree(v) == degrees[static_cast<std::size_t>(p)]) vars.push_back(v);
  return MonomialIdeal::coordinate(static_cast<std::size_t>(grading.num_vars()), vars);
}

bool directional_hypothesis(const MonomialIdeal& b, const Grading& grading, int p, const MonomialIdeal& witness) {
  return degree_ideal(grading, p).sum(witness).radical_contains(b);
}

#define MGREG_INSTANTIATE(F)                                                                                 \
  template BettiData betti_data(const GradedModule<F>&);                                                    \
  template RegularityRegion regularity_region(const LocalCohomology<F>&, const CohomologyTable&, int, Flavor, \
                                              const Box&, const BettiData*);

MGREG_INSTANTIATE(PrimeField)
MGREG_INSTANTIATE(RationalField)

}  // namespace mgreg
