#include "mgreg/theorems.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mgreg/errors.hpp"
#include "mgreg/koszul.hpp"

namespace mgreg {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Skipped:
      return "SKIPPED";
  }
  return "?";
}

bool any_failed(const std::vector<CheckReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.status == CheckStatus::Fail; });
}

MonomialIdeal degree_piece_ideal(const Grading& grading, const Degree& g) {
  return MonomialIdeal(static_cast<std::size_t>(grading.num_vars()), *grading.monomials_of_degree(g));
}

int cd_upper_bound(const RingCohomology& rc, const MonomialIdeal& j) {
  if (j.is_unit()) return -1;
  if (j.radical_contains(rc.radical())) return 0;
  return std::min(j.quotient_dimension(), rc.cohomological_dimension());
}

StableSet default_truncation(const RegularityRegion& reg, const Grading& grading) {
  for (const auto& gen : reg.generators(grading))
    if (!gen.boundary) return StableSet::generated({gen.point});
  return StableSet::generated({grading.zero()});
}

namespace {

class Acc {
 public:
  Acc(std::string id, const std::string& instance) {
    r_.theorem_id = std::move(id);
    r_.instance_id = instance;
  }
  void pass() { ++r_.points_checked; }
  void check(bool ok, const Degree& where, const std::string& what) {
    if (ok)
      pass();
    else
      fail(where, what);
  }
  void fail(const Degree& where, const std::string& what) {
    ++r_.points_checked;
    if (r_.status == CheckStatus::Fail) return;
    r_.status = CheckStatus::Fail;
    r_.witness = where;
    r_.detail = what;
  }
  void inconclusive() { ++inconclusive_; }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  CheckReport skipped(const std::string& why) {
    r_.status = CheckStatus::Skipped;
    r_.detail = why;
    return r_;
  }
  CheckReport finish() {
    if (r_.status == CheckStatus::Fail) return r_;
    if (r_.points_checked == 0 && inconclusive_ > 0)
      return skipped("inconclusive: " + std::to_string(inconclusive_) + " uncertified points");
    r_.detail = notes_;
    if (inconclusive_ > 0) r_.detail += (notes_.empty() ? "" : "; ") + std::to_string(inconclusive_) + " inconclusive";
    return r_;
  }

 private:
  CheckReport r_;
  long inconclusive_ = 0;
  std::string notes_;
};

// Lookups outside the table count as possibly nonzero.
bool lc_maybe(const CohomologyTable& t, int i, const Degree& d) {
  if (i < 0 || i > t.length) return false;
  if (!t.covers(d)) return true;
  return t.dim(i, d) > 0;
}

std::string level_tag(const char* name, int v) { return std::string(name) + "=" + std::to_string(v); }

template <class F>
struct Context {
  std::string id;
  std::shared_ptr<const GradedModule<F>> m;
  const Grading& g;
  MonomialIdeal b;
  Box box;
  LocalCohomology<F> lc;
  int L = 0;
  int n = 0;
  CohomologyTable table;
  std::vector<RegularityRegion> regs;
  BettiData betti;
  std::vector<std::vector<int>> tor;
  MonomialIdeal witness;
  std::vector<Degree> distinct;
  std::map<Degree, std::optional<std::vector<long>>> ring_cache;

  Context(std::string inst, std::shared_ptr<const GradedModule<F>> mod, const MonomialIdeal& ideal, const Box& bx,
          const VerifyOptions& opts)
      : id(std::move(inst)), m(std::move(mod)), g(m->grading()), b(ideal), box(bx), lc(m, ideal, opts.lc) {
    L = lc.length();
    n = g.num_vars();
    const std::size_t k = static_cast<std::size_t>(g.rank());
    Degree down(k);
    if (opts.lower_padding) {
      down = *opts.lower_padding;
    } else {
      for (const auto& d : g.degrees()) down += d;
      Degree fsum(k);
      for (const auto& e : b.generators()) fsum += g.degree_of(e);
      down = componentwise_max(componentwise_max(down, fsum), Degree(k));
    }
    Box need = required_table_box(g, L, 0, Flavor::Weak, box);
    table = cohomology_table(lc, Box(componentwise_min(need.lo, box.lo - down), need.hi));
    betti = betti_data(*m);
    for (int l = 0; l <= L; ++l) regs.push_back(regularity_region(lc, table, l, Flavor::Weak, box, &betti));
    for (const auto& p : box.points()) tor.push_back(tor_dims(*m, p));
    witness = m->annihilator_witness();
    distinct = g.distinct_degrees();
  }

  int tor_at(int j, const Degree& p) const { return tor[box.index(p)][static_cast<std::size_t>(j)]; }

  bool ring_maybe(int i, const Degree& d) {
    if (i < 0 || i > lc.ring().length()) return false;
    auto it = ring_cache.find(d);
    if (it == ring_cache.end()) it = ring_cache.emplace(d, lc.ring().dims(d)).first;
    if (!it->second) return true;
    return (*it->second)[static_cast<std::size_t>(i)] > 0;
  }

  MonomialIdeal piece_ideal(int p) const { return degree_piece_ideal(g, distinct[static_cast<std::size_t>(p)]); }
};

// eta in the union over k of Supp H^k + shifts[j + k]
bool in_shifted_union(const CohomologyTable& t, const Degree& eta, int j, const std::vector<ShiftSet>& shifts) {
  for (int k = 0; k <= t.length && j + k < static_cast<int>(shifts.size()); ++k)
    for (const auto& s : shifts[static_cast<std::size_t>(j + k)].points)
      if (lc_maybe(t, k, eta - s)) return true;
  return false;
}

template <class F>
CheckReport check_mayer_vietoris(Context<F>& c) {
  Acc a("mayer_vietoris_support", c.id);
  for (int l = 0; l <= c.L; ++l) {
    auto bound = mayer_vietoris_bound(c.lc, l, c.box);
    for (const auto& p : c.box.points())
      if (c.table.dim(l, p) > 0) a.check(bound.contains(p), p, "H^" + std::to_string(l) + " outside the bound");
  }
  return a.finish();
}

template <class F>
CheckReport check_koszul(Context<F>& c) {
  Acc a("koszul_support", c.id);
  std::vector<Polynomial> f;
  std::vector<Degree> deltas;
  for (const auto& e : c.b.generators()) {
    f.push_back(Polynomial::monomial(e));
    deltas.push_back(c.g.degree_of(e));
  }
  std::vector<ShiftSet> shifts;
  for (std::size_t l = 0; l <= f.size(); ++l)
    shifts.push_back(shift_set_of_tuple(deltas, static_cast<std::size_t>(c.g.rank()), static_cast<int>(l)));
  for (const auto& p : c.box.points()) {
    auto h = koszul_homology_dims(*c.m, f, p);
    for (std::size_t j = 0; j < h.size(); ++j)
      if (h[j] > 0)
        a.check(in_shifted_union(c.table, p, static_cast<int>(j), shifts), p,
                "H_" + std::to_string(j) + "(f; M) outside the bound");
  }
  a.note("f = generators of B");
  return a.finish();
}

template <class F>
CheckReport check_tor_from_lc(Context<F>& c) {
  Acc a("tor_support_from_lc", c.id);
  std::vector<ShiftSet> shifts;
  for (int l = 0; l <= c.n; ++l) shifts.push_back(shift_set(c.g, l, ShiftKind::E));
  for (const auto& p : c.box.points())
    for (int j = 0; j <= c.n; ++j)
      if (c.tor_at(j, p) > 0)
        a.check(in_shifted_union(c.table, p, j, shifts), p, "Tor_" + std::to_string(j) + " outside the bound");
  return a.finish();
}

template <class F>
CheckReport check_restricted_tor(Context<F>& c) {
  Acc a("restricted_tor_support", c.id);
  const std::size_t md = c.distinct.size();
  bool any = false;
  for (std::size_t mask = 1; mask < (std::size_t{1} << md); ++mask) {
    MonomialIdeal ideal = c.witness;
    std::vector<Degree> allowed;
    for (std::size_t p = 0; p < md; ++p)
      if (mask & (std::size_t{1} << p)) {
        ideal = ideal.sum(degree_ideal(c.g, static_cast<int>(p)));
        allowed.push_back(c.distinct[p]);
      }
    if (!ideal.radical_contains(c.b)) continue;
    any = true;
    std::string tag = "E={";
    for (std::size_t p = 0; p < md; ++p)
      if (mask & (std::size_t{1} << p)) tag += (tag.size() > 3 ? "," : "") + std::to_string(p);
    tag += "}";
    a.note(tag);
    std::vector<std::vector<Degree>> restricted;
    for (int k = 0; k <= c.L; ++k) restricted.push_back(shift_set_restricted(c.g, k, allowed).points);
    for (int j = 0; j <= c.n; ++j) {
      auto ej = shift_set(c.g, j, ShiftKind::E).points;
      for (const auto& p : c.box.points()) {
        if (c.tor_at(j, p) == 0) continue;
        bool hit = false;
        for (int k = 0; k <= c.L && !hit; ++k)
          for (const auto& s : restricted[static_cast<std::size_t>(k)]) {
            for (const auto& e : ej)
              if (lc_maybe(c.table, k, p - s - e)) {
                hit = true;
                break;
              }
            if (hit) break;
          }
        a.check(hit, p, "Tor_" + std::to_string(j) + " outside the bound for " + tag);
      }
    }
  }
  if (!any) return a.skipped("hypothesis: B not in sqrt(B_E + ann M) for any E");
  return a.finish();
}

template <class F>
CheckReport check_tor_from_regularity(Context<F>& c) {
  Acc a("tor_from_regularity", c.id);
  for (int j = 0; j <= c.n; ++j) {
    auto bound = j < c.n ? tor_bound_from_reg(c.regs[0], c.g, j, TorBoundKind::Generic)
                         : tor_bound_from_reg(c.regs[0], c.g, j, TorBoundKind::Generic, -1, &c.table);
    for (const auto& p : c.box.points())
      if (c.tor_at(j, p) > 0) a.check(bound.contains(p), p, "Tor_" + std::to_string(j) + " outside the bound");
  }
  return a.finish();
}

template <class F>
CheckReport check_tor_directional(Context<F>& c) {
  Acc a("tor_from_regularity_directional", c.id);
  const int md = static_cast<int>(c.distinct.size());
  int held = 0;
  for (int p = 0; p < md; ++p) {
    if (!directional_hypothesis(c.b, c.g, p, c.witness)) continue;
    ++held;
    a.note(level_tag("direction", p));
    for (int j = 0; j <= c.n; ++j) {
      auto bound = tor_bound_from_reg(c.regs[0], c.g, j, TorBoundKind::Directional, p);
      for (const auto& q : c.box.points())
        if (c.tor_at(j, q) > 0)
          a.check(bound.contains(q), q, "Tor_" + std::to_string(j) + " outside the bound for direction " + std::to_string(p));
    }
  }
  if (held == 0) return a.skipped("hypothesis: B not in sqrt(B_i + ann M) for any i");
  if (held == md) {
    a.note("intersection");
    for (int j = 0; j <= c.n; ++j) {
      auto bound = tor_bound_from_reg(c.regs[0], c.g, j, TorBoundKind::Intersection);
      for (const auto& q : c.box.points())
        if (c.tor_at(j, q) > 0) a.check(bound.contains(q), q, "Tor_" + std::to_string(j) + " outside the intersection");
    }
  }
  return a.finish();
}

template <class F>
CheckReport check_lc_from_betti(Context<F>& c) {
  Acc a("lc_support_from_betti", c.id);
  if (!c.betti.exact) return a.skipped("Betti supports not proven complete");
  for (int l = 0; l <= c.L; ++l)
    for (const auto& p : c.box.points()) {
      if (c.table.dim(l, p) == 0) continue;
      bool hit = false;
      for (std::size_t i = 0; i < c.betti.supports.size() && !hit; ++i)
        for (const auto& gamma : c.betti.supports[i])
          if (c.ring_maybe(l + static_cast<int>(i), p - gamma)) {
            hit = true;
            break;
          }
      a.check(hit, p, "H^" + std::to_string(l) + " outside the bound");
    }
  return a.finish();
}

template <class F>
CheckReport check_reg_from_betti(Context<F>& c) {
  Acc a("regularity_from_betti", c.id);
  if (!c.g.is_standard()) return a.skipped("exact ring supports need a standard multigrading");
  if (!c.betti.exact) return a.skipped("Betti supports not proven complete");
  for (int l = 0; l <= c.L; ++l) {
    auto lower = reg_lower_bound_from_betti(c.lc.ring(), c.betti, l);
    for (const auto& p : c.box.points())
      if (lower.contains(p))
        a.check(c.regs[static_cast<std::size_t>(l)].contains(p), p, "bound point not regular at level " + std::to_string(l));
  }
  return a.finish();
}

template <class F>
CheckReport check_persistence(Context<F>& c) {
  Acc a("persistence", c.id);
  bool any = false;
  for (std::size_t p = 0; p < c.distinct.size(); ++p) {
    const Degree& gamma = c.distinct[p];
    if (!degree_piece_ideal(c.g, gamma).sum(c.witness).radical_contains(c.b)) continue;
    any = true;
    a.note(level_tag("direction", static_cast<int>(p)));
    for (int l = 1; l <= c.L; ++l)
      for (const auto& mu : c.box.points()) {
        // H^{l+i}_{mu - i gamma} = 0 for all i  =>  H^{l+i}_{mu + gamma - i gamma} = 0 for all i
        bool covered = true, ante = true, cons = true;
        Degree x = mu;
        for (int i = 0; l + i <= c.L; ++i) {
          Degree y = x + gamma;
          if (!c.table.covers(x) || !c.table.covers(y)) {
            covered = false;
            break;
          }
          ante = ante && c.table.dim(l + i, x) == 0;
          cons = cons && c.table.dim(l + i, y) == 0;
          x -= gamma;
        }
        if (!covered || !ante) continue;
        a.check(cons, mu, "vanishing does not persist at level " + std::to_string(l) + " along direction " + std::to_string(p));
      }
  }
  if (!any) return a.skipped("hypothesis: B not in sqrt((R_gamma) + ann M) for any degree gamma");
  return a.finish();
}

template <class F>
CheckReport check_weak_to_strong(Context<F>& c) {
  Acc a("weak_to_strong", c.id);
  int cd = -1;
  for (std::size_t p = 0; p < c.distinct.size(); ++p)
    cd = std::max(cd, cd_upper_bound(c.lc.ring(), c.piece_ideal(static_cast<int>(p)).sum(c.witness)));
  if (cd >= c.L) return a.skipped("hypothesis: cd bound " + std::to_string(cd) + " leaves no level");
  a.note("levels > " + std::to_string(cd));
  for (int l = std::max(cd + 1, 0); l <= c.L; ++l) {
    const auto& reg = c.regs[static_cast<std::size_t>(l)];
    for (const auto& p : c.box.points()) {
      if (!reg.is_weak(p) || !reg.is_weak_trusted(p)) continue;
      if (!reg.is_certified(p)) {
        a.inconclusive();
        continue;
      }
      a.check(reg.contains(p), p, "weakly regular but not regular at level " + std::to_string(l));
    }
  }
  return a.finish();
}

template <class F>
CheckReport check_generators(Context<F>& c) {
  Acc a("generators_beyond_regularity", c.id);
  for (std::size_t p = 0; p < c.distinct.size(); ++p)
    if (!c.piece_ideal(static_cast<int>(p)).sum(c.witness).radical_contains(c.b))
      return a.skipped("hypothesis: B not in sqrt(B_i + ann M) for every i");
  const auto& reg = c.regs[0];
  std::vector<Degree> members;
  for (const auto& p : c.box.points())
    if (reg.contains(p) && reg.is_certified(p)) members.push_back(p);
  for (const auto& eta : c.box.points()) {
    if (c.tor_at(0, eta) == 0) continue;
    bool bad = false;
    for (const auto& gamma : members) {
      Degree d = eta - gamma;
      if (d != c.g.zero() && c.g.in_monoid(d)) {
        bad = true;
        break;
      }
    }
    a.check(!bad, eta, "generator strictly above a regular degree");
  }
  return a.finish();
}

template <class F>
void truncation_suite(Context<F>& c, const VerifyOptions& opts, std::vector<CheckReport>& out) {
  StableSet S = default_truncation(c.regs[0], c.g);
  auto N = std::make_shared<TruncatedModule<F>>(c.m, S);
  auto inS = [&](const Degree& d) { return S.contains(d, c.g); };
  const std::string tag = "S=" + S.str();
  std::vector<std::vector<int>> torN;
  for (const auto& p : c.box.points()) torN.push_back(tor_dims(*N, p));
  auto tn = [&](int j, const Degree& p) { return torN[c.box.index(p)][static_cast<std::size_t>(j)]; };
  std::vector<std::vector<Degree>> E;
  for (int j = 0; j <= c.n + 1; ++j) E.push_back(shift_set(c.g, j, ShiftKind::E).points);

  {
    Acc a("truncation_tor_support", c.id);
    a.note(tag);
    for (const auto& p : c.box.points())
      for (int j = 0; j <= c.n; ++j) {
        if (tn(j, p) == 0) continue;
        bool hit = std::any_of(E[static_cast<std::size_t>(j)].begin(), E[static_cast<std::size_t>(j)].end(),
                               [&](const Degree& e) { return inS(p - e); });
        a.check(hit, p, "Tor_" + std::to_string(j) + "(N) outside E_j + S");
      }
    out.push_back(a.finish());
  }
  {
    Acc a("truncation_tor_comparison", c.id);
    a.note(tag);
    for (const auto& p : c.box.points())
      for (int j = 0; j <= c.n; ++j) {
        auto all_in = [&](int l) {
          const auto& s = E[static_cast<std::size_t>(l)];
          return std::all_of(s.begin(), s.end(), [&](const Degree& e) { return inS(p - e); });
        };
        bool surj = all_in(j);
        // for j = n the iso window also needs the surjectivity window
        bool iso = surj && all_in(j + 1);
        if (!surj) continue;
        int rank = tor_inclusion_rank(*N, j, p);
        a.check(rank == c.tor_at(j, p), p, "Tor_" + std::to_string(j) + "(N) -> Tor_" + std::to_string(j) + "(M) not onto");
        if (iso) a.check(rank == tn(j, p) && tn(j, p) == c.tor_at(j, p), p, "Tor_" + std::to_string(j) + " map not an isomorphism");
      }
    out.push_back(a.finish());
  }
  {
    Acc a("truncation_tor_from_regularity", c.id);
    a.note(tag);
    const auto& reg = c.regs[0];
    auto outside = [&](const Degree& q) { return !inS(q) || reg.maybe_outside(q, c.g); };
    for (const auto& p : c.box.points())
      for (int j = 0; j < c.n; ++j) {
        if (tn(j, p) == 0) continue;
        const auto& s = E[static_cast<std::size_t>(j + 1)];
        a.check(std::any_of(s.begin(), s.end(), [&](const Degree& e) { return outside(p - e); }), p,
                "Tor_" + std::to_string(j) + "(N) outside the bound");
      }
    for (int d = 0; d < static_cast<int>(c.distinct.size()); ++d) {
      if (!directional_hypothesis(c.b, c.g, d, c.witness)) continue;
      a.note(level_tag("direction", d));
      const Degree& mu = c.distinct[static_cast<std::size_t>(d)];
      for (const auto& p : c.box.points())
        for (int j = 0; j <= c.n; ++j) {
          if (tn(j, p) == 0) continue;
          const auto& s = E[static_cast<std::size_t>(j)];
          a.check(std::any_of(s.begin(), s.end(), [&](const Degree& e) { return outside(p - mu - e); }), p,
                  "Tor_" + std::to_string(j) + "(N) outside the bound for direction " + std::to_string(d));
        }
    }
    out.push_back(a.finish());
  }

  const char* ids[] = {"truncation_cohomology_high", "truncation_cohomology_zero", "truncation_regularity",
                       "truncation_regularity_high"};
  bool hyp = true;
  for (std::size_t p = 0; p < c.distinct.size(); ++p) hyp = hyp && c.piece_ideal(static_cast<int>(p)).contains(c.b);
  if (!hyp) {
    for (const char* id : ids) out.push_back(Acc(id, c.id).skipped("hypothesis: B not contained in every B_i"));
    return;
  }
  LocalCohomology<F> lcN(N, c.b, opts.lc);
  Box need = required_table_box(c.g, c.L, 0, Flavor::Weak, c.box);
  auto tableN = cohomology_table(lcN, need);
  const bool full_lattice = c.g.is_standard();
  {
    Acc a(ids[0], c.id);
    a.note(tag);
    for (const auto& p : c.box.points()) {
      if (!full_lattice && !inS(p)) continue;
      for (int i = 2; i <= c.L; ++i)
        a.check(tableN.dim(i, p) == c.table.dim(i, p), p, "H^" + std::to_string(i) + "(N) differs from H^" + std::to_string(i) + "(M)");
    }
    out.push_back(a.finish());
  }
  {
    Acc a(ids[1], c.id);
    a.note(tag);
    for (const auto& p : c.box.points()) {
      int dn = tableN.dim(0, p), dm = c.table.dim(0, p);
      a.check(inS(p) ? dn == dm : dn == 0, p, "H^0(N) differs from H^0(M) restricted to S");
    }
    out.push_back(a.finish());
  }
  BettiData bN;
  if (N->betti_window().exact) bN = betti_data(*N);
  std::vector<RegularityRegion> regsN;
  for (int l = 0; l <= c.L; ++l) regsN.push_back(regularity_region(lcN, tableN, l, Flavor::Weak, c.box, &bN));
  {
    Acc a(ids[2], c.id);
    a.note(tag);
    for (int l = 0; l <= c.L; ++l) {
      const auto &rn = regsN[static_cast<std::size_t>(l)], &rm = c.regs[static_cast<std::size_t>(l)];
      for (const auto& p : c.box.points()) {
        if (!inS(p)) continue;
        a.check(rn.is_weak(p) == rm.is_weak(p) && rn.contains(p) == rm.contains(p), p,
                "regions differ on S at level " + std::to_string(l));
      }
    }
    out.push_back(a.finish());
  }
  {
    Acc a(ids[3], c.id);
    if (!full_lattice) {
      out.push_back(a.skipped("hypothesis: degrees do not generate Z^k"));
    } else if (c.L < 2) {
      out.push_back(a.skipped("no level >= 2"));
    } else {
      a.note(tag);
      for (int l = 2; l <= c.L; ++l)
        for (const auto& p : c.box.points())
          a.check(regsN[static_cast<std::size_t>(l)].contains(p) == c.regs[static_cast<std::size_t>(l)].contains(p), p,
                  "regions differ at level " + std::to_string(l));
      out.push_back(a.finish());
    }
  }
}

}  // namespace

template <class F>
std::vector<CheckReport> verify_theorems(const std::string& instance_id, std::shared_ptr<const GradedModule<F>> m,
                                         const MonomialIdeal& b, const Box& box, const VerifyOptions& opts) {
  Context<F> c(instance_id, std::move(m), b, box, opts);
  std::vector<CheckReport> out;
  out.push_back(check_mayer_vietoris(c));
  out.push_back(check_koszul(c));
  out.push_back(check_tor_from_lc(c));
  out.push_back(check_restricted_tor(c));
  out.push_back(check_tor_from_regularity(c));
  out.push_back(check_tor_directional(c));
  out.push_back(check_lc_from_betti(c));
  out.push_back(check_reg_from_betti(c));
  out.push_back(check_persistence(c));
  out.push_back(check_weak_to_strong(c));
  out.push_back(check_generators(c));
  truncation_suite(c, opts, out);
  return out;
}

template std::vector<CheckReport> verify_theorems(const std::string&, std::shared_ptr<const GradedModule<PrimeField>>,
                                                  const MonomialIdeal&, const Box&, const VerifyOptions&);
template std::vector<CheckReport> verify_theorems(const std::string&, std::shared_ptr<const GradedModule<RationalField>>,
                                                  const MonomialIdeal&, const Box&, const VerifyOptions&);

}  // namespace mgreg
