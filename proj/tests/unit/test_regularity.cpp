#include <doctest.h>

#include "mgreg/errors.hpp"
#include "mgreg/regularity.hpp"

using namespace mgreg;

namespace {

std::shared_ptr<const Grading> bigraded(std::vector<std::string> names = {"X0", "X1", "Y0", "Y1"}) {
  return std::make_shared<const Grading>(std::vector<Degree>{{1, 0}, {1, 0}, {0, 1}, {0, 1}}, names);
}

Exponent ex(std::initializer_list<long> v) { return Exponent(v); }

MonomialIdeal irrelevant() { return MonomialIdeal::coordinate(4, {0, 1}).intersect(MonomialIdeal::coordinate(4, {2, 3})); }
MonomialIdeal maximal() { return MonomialIdeal::coordinate(4, {0, 1, 2, 3}); }

template <class F>
RegularityRegion region_for(const LocalCohomology<F>& lc, int level, Flavor flavor, const Box& box) {
  Box tb = required_table_box(lc.module().grading(), lc.length(), level, flavor, box);
  auto table = cohomology_table(lc, tb);
  return regularity_region(lc, table, level, flavor, box);
}

std::shared_ptr<MonomialQuotient<PrimeField>> example11(const PrimeField& f) {
  return std::make_shared<MonomialQuotient<PrimeField>>(bigraded(), f,
                                                        MonomialIdeal(4, {ex({1, 1, 0, 0}), ex({0, 0, 1, 1})}));
}

}  // namespace

TEST_CASE("weak regularity examples") {
  auto g = bigraded();
  PrimeField f;
  auto r = std::make_shared<MonomialQuotient<PrimeField>>(g, f, MonomialIdeal::zero(4));
  LocalCohomology<PrimeField> lc(r, irrelevant());
  auto table = cohomology_table(lc, Box::cube(2, -6, 4));
  CHECK(weakly_regular(table, *g, {0, 0}, 0, Flavor::Weak));
  CHECK(!weakly_regular(table, *g, {-1, 0}, 0, Flavor::Weak));
  CHECK_THROWS_AS(weakly_regular(table, *g, {4, 4}, 0, Flavor::Weak), InsufficientTable);
  auto z = std::make_shared<ZeroModule<PrimeField>>(g, f);
  LocalCohomology<PrimeField> lz(z, irrelevant());
  auto tz = cohomology_table(lz, Box::cube(2, -6, 4));
  CHECK(weakly_regular(tz, *g, {-2, -2}, 0, Flavor::Weak));
}

TEST_CASE("ring regularity forms") {
  auto g = bigraded();
  RingCohomology irr(g, irrelevant());
  auto reg = ring_regularity_form(irr, 0, Flavor::Weak);
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b) CHECK(reg.contains({a, b}) == (a >= 0 && b >= 0));
  // regions computed from tables match the exact forms
  PrimeField f;
  auto r = std::make_shared<MonomialQuotient<PrimeField>>(g, f, MonomialIdeal::zero(4));
  for (const auto& B : {irrelevant(), maximal()}) {
    LocalCohomology<PrimeField> lc(r, B);
    for (int level = 0; level <= 2; ++level)
      for (Flavor fl : {Flavor::Weak, Flavor::VeryWeak}) {
        auto rr = region_for(lc, level, fl, Box::cube(2, -4, 4));
        CHECK(rr.all_certified());
        auto form = ring_regularity_form(lc.ring(), level, fl);
        for (const auto& p : rr.box.points()) CHECK(rr.contains(p) == form.contains(p));
      }
  }
}

TEST_CASE("R/(X0X1, Y0Y1) regularity regions") {
  PrimeField f;
  auto m = example11(f);
  Box box(Degree{-4, -4}, Degree{6, 6});
  LocalCohomology<PrimeField> lb(m, irrelevant());
  auto rb = region_for(lb, 0, Flavor::Weak, box);
  CHECK(rb.all_certified());
  for (const auto& p : box.points()) CHECK(rb.contains(p) == (p[0] >= 1 && p[1] >= 1));
  LocalCohomology<PrimeField> lr(m, maximal());
  auto rr = region_for(lr, 0, Flavor::Weak, box);
  CHECK(rr.all_certified());
  for (const auto& p : box.points())
    CHECK(rr.contains(p) == (p[0] >= 2 || p[1] >= 2 || (p[0] >= 1 && p[1] >= 1)));
  auto gens = rb.generators(m->grading());
  REQUIRE(gens.size() == 1);
  CHECK(gens[0].point == Degree{1, 1});
}

TEST_CASE("regions are monotone in the level and in the flavor") {
  PrimeField f;
  auto m = example11(f);
  Box box = Box::cube(2, -3, 4);
  for (const auto& B : {irrelevant(), maximal()}) {
    LocalCohomology<PrimeField> lc(m, B);
    std::vector<RegularityRegion> weak;
    for (int level = 0; level <= 3; ++level) {
      weak.push_back(region_for(lc, level, Flavor::Weak, box));
      auto vw = region_for(lc, level, Flavor::VeryWeak, box);
      for (const auto& p : box.points()) {
        if (weak.back().contains(p)) CHECK(vw.contains(p));
        if (weak.back().is_weak(p)) CHECK(vw.is_weak(p));
      }
      CHECK(weak.back().region.is_stable(m->grading()));
    }
    for (std::size_t l = 0; l + 1 < weak.size(); ++l)
      for (const auto& p : box.points())
        if (weak[l].contains(p)) CHECK(weak[l + 1].contains(p));
  }
}

TEST_CASE("Betti lower bound for regularity") {
  PrimeField f;
  auto m = example11(f);
  LocalCohomology<PrimeField> lc(m, irrelevant());
  auto betti = betti_data(*m);
  CHECK(betti.exact);
  auto lower = reg_lower_bound_from_betti(lc.ring(), betti, 0);
  Box box = Box::cube(2, -3, 6);
  auto rr = region_for(lc, 0, Flavor::Weak, box);
  for (const auto& p : box.points()) {
    if (p[0] >= 2 && p[1] >= 2) CHECK(lower.contains(p));
    if (lower.contains(p)) CHECK(rr.contains(p));
  }
  // for M = R the bound is reg^l(R) itself
  auto r = std::make_shared<MonomialQuotient<PrimeField>>(bigraded(), f, MonomialIdeal::zero(4));
  auto br = betti_data(*r);
  for (int level = 0; level <= 2; ++level) {
    auto lb = reg_lower_bound_from_betti(lc.ring(), br, level);
    auto exact = ring_regularity_form(lc.ring(), level, Flavor::Weak);
    for (const auto& p : box.points()) CHECK(lb.contains(p) == exact.contains(p));
  }
}

TEST_CASE("hypersurfaces: regularity and the Tor bound") {
  auto g = bigraded({"X1", "X2", "Y1", "Y2"});
  PrimeField f;
  Box box = Box::cube(2, -5, 5);
  for (const char* F : {"X1*Y1", "X1*Y1 + X2*Y2"}) {
    auto m = PresentedModule<PrimeField>::quotient(g, f, {parse_polynomial(F, g->names())});
    LocalCohomology<PrimeField> lc(m, irrelevant());
    auto rr = region_for(lc, 0, Flavor::Weak, box);
    CHECK(rr.all_certified());
    for (const auto& p : box.points()) CHECK(rr.contains(p) == (p[0] >= 0 && p[1] >= 0));
    for (int p = 0; p < 2; ++p) CHECK(directional_hypothesis(lc.ideal(), *g, p, m->annihilator_witness()));
    auto bound = tor_bound_from_reg(rr, *g, 1, TorBoundKind::Intersection);
    for (long a = 0; a <= 4; ++a)
      for (long b = 0; b <= 4; ++b) {
        if (a == 0 && b == 0) continue;
        bool want = a == 0 || b == 0 || (a == 1 && b == 1);
        CHECK(bound.contains({a, b}) == want);
      }
  }
}

TEST_CASE("free shifts satisfy the Tor_0 bound") {
  auto g = bigraded();
  PrimeField f;
  GradedMatrix free;
  free.row_shifts = {{1, 2}};
  free.entries = {{}};
  auto m = std::make_shared<PresentedModule<PrimeField>>(g, f, free);
  LocalCohomology<PrimeField> lc(m, irrelevant());
  auto rr = region_for(lc, 0, Flavor::Weak, Box::cube(2, -4, 5));
  auto bound = tor_bound_from_reg(rr, *g, 0, TorBoundKind::Generic);
  CHECK(bound.contains({1, 2}));
}
