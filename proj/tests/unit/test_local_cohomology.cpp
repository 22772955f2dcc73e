#include <doctest.h>

#include "mgreg/errors.hpp"
#include "mgreg/local_cohomology.hpp"
#include "oracle.hpp"

using namespace mgreg;

namespace {

std::shared_ptr<const Grading> bigraded(std::vector<std::string> names = {"X0", "X1", "Y0", "Y1"}) {
  return std::make_shared<const Grading>(std::vector<Degree>{{1, 0}, {1, 0}, {0, 1}, {0, 1}}, names);
}

Exponent ex(std::initializer_list<long> v) { return Exponent(v); }

MonomialIdeal irrelevant() { return MonomialIdeal::coordinate(4, {0, 1}).intersect(MonomialIdeal::coordinate(4, {2, 3})); }
MonomialIdeal maximal() { return MonomialIdeal::coordinate(4, {0, 1, 2, 3}); }

// dim of the span of Laurent monomials x^g, deg g = (a, b), with the X-part
// negative iff nx and the Y-part negative iff ny
long orthant_count(long a, long b, bool nx, bool ny) {
  auto part = [](long d, bool neg) -> long {
    if (neg) return d <= -2 ? -d - 1 : 0;
    return d >= 0 ? d + 1 : 0;
  };
  return part(a, nx) * part(b, ny);
}

// H^i_B(R) on P^1 x P^1 and for the maximal ideal, from the Mayer-Vietoris
// sequence of m_X and m_Y.
long ring_lc(bool irrelevant_ideal, int i, long a, long b) {
  if (!irrelevant_ideal) return i == 4 ? orthant_count(a, b, true, true) : 0;
  if (i == 2) return orthant_count(a, b, true, false) + orthant_count(a, b, false, true);
  if (i == 3) return orthant_count(a, b, true, true);
  return 0;
}

}  // namespace

TEST_CASE("closed form for H_B(R) against the Mayer-Vietoris description") {
  auto g = bigraded();
  for (bool irr : {true, false}) {
    RingCohomology rc(g, irr ? irrelevant() : maximal());
    CHECK(rc.cohomological_dimension() == (irr ? 3 : 4));
    for (long a = -6; a <= 5; ++a)
      for (long b = -6; b <= 5; ++b) {
        auto d = rc.dims({a, b});
        REQUIRE(d.has_value());
        for (int i = 0; i <= rc.length(); ++i) CHECK((*d)[static_cast<std::size_t>(i)] == ring_lc(irr, i, a, b));
      }
    for (int i = 0; i <= rc.length(); ++i) {
      auto form = rc.support_form(i);
      REQUIRE(form.has_value());
      for (long a = -6; a <= 5; ++a)
        for (long b = -6; b <= 5; ++b) CHECK(form->contains({a, b}) == (ring_lc(irr, i, a, b) > 0));
    }
  }
  RingCohomology rc(g, maximal());
  CHECK(rc.dims({-2, -2}).value()[4] == 1);
}

TEST_CASE("closed form handles degenerate ideals") {
  auto g = bigraded();
  RingCohomology zero(g, MonomialIdeal::zero(4));
  CHECK(zero.dims({1, 2}).value()[0] == 6);
  RingCohomology unit(g, MonomialIdeal(4, {Exponent(4)}));
  CHECK(unit.n_data().empty());
  // H^1_{(X0)}(R) has infinite pieces in a bigrading
  RingCohomology x0(g, MonomialIdeal::coordinate(4, {0}));
  CHECK(!x0.dims({0, 0}).has_value());
  CHECK(!x0.stage_floor({0, 0}).has_value());
}

TEST_CASE("three paths agree for M = R") {
  auto g = bigraded();
  PrimeField f;
  auto r = std::make_shared<MonomialQuotient<PrimeField>>(g, f, MonomialIdeal::zero(4));
  for (const auto& B : {irrelevant(), maximal()}) {
    LocalCohomology<PrimeField> p1(r, B, {12, 2, LcPath::P1});
    LocalCohomology<PrimeField> p2(r, B, {12, 2, LcPath::P2});
    LocalCohomology<PrimeField> p3(r, B, {12, 2, LcPath::P3});
    for (long a = -4; a <= 3; ++a)
      for (long b = -4; b <= 3; ++b) {
        auto e1 = p1.entries({a, b}), e2 = p2.entries({a, b}), e3 = p3.entries({a, b});
        REQUIRE(e2.size() == e3.size());
        for (std::size_t i = 0; i < e2.size(); ++i) {
          CHECK(e2[i].status == EntryStatus::Certified);
          CHECK(e3[i].status == EntryStatus::Exact);
          CHECK(e2[i].dim == e3[i].dim);
        }
        for (std::size_t i = 0; i < std::max(e1.size(), e2.size()); ++i) {
          int d1 = i < e1.size() ? e1[i].dim : 0;
          int d2 = i < e2.size() ? e2[i].dim : 0;
          CHECK(d1 == d2);
        }
      }
  }
}

TEST_CASE("stage complexes below the certified floor can undercount") {
  auto g = bigraded();
  PrimeField f;
  MonomialQuotient<PrimeField> r(g, f, MonomialIdeal::zero(4));
  auto gens = maximal().generators();
  std::vector<int> seen;
  for (int t = 1; t <= 4; ++t) seen.push_back(stage_cohomology(r, gens, true, {-5, -5}, t, 0).dims[4]);
  CHECK(seen == std::vector<int>{0, 0, 4, 16});
  RingCohomology rc(g, maximal());
  CHECK(rc.stage_floor({-5, -5}) == 4);
}

TEST_CASE("R/(X0X1, Y0Y1) cohomology with respect to the maximal ideal") {
  auto g = bigraded();
  PrimeField f;
  auto m = std::make_shared<MonomialQuotient<PrimeField>>(g, f, MonomialIdeal(4, {ex({1, 1, 0, 0}), ex({0, 0, 1, 1})}));
  LocalCohomology<PrimeField> lc(m, maximal());
  auto table = cohomology_table(lc, Box::cube(2, -4, 4));
  CHECK(table.all_trusted());
  for (const auto& d : table.box.points()) {
    for (int i = 0; i <= table.length; ++i)
      if (i != 2) CHECK(table.dim(i, d) == 0);
    if (table.dim(2, d) > 0) CHECK((d[0] <= 0 && d[1] <= 0));
  }
  // R/I is a complete intersection of dimension 2 with a-invariant 0
  CHECK(table.dim(2, {0, 0}) == 1);
  CHECK(table.cd_bracket().first == 2);
  CHECK_THROWS_AS(table.dim(2, {5, 0}), InsufficientTable);
}

TEST_CASE("P1 stabilization agrees with certified P2 on a quotient") {
  auto g = bigraded();
  PrimeField f;
  auto m = std::make_shared<MonomialQuotient<PrimeField>>(g, f, MonomialIdeal(4, {ex({1, 1, 0, 0}), ex({0, 0, 1, 1})}));
  LocalCohomology<PrimeField> p1(m, irrelevant(), {12, 2, LcPath::P1});
  LocalCohomology<PrimeField> p2(m, irrelevant(), {12, 2, LcPath::P2});
  for (long a = -3; a <= 2; ++a)
    for (long b = -3; b <= 2; ++b) {
      auto e1 = p1.entries({a, b}), e2 = p2.entries({a, b});
      for (std::size_t i = 0; i < e2.size(); ++i) {
        CHECK(e2[i].status == EntryStatus::Certified);
        CHECK(e1[i].status == EntryStatus::Stabilized);
        CHECK(e1[i].dim == e2[i].dim);
      }
    }
}

TEST_CASE("hypersurfaces of bidegree (1,1)") {
  auto g = bigraded({"X1", "X2", "Y1", "Y2"});
  PrimeField f;
  for (bool product : {true, false}) {
    auto m = PresentedModule<PrimeField>::quotient(
        g, f, {parse_polynomial(product ? "X1*Y1" : "X1*Y1 + X2*Y2", g->names())});
    LocalCohomology<PrimeField> lc(m, irrelevant());
    for (long a = -5; a <= -2; ++a)
      for (long b = -3; b <= 5; ++b) {
        auto e = lc.entry(1, {a, b});
        CHECK(e.status == EntryStatus::Certified);
        long want = product ? (b >= 1 ? b : 0) : std::max(a + b + 1, 0L);
        CHECK(e.dim == want);
      }
    // a = -1: phi vanishes and the whole source survives
    for (long b = 1; b <= 4; ++b) CHECK(lc.entry(1, {-1, b}).dim == b);
  }
}

TEST_CASE("Mayer-Vietoris bound contains the support") {
  auto g = bigraded();
  PrimeField f;
  auto m = std::make_shared<MonomialQuotient<PrimeField>>(g, f, MonomialIdeal(4, {ex({1, 0, 1, 0})}));
  LocalCohomology<PrimeField> lc(m, irrelevant());
  Box box = Box::cube(2, -3, 3);
  auto table = cohomology_table(lc, box);
  for (int l = 0; l <= table.length; ++l) {
    auto bound = mayer_vietoris_bound(lc, l, box);
    for (const auto& d : box.points())
      if (table.dim(l, d) > 0) CHECK(bound.contains(d));
  }
}

TEST_CASE("zero module and rational field") {
  auto g = bigraded();
  PrimeField f;
  auto z = std::make_shared<ZeroModule<PrimeField>>(g, f);
  LocalCohomology<PrimeField> lz(z, irrelevant());
  for (const auto& e : lz.entries({-3, 1})) {
    CHECK(e.dim == 0);
    CHECK(e.status == EntryStatus::Certified);
  }
  RationalField q;
  auto rq = std::make_shared<MonomialQuotient<RationalField>>(g, q, MonomialIdeal::zero(4));
  LocalCohomology<RationalField> lq(rq, irrelevant());
  CHECK(lq.entry(2, {-3, 1}).dim == ring_lc(true, 2, -3, 1));
  CHECK_THROWS_AS(LocalCohomology<PrimeField>(z, irrelevant(), {12, 2, LcPath::P3}), HypothesisFailed);
}
