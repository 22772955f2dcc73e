#include <doctest.h>

#include "mgreg/theorems.hpp"

using namespace mgreg;

namespace {

std::shared_ptr<const Grading> bigraded(std::vector<std::string> names = {"X0", "X1", "Y0", "Y1"}) {
  return std::make_shared<const Grading>(std::vector<Degree>{{1, 0}, {1, 0}, {0, 1}, {0, 1}}, names);
}

MonomialIdeal irrelevant() { return MonomialIdeal::coordinate(4, {0, 1}).intersect(MonomialIdeal::coordinate(4, {2, 3})); }
MonomialIdeal maximal() { return MonomialIdeal::coordinate(4, {0, 1, 2, 3}); }

void expect_no_failure(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) {
    INFO(r.theorem_id << " " << r.instance_id << " " << r.detail << " " << (r.witness ? r.witness->str() : ""));
    CHECK(r.status != CheckStatus::Fail);
  }
}

CheckStatus status_of(const std::vector<CheckReport>& reports, const std::string& id) {
  for (const auto& r : reports)
    if (r.theorem_id == id) return r.status;
  FAIL("missing check " << id);
  return CheckStatus::Fail;
}

}  // namespace

TEST_CASE("cd upper bounds and the default truncation") {
  auto g = bigraded();
  RingCohomology rc(g, irrelevant());
  CHECK(cd_upper_bound(rc, MonomialIdeal(4, {Exponent(4)})) == -1);
  CHECK(cd_upper_bound(rc, MonomialIdeal::coordinate(4, {0, 1})) == 0);
  CHECK(cd_upper_bound(rc, MonomialIdeal::coordinate(4, {0})) == 3);
  CHECK(degree_piece_ideal(*g, {1, 1}).generators().size() == 4);
  RegularityRegion r;
  r.box = Box::cube(2, -2, 2);
  r.region = LatticeRegion::from_predicate(r.box, [](const Degree& d) { return d[0] >= 1 && d[1] >= 1; });
  CHECK(default_truncation(r, *g).generators == std::vector<Degree>{{1, 1}});
}

TEST_CASE("theorem suite on R/(X0X1, Y0Y1)") {
  auto g = bigraded();
  PrimeField f;
  auto m = std::make_shared<MonomialQuotient<PrimeField>>(g, f, MonomialIdeal(4, {Exponent{1, 1, 0, 0}, Exponent{0, 0, 1, 1}}));
  for (const auto& B : {irrelevant(), maximal()}) {
    auto reports = verify_theorems<PrimeField>("pairs", m, B, Box::cube(2, -3, 4));
    expect_no_failure(reports);
    CHECK(reports.size() == 18);
    CHECK(status_of(reports, "tor_from_regularity") == CheckStatus::Pass);
    CHECK(status_of(reports, "lc_support_from_betti") == CheckStatus::Pass);
  }
}

TEST_CASE("theorem suite on the hypersurfaces") {
  auto g = bigraded({"X1", "X2", "Y1", "Y2"});
  PrimeField f;
  for (const char* F : {"X1*Y1", "X1*Y1 + X2*Y2"}) {
    auto m = PresentedModule<PrimeField>::quotient(g, f, {parse_polynomial(F, g->names())});
    auto reports = verify_theorems<PrimeField>(F, m, irrelevant(), Box::cube(2, -3, 3));
    expect_no_failure(reports);
    CHECK(status_of(reports, "tor_from_regularity_directional") == CheckStatus::Pass);
    CHECK(status_of(reports, "truncation_cohomology_high") == CheckStatus::Pass);
  }
}

TEST_CASE("theorem suite on Z-graded and trivial instances") {
  auto g = std::make_shared<const Grading>(std::vector<Degree>{{1}, {1}, {1}});
  PrimeField f;
  auto m = std::make_shared<MonomialQuotient<PrimeField>>(g, f, MonomialIdeal(3, {Exponent{2, 0, 0}, Exponent{1, 1, 1}}));
  auto reports = verify_theorems<PrimeField>("z", m, MonomialIdeal::coordinate(3, {0, 1, 2}), Box::cube(1, -4, 6));
  expect_no_failure(reports);
  CHECK(status_of(reports, "weak_to_strong") != CheckStatus::Fail);
  auto z = std::make_shared<ZeroModule<PrimeField>>(bigraded(), f);
  expect_no_failure(verify_theorems<PrimeField>("zero", z, irrelevant(), Box::cube(2, -2, 2)));
}

TEST_CASE("vanishing along mu + i*gamma does not persist") {
  // the persistence check walks mu - i*gamma; the forward ray admits this counterexample
  auto g = bigraded({"X1", "X2", "Y1", "Y2"});
  PrimeField f;
  auto m = PresentedModule<PrimeField>::quotient(g, f, {parse_polynomial("X1*Y1", g->names())});
  LocalCohomology<PrimeField> lc(m, irrelevant());
  for (int i = 0; i <= 3; ++i) CHECK(lc.entry(1 + i, {-1, i}).dim == 0);
  CHECK(lc.entry(1, {-1, 1}).dim == 1);
}
