#include <doctest.h>

#include "mgreg/errors.hpp"
#include "mgreg/hilbert.hpp"

using namespace mgreg;

namespace {

std::shared_ptr<const Grading> bigraded() {
  return std::make_shared<const Grading>(std::vector<Degree>{{1, 0}, {1, 0}, {0, 1}, {0, 1}},
                                         std::vector<std::string>{"X0", "X1", "Y0", "Y1"});
}

MonomialIdeal irrelevant() { return MonomialIdeal::coordinate(4, {0, 1}).intersect(MonomialIdeal::coordinate(4, {2, 3})); }

template <class F>
HilbertResult analyse(const std::shared_ptr<const GradedModule<F>>& m, const MonomialIdeal& b, const Box& box) {
  LocalCohomology<F> lc(m, b);
  auto table = cohomology_table(lc, required_table_box(m->grading(), lc.length(), 0, Flavor::Weak, box));
  auto reg = regularity_region(lc, table, 0, Flavor::Weak, box);
  return hilbert_analysis("t", lc, table, reg, box);
}

void expect_pass(const HilbertResult& h) {
  for (const auto& r : h.checks) {
    INFO(r.theorem_id << " " << r.detail);
    CHECK(r.status == CheckStatus::Pass);
  }
}

}  // namespace

TEST_CASE("negative binomial identity") {
  for (int r = 0; r <= 5; ++r)
    for (long a = -12; a <= 12; ++a) {
      mpz_class sign = r % 2 == 0 ? 1 : -1;
      CHECK(generalized_binomial(r + (-a - r - 1), r) == sign * generalized_binomial(r + a, r));
    }
  CHECK(generalized_binomial(-1, 3) == -1);
  CHECK(generalized_binomial(5, 2) == 10);
  CHECK(generalized_binomial(2, 5) == 0);
}

TEST_CASE("polynomial fitting") {
  auto p = fit_polynomial([](const Degree& d) { return (d[0] + 1) * (d[1] + 1); }, {-2, 3}, {1, 1});
  CHECK(p.coefficients().size() == 1);
  CHECK(p.coefficients().at(IntVec{1, 1}) == 1);
  CHECK(p.expanded_str() == "a1*a2 + a1 + a2 + 1");
  CHECK(p.binomial_str() == "C(a1+1,1)*C(a2+1,1)");
  CHECK(p.multidegree() == std::vector<int>{1, 1});
  auto q = fit_polynomial([](const Degree& d) { return d[0] * d[0] - 3; }, {0}, {2});
  CHECK(q.expanded_str() == "a1^2 - 3");
  CHECK(q({7}) == 46);
  CHECK_THROWS_AS(fit_polynomial([](const Degree& d) { return 1L << d[0]; }, {0}, {2}), NotPolynomial);
  auto c = fit_polynomial([](const Degree&) { return 4L; }, {0, 0}, {1, 1});
  CHECK(c.expanded_str() == "4");
}

TEST_CASE("corrected function of the ring matches the closed form") {
  auto g = bigraded();
  PrimeField f;
  auto r = std::make_shared<MonomialQuotient<PrimeField>>(g, f, MonomialIdeal::zero(4));
  LocalCohomology<PrimeField> lc(r, irrelevant());
  int n = 0;
  for (long a = -5; a <= 4; ++a)
    for (long b = -2; b <= 2; ++b, ++n) {
      CHECK(corrected_function(lc, {a, b}) == (a + 1) * (b + 1));
      CHECK(ring_hilbert_closed_form(*g, {a, b}) == (a + 1) * (b + 1));
    }
  CHECK(n == 50);
  CHECK(hilbert_setting(*g, irrelevant()));
  CHECK(!hilbert_setting(*g, MonomialIdeal::coordinate(4, {0, 1, 2, 3})));
}

TEST_CASE("R/(X0X1, Y0Y1) Hilbert polynomial") {
  auto g = bigraded();
  PrimeField f;
  std::shared_ptr<const GradedModule<PrimeField>> m =
      std::make_shared<MonomialQuotient<PrimeField>>(g, f, MonomialIdeal(4, {Exponent{1, 1, 0, 0}, Exponent{0, 0, 1, 1}}));
  LocalCohomology<PrimeField> lc(m, irrelevant());
  for (long a = -3; a <= 2; ++a)
    for (long b = -1; b <= 0; ++b) CHECK(corrected_function(lc, {a, b}) == 4);
  auto h = analyse(m, irrelevant(), Box::cube(2, -4, 5));
  expect_pass(h);
  CHECK(h.sampled_in_regularity);
  CHECK(h.polynomial.expanded_str() == "4");
  CHECK(m->dim({1, 1}) == 4);
  CHECK(h.polynomial({1, 1}) == 4);
}

TEST_CASE("shifts, sums and the zero module") {
  auto g = bigraded();
  PrimeField f;
  std::shared_ptr<const GradedModule<PrimeField>> r =
      std::make_shared<MonomialQuotient<PrimeField>>(g, f, MonomialIdeal::zero(4));
  Box box = Box::cube(2, -3, 4);
  auto hr = analyse(r, irrelevant(), box);
  expect_pass(hr);
  Degree tau{1, 2};
  std::shared_ptr<const GradedModule<PrimeField>> shifted = std::make_shared<ShiftedModule<PrimeField>>(r, Degree{-1, -2});
  auto hs = analyse(shifted, irrelevant(), box);
  expect_pass(hs);
  GradedMatrix two;
  two.row_shifts = {{0, 0}, tau};
  two.entries = {{}, {}};
  std::shared_ptr<const GradedModule<PrimeField>> sum = std::make_shared<PresentedModule<PrimeField>>(g, f, two);
  auto hsum = analyse(sum, irrelevant(), box);
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b) {
      CHECK(hs.polynomial({a, b}) == hr.polynomial(Degree{a, b} - tau));
      CHECK(hsum.polynomial({a, b}) == hr.polynomial({a, b}) + hr.polynomial(Degree{a, b} - tau));
    }
  std::shared_ptr<const GradedModule<PrimeField>> z = std::make_shared<ZeroModule<PrimeField>>(g, f);
  auto hz = analyse(z, irrelevant(), box);
  CHECK(hz.polynomial.coefficients().empty());
}

TEST_CASE("Z-graded Hilbert polynomials") {
  auto g = std::make_shared<const Grading>(std::vector<Degree>{{1}, {1}, {1}});
  PrimeField f;
  auto m = MonomialIdeal::coordinate(3, {0, 1, 2});
  std::shared_ptr<const GradedModule<PrimeField>> q =
      std::make_shared<MonomialQuotient<PrimeField>>(g, f, MonomialIdeal(3, {Exponent{2, 0, 0}}));
  auto h = analyse(q, m, Box::cube(1, -4, 8));
  expect_pass(h);
  CHECK(h.polynomial.expanded_str() == "2*a1 + 1");
  for (long d = 3; d <= 12; ++d) CHECK(h.polynomial({d}) == q->dim({d}));
  // k itself: H^0 survives at the lower corner of reg = Z_{>=0}
  std::shared_ptr<const GradedModule<PrimeField>> k = std::make_shared<MonomialQuotient<PrimeField>>(g, f, m);
  auto hk = analyse(k, m, Box::cube(1, -3, 4));
  expect_pass(hk);
  CHECK(hk.polynomial.coefficients().empty());
  CHECK(k->dim({0}) == 1);
}
