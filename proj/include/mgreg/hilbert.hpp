#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mgreg/theorems.hpp"

namespace mgreg {

/// binom(x, r) = x (x-1) ... (x-r+1) / r! for any integer x and r >= 0.
mpz_class generalized_binomial(long x, int r);

/// Numerical polynomial sum_c q_c prod_i binom(a_i + c_i, c_i) with
/// 0 <= c <= bounds and exact rational q_c.
class NumericalPolynomial {
 public:
  NumericalPolynomial() = default;
  NumericalPolynomial(std::vector<int> bounds, std::map<IntVec, mpq_class> coefficients);

  const std::vector<int>& bounds() const { return bounds_; }
  /// Nonzero coefficients keyed by c.
  const std::map<IntVec, mpq_class>& coefficients() const { return coeffs_; }
  mpq_class operator()(const Degree& a) const;
  /// Largest c_i with a nonzero coefficient, per coordinate.
  std::vector<int> multidegree() const;
  /// Coefficients in the monomial basis a^e.
  std::map<IntVec, mpq_class> expanded() const;
  /// "q*C(a1+c1,c1)*C(a2+c2,c2) + ..."
  std::string binomial_str() const;
  /// "a1*a2 + a1 + a2 + 1"
  std::string expanded_str() const;

 private:
  std::vector<int> bounds_;
  std::map<IntVec, mpq_class> coeffs_;
};

/// Interpolates f on base + prod [0, bounds_i] and checks the fit on
/// base + prod [0, bounds_i + 1]. Throws NotPolynomial with the first
/// mismatching point.
NumericalPolynomial fit_polynomial(const std::function<long(const Degree&)>& f, const Degree& base,
                                   const std::vector<int>& bounds);

/// Standard multigrading with sqrt(B) equal to the intersection of the
/// block ideals.
bool hilbert_setting(const Grading& grading, const MonomialIdeal& b);
/// r_i = block size - 1 (standard multigradings).
std::vector<int> standard_degree_bounds(const Grading& grading);
/// prod_i binom(r_i + a_i, r_i).
mpz_class ring_hilbert_closed_form(const Grading& grading, const Degree& a);

/// F_M(mu) = [M](mu) - sum_i (-1)^i [H^i_B(M)](mu). Throws UncertifiedEntry
/// unless every entry at mu is exact or certified.
template <class F>
long corrected_function(const LocalCohomology<F>& lc, const Degree& mu);

struct HilbertResult {
  NumericalPolynomial polynomial;
  Box fit_grid;
  /// The grid lies where every correction term vanishes.
  bool sampled_in_regularity = false;
  /// grothendieck_serre and hilbert_on_regularity.
  std::vector<CheckReport> checks;
};

/// Fits P_M and checks [M] - sum (-1)^i [H^i_B(M)] = P_M on the certified
/// points of `box`, and [M] - P_M = [H^0_B(M)] on certified points of reg.
/// The table must cover `box`; throws HypothesisFailed outside the
/// standard multigraded setting.
template <class F>
HilbertResult hilbert_analysis(const std::string& instance_id, const LocalCohomology<F>& lc, const CohomologyTable& table,
                               const RegularityRegion& reg, const Box& box);

}  // namespace mgreg
