#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mgreg/regularity.hpp"

namespace mgreg {

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus s);

/// Outcome of one containment or equality check on one instance.
struct CheckReport {
  std::string theorem_id;
  std::string instance_id;
  CheckStatus status = CheckStatus::Pass;
  std::optional<Degree> witness;  // first violating degree
  std::string detail;
  long points_checked = 0;
};

bool any_failed(const std::vector<CheckReport>& reports);

/// Ideal generated by the monomials of degree g.
MonomialIdeal degree_piece_ideal(const Grading& grading, const Degree& g);

/// Upper bound for cd_B(R/J): -1 for J = R, 0 when B lies in sqrt(J),
/// otherwise min(dim R/J, cd_B(R)).
int cd_upper_bound(const RingCohomology& rc, const MonomialIdeal& j);

/// mu + C for the first minimal generator of the region that is not on
/// the lower boundary of its box; 0 + C when there is none.
StableSet default_truncation(const RegularityRegion& reg, const Grading& grading);

struct VerifyOptions {
  LcOptions lc;
  /// Extra rows below the box for the Koszul and Tor lookups; the default
  /// covers every shift that can occur.
  std::optional<Degree> lower_padding;
};

/// Runs every check on M over `box`. Identifiers:
///   mayer_vietoris_support, koszul_support, tor_support_from_lc,
///   restricted_tor_support, tor_from_regularity,
///   tor_from_regularity_directional, lc_support_from_betti,
///   regularity_from_betti, persistence, weak_to_strong,
///   generators_beyond_regularity, truncation_tor_support,
///   truncation_tor_comparison, truncation_tor_from_regularity,
///   truncation_cohomology_high, truncation_cohomology_zero,
///   truncation_regularity, truncation_regularity_high.
template <class F>
std::vector<CheckReport> verify_theorems(const std::string& instance_id, std::shared_ptr<const GradedModule<F>> m,
                                         const MonomialIdeal& b, const Box& box, const VerifyOptions& opts = {});

}  // namespace mgreg
