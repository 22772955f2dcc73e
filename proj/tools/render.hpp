#pragma once

#include <string>
#include <vector>

#include "mgreg/hilbert.hpp"

namespace mgreg::cli {

struct BettiEntry {
  int j = 0;
  Degree degree;
  int dim = 0;
};

/// Columns i, g1..gk, dim, status, path, t_stab; one row per (i, box point).
std::string support_csv(const CohomologyTable& table, int i_lo, int i_hi);
/// Columns g1..gk, in_region, certified, weak.
std::string regularity_csv(const RegularityRegion& reg);
/// Columns j, g1..gk, dim; nonzero entries only.
std::string betti_csv(const std::vector<BettiEntry>& entries, std::size_t k);
std::string verify_json(const std::vector<CheckReport>& reports);
std::string hilbert_report(const std::string& name, const HilbertResult& result);

/// Plots need k <= 2.
bool plottable(const Box& box);
/// One cell per box point annotated with dim H^i; certified and
/// uncertified cells use different fills.
std::string support_svg(const CohomologyTable& table, int i, const std::string& title);
/// Region cells, its staircase boundary and labeled minimal generators.
std::string regularity_svg(const RegularityRegion& reg, const Grading& grading, const std::string& title);
std::string support_ascii(const CohomologyTable& table, int i);
std::string regularity_ascii(const RegularityRegion& reg, const Grading& grading);

}  // namespace mgreg::cli
