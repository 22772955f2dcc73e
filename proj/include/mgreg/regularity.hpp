#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mgreg/local_cohomology.hpp"

namespace mgreg {

/// Weak regularity avoids Supp H^i + F_{i-1}; very weak uses E_{i-1}.
enum class Flavor { Weak, VeryWeak };

std::string to_string(Flavor f);
ShiftKind shift_kind(Flavor f);

/// S_{i-1} for i = 0..length, where S is F or E according to the flavor.
std::vector<ShiftSet> regularity_shifts(const Grading& grading, int length, Flavor flavor);

/// gamma not in Supp H^i_B(M) + S_{i-1} for every i >= level. Throws
/// InsufficientTable when a needed translate leaves the table. `trusted`
/// reports whether every consulted entry was exact or certified.
bool weakly_regular(const CohomologyTable& table, const Grading& grading, const Degree& gamma, int level,
                    Flavor flavor, bool* trusted = nullptr);

/// Smallest table box on which weak regularity can be decided for every
/// point of `box`.
Box required_table_box(const Grading& grading, int length, int level, Flavor flavor, const Box& box);

/// Tor supports of M with a flag telling whether they are proven complete.
struct BettiData {
  std::vector<std::vector<Degree>> supports;  // T_j, j = 0..n
  bool exact = false;
};

template <class F>
BettiData betti_data(const GradedModule<F>& m);

/// Union over i >= level of Supp H^i_B(R) + S_{i-1} (standard gradings).
InfiniteForm ring_irregular_form(const RingCohomology& rc, int level, Flavor flavor);
/// reg^level_B(R) as an exact form (standard gradings).
InfiniteForm ring_regularity_form(const RingCohomology& rc, int level, Flavor flavor);

/// Outer bound for the points where M fails weak regularity at `level`:
/// union over i >= level and j of Supp H^{i+j}_B(R) + T_j + S_{i-1}.
InfiniteForm irregular_outer_bound(const RingCohomology& rc, const BettiData& betti, int level, Flavor flavor);

/// Inner bound for reg^level_B(M) from the Betti supports:
///   level >= 1: intersection of reg^{level+i}_B(R) + g - F_i over g in T_i;
///   level = 0 additionally intersects reg^1 translates, reg_B(R) + T_0 and
///   reg^i_B(R) + g - deg(x_k) - F_{i-1} for i > 0.
InfiniteForm reg_lower_bound_from_betti(const RingCohomology& rc, const BettiData& betti, int level);

struct RegularityRegion {
  int level = 0;
  Flavor flavor = Flavor::Weak;
  Box box;
  LatticeRegion region;                // membership computed on the box
  std::vector<char> weak;              // weak regularity per box point
  std::vector<char> weak_trusted;      // decided from exact or certified entries
  std::vector<char> certified;         // membership is proven
  std::optional<InfiniteForm> form;    // exact description, when known

  bool contains(const Degree& g) const { return region.contains(g); }
  bool is_certified(const Degree& g) const { return certified[box.index(g)] != 0; }
  bool is_weak(const Degree& g) const { return weak[box.index(g)] != 0; }
  bool is_weak_trusted(const Degree& g) const { return weak_trusted[box.index(g)] != 0; }
  bool all_certified() const;
  std::size_t uncertified_count() const;
  /// Membership in the complement, answering true whenever it cannot be
  /// excluded (points outside the box included).
  bool maybe_outside(const Degree& g, const Grading& grading) const;
  /// Minimal generators of the region inside the box.
  std::vector<LatticeRegion::Generator> generators(const Grading& grading) const;
};

/// reg^level_B(M) on `box`; the table must cover required_table_box.
template <class F>
RegularityRegion regularity_region(const LocalCohomology<F>& lc, const CohomologyTable& table, int level,
                                   Flavor flavor, const Box& box, const BettiData* betti = nullptr);

/// Which containment to evaluate for Supp Tor_j(M, k).
enum class TorBoundKind {
  Generic,       // E_{j+1} + complement of reg (j = n: Supp H^0 + E_n)
  Directional,   // mu_p + E_j + complement of reg, for one distinct degree
  Intersection,  // intersection of the directional bounds over all degrees
};

/// The bound region on the region's box. Directional and intersection
/// forms require `hypothesis_ok` for the degrees involved; `h0` supplies
/// Supp H^0_B(M) for the j = n case of the generic form.
LatticeRegion tor_bound_from_reg(const RegularityRegion& reg, const Grading& grading, int j, TorBoundKind kind,
                                 int direction = -1, const CohomologyTable* h0 = nullptr);

/// Ideal generated by the variables of degree mu_p (the p-th distinct degree).
MonomialIdeal degree_ideal(const Grading& grading, int p);
/// B contained in sqrt(B_p + witness).
bool directional_hypothesis(const MonomialIdeal& b, const Grading& grading, int p, const MonomialIdeal& witness);

}  // namespace mgreg
