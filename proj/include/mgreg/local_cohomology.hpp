#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mgreg/module.hpp"

namespace mgreg {

/// P1: Koszul cohomology on Frobenius powers of the generators of B.
/// P2: Ext(R/B^[t], M) through Taylor complexes on the generators of sqrt(B).
/// P3: closed form for M = R from the N_{i,a} data.
enum class LcPath { P1, P2, P3 };
enum class EntryStatus { Exact, Certified, Stabilized, TMaxReached };

std::string to_string(LcPath p);
std::string to_string(EntryStatus s);

struct LcOptions {
  int t_max = 12;
  int window = 2;
  LcPath path = LcPath::P2;
};

struct LcEntry {
  int dim = 0;
  EntryStatus status = EntryStatus::Exact;
  LcPath path = LcPath::P2;
  int t_stab = 0;

  bool trusted() const { return status == EntryStatus::Exact || status == EntryStatus::Certified; }
};

/// H^i_B(R) in closed form: for a in {0,1}^n, N_{i,a} is the cohomology of
/// the finite complex spanned by subsets J of the generators of sqrt(B)
/// whose lcm is divisible by x^a, and the fine piece of degree g is
/// N_{i,neg(g)}.
class RingCohomology {
 public:
  RingCohomology(std::shared_ptr<const Grading> grading, const MonomialIdeal& b);

  const Grading& grading() const { return *grading_; }
  const MonomialIdeal& radical() const { return radical_; }
  /// Number of generators of sqrt(B); H^i vanishes above it.
  int length() const { return static_cast<int>(radical_.generators().size()); }
  /// N_{i,a} for i = 0..length(); only sign patterns with a nonzero entry.
  const std::map<Exponent, std::vector<int>>& n_data() const { return n_; }

  /// Lifts g in Z^n of degree d with neg(g) = a; nullopt when infinitely
  /// many exist.
  std::optional<std::vector<Exponent>> lifts(const Exponent& a, const Degree& d) const;
  /// dim H^i_B(R)_d for every i; nullopt when some piece is infinite.
  std::optional<std::vector<long>> dims(const Degree& d) const;
  /// Smallest stage t >= 1 from which the Taylor Ext complexes on
  /// Frobenius powers compute H^*_B(R)_d exactly; nullopt if unbounded.
  std::optional<int> stage_floor(const Degree& d) const;
  /// Exact support of H^i_B(R) as interval products (standard gradings).
  std::optional<InfiniteForm> support_form(int i) const;
  /// Largest i with H^i_B(R) != 0 (cd_B(R)).
  int cohomological_dimension() const;

 private:
  std::shared_ptr<const Grading> grading_;
  MonomialIdeal radical_;
  std::map<Exponent, std::vector<int>> n_;
  mutable std::mutex mu_;
  mutable std::map<Degree, std::optional<int>> floor_cache_;
};

/// Local cohomology oracle for a module and a monomial ideal B.
template <class F>
class LocalCohomology {
 public:
  LocalCohomology(std::shared_ptr<const GradedModule<F>> module, MonomialIdeal b, LcOptions options = {});

  const GradedModule<F>& module() const { return *module_; }
  const std::shared_ptr<const GradedModule<F>>& module_ptr() const { return module_; }
  const MonomialIdeal& ideal() const { return b_; }
  const LcOptions& options() const { return opts_; }
  const RingCohomology& ring() const { return *ring_; }
  /// Cohomological indices covered: 0..length().
  int length() const;
  bool module_is_ring() const;

  /// Entries for i = 0..length() in degree d.
  std::vector<LcEntry> entries(const Degree& d) const;
  LcEntry entry(int i, const Degree& d) const;

  /// Degrees shifting a free resolution, if known; `exact` tells whether
  /// the set is proven complete.
  std::vector<Degree> resolution_shifts(bool* exact) const;
  /// Stage from which the P2 complexes are exact in degree d.
  std::optional<int> certified_floor(const Degree& d) const;

 private:
  std::shared_ptr<const GradedModule<F>> module_;
  MonomialIdeal b_;
  LcOptions opts_;
  std::shared_ptr<RingCohomology> ring_;
  std::vector<Exponent> gens_;  // generators used by the chosen colimit path
  std::vector<Degree> shifts_;
  bool shifts_exact_ = false;
  mutable std::mutex mu_;
  mutable std::map<Degree, std::vector<LcEntry>> cache_;

  std::vector<LcEntry> compute(const Degree& d) const;
};

/// Per-degree dims of H^i(stage t complex) and, when `next` is given, the
/// ranks of the transition to stage t + next.
template <class F>
struct StageResult {
  std::vector<int> dims;
  std::vector<int> transition_ranks;
};

/// Stage complex: C^j = sum_{|J|=j} M_{d + t deg e_J}, with differential
/// blocks (-1)^{#{q in J : q < p}} x^{t(e_{J+p} - e_J)} and transitions
/// x^{w e_J}. e_J is the sum (P1) or lcm (P2) of the chosen generators.
template <class F>
StageResult<F> stage_cohomology(const GradedModule<F>& m, const std::vector<Exponent>& gens, bool use_lcm,
                                const Degree& d, int t, int transition_step);

/// Supp H^i_B(M) on a box with per-entry statuses.
struct CohomologyTable {
  Box box;
  int length = 0;
  LcPath path = LcPath::P2;
  std::vector<std::vector<LcEntry>> cells;  // cells[box index][i]

  bool covers(const Degree& d) const { return box.contains(d); }
  /// Throws InsufficientTable outside the box.
  const LcEntry& at(int i, const Degree& d) const;
  int dim(int i, const Degree& d) const;
  LatticeRegion support(int i) const;
  bool all_trusted() const;
  bool any_status(EntryStatus s) const;
  /// [largest i with a nonzero entry, length]
  std::pair<int, int> cd_bracket() const;
};

template <class F>
CohomologyTable cohomology_table(const LocalCohomology<F>& lc, const Box& box);

/// Upper bound for Supp H^l_B(M) from the minimal primes of sqrt(B):
/// union over nonempty sets of primes J_{j_1..j_i} of
/// Supp H^{l+i-1}_{J_{j_1}+...+J_{j_i}}(M).
template <class F>
LatticeRegion mayer_vietoris_bound(const LocalCohomology<F>& lc, int l, const Box& box);

}  // namespace mgreg
