#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mgreg/int_vec.hpp"

namespace mgreg {

/// Rational functional phi with phi(v) > 0 for every given vector, found by
/// Fourier-Motzkin elimination on phi(v) >= 1. Deterministic; prefers small
/// positive integer coordinates. Returns nullopt when none exists.
std::optional<std::vector<mpq_class>> find_positivity_functional(const std::vector<Degree>& vectors, std::size_t k);

/// All x >= 0 with sum_c x_c * cols[c] = target, in lexicographically
/// decreasing order. `weights` must satisfy weights . cols[c] > 0 for all c.
std::vector<IntVec> nonneg_solutions(const std::vector<Degree>& cols, const Degree& target,
                                     const std::vector<long>& weights);

/// phi scaled to a primitive integer vector.
std::vector<long> integer_weights(const std::vector<mpq_class>& phi);

/// Degree data of R = k[X_1..X_n] graded by Z^k.
class Grading {
 public:
  /// Throws NoPositiveFunctional for non-positive gradings.
  explicit Grading(std::vector<Degree> columns, std::vector<std::string> names = {});

  /// Standard multigrading: block j contributes block_sizes[j] variables of
  /// degree e_j.
  static Grading standard(const std::vector<int>& block_sizes, std::vector<std::string> names = {});

  int num_vars() const { return static_cast<int>(cols_.size()); }
  int rank() const { return k_; }
  const Degree& degree(int var) const { return cols_[static_cast<std::size_t>(var)]; }
  const std::vector<Degree>& degrees() const { return cols_; }
  Degree zero() const { return Degree(static_cast<std::size_t>(k_)); }
  Degree degree_of(const Exponent& e) const;
  const std::vector<std::string>& names() const { return names_; }
  std::string monomial_string(const Exponent& e) const;

  const std::vector<mpq_class>& positivity_functional() const { return phi_; }
  const std::vector<long>& weights() const { return w_; }
  long weight(const Degree& g) const;

  /// Basis of R_g in lexicographically decreasing order; empty when g is not
  /// in the monoid C.
  std::shared_ptr<const std::vector<Exponent>> monomials_of_degree(const Degree& g) const;
  bool in_monoid(const Degree& g) const;

  /// Distinct degrees mu_1 < ... < mu_m (lexicographic).
  std::vector<Degree> distinct_degrees() const;
  /// Every column is a unit vector and every unit vector occurs.
  bool is_standard() const;
  /// Variables of each block of a standard multigrading.
  std::vector<std::vector<int>> blocks() const;

 private:
  int k_ = 0;
  std::vector<Degree> cols_;
  std::vector<std::string> names_;
  std::vector<mpq_class> phi_;
  std::vector<long> w_;
  mutable std::mutex mu_;
  mutable std::map<Degree, std::shared_ptr<const std::vector<Exponent>>> mono_cache_;
  mutable std::map<Degree, bool> monoid_cache_;
};

enum class ShiftKind { E, F };

/// Finite set of translations E_l / F_l (or a restricted variant), sorted.
struct ShiftSet {
  ShiftKind kind = ShiftKind::E;
  int level = 0;
  std::vector<Degree> points;

  bool empty() const { return points.empty(); }
  bool contains(const Degree& g) const;
};

/// E_l or F_l for the degrees of the grading.
ShiftSet shift_set(const Grading& grading, int l, ShiftKind kind);
/// E_l^f for an arbitrary tuple of degrees (sums over l distinct indices).
ShiftSet shift_set_of_tuple(const std::vector<Degree>& deltas, std::size_t k, int l);
/// E_l^E: sums of l distinct variables whose degrees lie in `allowed`.
ShiftSet shift_set_restricted(const Grading& grading, int l, const std::vector<Degree>& allowed);
/// Componentwise maxima/minima of the points (zero vector for an empty set).
Degree shift_max(const ShiftSet& s, std::size_t k);
Degree shift_min(const ShiftSet& s, std::size_t k);

}  // namespace mgreg
