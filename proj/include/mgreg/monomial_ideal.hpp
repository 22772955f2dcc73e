#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mgreg/int_vec.hpp"

namespace mgreg {

/// Monomial ideal of k[X_1..X_n], stored by its minimal generators in
/// lexicographically decreasing order.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::size_t n, std::vector<Exponent> generators);
  /// (X_i : i in vars)
  static MonomialIdeal coordinate(std::size_t n, const std::vector<int>& vars);
  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n, {}); }

  std::size_t num_vars() const { return n_; }
  const std::vector<Exponent>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool contains(const Exponent& e) const;
  bool contains(const MonomialIdeal& o) const;
  /// Every generator of `o` has a power in this ideal.
  bool radical_contains(const MonomialIdeal& o) const;
  bool is_squarefree() const;

  MonomialIdeal radical() const;
  MonomialIdeal sum(const MonomialIdeal& o) const;
  MonomialIdeal intersect(const MonomialIdeal& o) const;
  /// Minimal primes, each a sorted list of variable indices (lex order).
  std::vector<std::vector<int>> minimal_primes() const;
  /// Krull dimension of R/I; -1 for the unit ideal.
  int quotient_dimension() const;
  Exponent lcm_of(const std::vector<int>& subset) const;
  Exponent lcm_all() const;
  /// Variables occurring in some generator.
  std::vector<int> support() const;

  bool operator==(const MonomialIdeal& o) const { return n_ == o.n_ && gens_ == o.gens_; }
  std::string str(const std::vector<std::string>& names) const;

 private:
  std::size_t n_ = 0;
  std::vector<Exponent> gens_;
};

bool divides(const Exponent& a, const Exponent& b);
Exponent lcm(const Exponent& a, const Exponent& b);

}  // namespace mgreg
