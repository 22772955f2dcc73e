#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mgreg/grading.hpp"
#include "mgreg/int_vec.hpp"

namespace mgreg {

/// Polynomial with rational coefficients; terms keyed by exponent in
/// lexicographically decreasing order.
struct Polynomial {
  std::size_t nvars = 0;
  std::map<Exponent, mpq_class, std::greater<>> terms;

  Polynomial() = default;
  explicit Polynomial(std::size_t n) : nvars(n) {}
  static Polynomial monomial(const Exponent& e, const mpq_class& c = 1);

  bool is_zero() const { return terms.empty(); }
  bool is_monomial() const { return terms.size() == 1; }
  /// Degree of a nonzero homogeneous polynomial; nullopt for zero or
  /// inhomogeneous input.
  std::optional<Degree> homogeneous_degree(const Grading& grading) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const mpq_class& c) const;

  std::string str(const std::vector<std::string>& names) const;
};

/// Parses sums of terms like "3*X0^2*Y1 - Y0/2 + 1". Throws ParseError.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names);

}  // namespace mgreg
