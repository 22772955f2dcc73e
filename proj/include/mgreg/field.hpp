#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace mgreg {

/// Integers modulo a prime p < 2^31.
class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p = 32003);

  std::uint32_t characteristic() const { return p_; }
  std::string name() const { return "F_" + std::to_string(p_); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Elem inv(Elem a) const;
  Elem from_int(long v) const;
  Elem from_rational(const mpq_class& q) const;
  std::string to_string(Elem a) const { return std::to_string(a); }

 private:
  std::uint32_t p_;
};

/// Rationals with GMP arbitrary precision.
class RationalField {
 public:
  using Elem = mpq_class;

  std::uint32_t characteristic() const { return 0; }
  std::string name() const { return "Q"; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const { return 1 / a; }
  Elem from_int(long v) const { return v; }
  Elem from_rational(const mpq_class& q) const { return q; }
  std::string to_string(const Elem& a) const { return a.get_str(); }
};

}  // namespace mgreg
