#include "mgreg/field.hpp"

#include "mgreg/errors.hpp"

namespace mgreg {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p >= (1u << 31))
    throw SchemaError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw Error("division by zero in " + name());
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Elem>(t);
}

PrimeField::Elem PrimeField::from_int(long v) const {
  long m = v % static_cast<long>(p_);
  if (m < 0) m += p_;
  return static_cast<Elem>(m);
}

PrimeField::Elem PrimeField::from_rational(const mpq_class& q) const {
  mpz_class num = q.get_num() % p_;
  mpz_class den = q.get_den() % p_;
  if (num < 0) num += p_;
  if (den == 0)
    throw Error("coefficient " + q.get_str() + " has denominator divisible by " + std::to_string(p_));
  return mul(static_cast<Elem>(num.get_ui()), inv(static_cast<Elem>(den.get_ui())));
}

}  // namespace mgreg
