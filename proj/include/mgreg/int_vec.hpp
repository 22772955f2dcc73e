#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace mgreg {

/// Small integer vector used both for multidegrees in Z^k and exponent
/// vectors in Z^n. Ordering is lexicographic.
class IntVec {
 public:
  IntVec() = default;
  explicit IntVec(std::size_t size, long value = 0) : c_(size, value) {}
  IntVec(std::initializer_list<long> values) : c_(values) {}
  explicit IntVec(std::vector<long> values) : c_(std::move(values)) {}

  std::size_t size() const { return c_.size(); }
  bool empty() const { return c_.empty(); }
  long& operator[](std::size_t i) { return c_[i]; }
  long operator[](std::size_t i) const { return c_[i]; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }
  const std::vector<long>& values() const { return c_; }

  IntVec& operator+=(const IntVec& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  IntVec& operator-=(const IntVec& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend IntVec operator+(IntVec a, const IntVec& b) { return a += b; }
  friend IntVec operator-(IntVec a, const IntVec& b) { return a -= b; }
  friend IntVec operator-(IntVec a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend IntVec operator*(long s, IntVec a) {
    for (auto& x : a.c_) x *= s;
    return a;
  }

  friend bool operator==(const IntVec&, const IntVec&) = default;
  friend auto operator<=>(const IntVec& a, const IntVec& b) { return a.c_ <=> b.c_; }

  /// Componentwise a <= b.
  bool dominated_by(const IntVec& o) const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] > o.c_[i]) return false;
    return true;
  }
  bool nonnegative() const {
    return std::all_of(c_.begin(), c_.end(), [](long x) { return x >= 0; });
  }
  long sum() const {
    long s = 0;
    for (long x : c_) s += x;
    return s;
  }
  long min_entry() const { return c_.empty() ? 0 : *std::min_element(c_.begin(), c_.end()); }
  long max_entry() const { return c_.empty() ? 0 : *std::max_element(c_.begin(), c_.end()); }

  std::string str() const;

 private:
  std::vector<long> c_;
};

using Degree = IntVec;    // element of G = Z^k
using Exponent = IntVec;  // element of Z^n (exponent of a monomial)

IntVec componentwise_max(const IntVec& a, const IntVec& b);
IntVec componentwise_min(const IntVec& a, const IntVec& b);

std::ostream& operator<<(std::ostream& os, const IntVec& v);

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (long x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

}  // namespace mgreg
