#include "mgreg/int_vec.hpp"

#include <sstream>

namespace mgreg {

std::string IntVec::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

IntVec componentwise_max(const IntVec& a, const IntVec& b) {
  IntVec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

IntVec componentwise_min(const IntVec& a, const IntVec& b) {
  IntVec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

std::ostream& operator<<(std::ostream& os, const IntVec& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os << ')';
}

}  // namespace mgreg
