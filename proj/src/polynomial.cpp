#include "mgreg/polynomial.hpp"

#include <cctype>
#include <sstream>

#include "mgreg/errors.hpp"

namespace mgreg {

Polynomial Polynomial::monomial(const Exponent& e, const mpq_class& c) {
  Polynomial p(e.size());
  if (sgn(c) != 0) p.terms.emplace(e, c);
  return p;
}

std::optional<Degree> Polynomial::homogeneous_degree(const Grading& grading) const {
  std::optional<Degree> d;
  for (const auto& [e, c] : terms) {
    Degree g = grading.degree_of(e);
    if (d && !(*d == g)) return std::nullopt;
    d = g;
  }
  return d;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (nvars == 0) nvars = o.nvars;
  for (const auto& [e, c] : o.terms) {
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms.emplace(e, c);
    } else {
      it->second += c;
      if (sgn(it->second) == 0) terms.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += o.scaled(-1); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r(std::max(a.nvars, b.nvars));
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) r += Polynomial::monomial(ea + eb, ca * cb);
  return r;
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
  Polynomial r(nvars);
  if (sgn(c) == 0) return r;
  for (const auto& [e, x] : terms) r.terms.emplace(e, x * c);
  return r;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    mpq_class a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[i];
      if (e[i] != 1) mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << '*';
      os << mono;
    }
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(const std::string& s, const std::vector<std::string>& names) : s_(s), names_(names) {}

  Polynomial parse() {
    Polynomial p(names_.size());
    skip();
    if (pos_ >= s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip();
      if (pos_ >= s_.size()) break;
      mpq_class sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        if (s_[pos_] == '-') sign = -1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      p += term().scaled(sign);
    }
    return p;
  }

 private:
  const std::string& s_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(s_.substr(start, pos_ - start));
  }
  Polynomial factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    Polynomial p(names_.size());
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class num(s_.substr(start, pos_ - start));
      mpq_class c(num);
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        long den = integer();
        if (den == 0) fail("zero denominator");
        c /= den;
      }
      return Polynomial::monomial(Exponent(names_.size()), c);
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    if (name.empty()) fail("expected variable or number");
    std::size_t idx = names_.size();
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) idx = i;
    if (idx == names_.size()) fail("unknown variable '" + name + "'");
    long power = 1;
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      power = integer();
    }
    Exponent e(names_.size());
    e[idx] = power;
    return Polynomial::monomial(e);
  }
  Polynomial term() {
    Polynomial p = factor();
    while (true) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        p = p * factor();
      } else if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        long den = integer();
        if (den == 0) fail("zero denominator");
        p = p.scaled(mpq_class(1, den));
      } else {
        return p;
      }
    }
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names) {
  return Parser(text, names).parse();
}

}  // namespace mgreg
