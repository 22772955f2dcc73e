#include "mgreg/monomial_ideal.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "mgreg/errors.hpp"

namespace mgreg {

bool divides(const Exponent& a, const Exponent& b) { return a.dominated_by(b); }

Exponent lcm(const Exponent& a, const Exponent& b) { return componentwise_max(a, b); }

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<Exponent> generators) : n_(n) {
  for (const auto& g : generators) {
    if (g.size() != n) throw SchemaError("monomial exponent has wrong length");
    if (!g.nonnegative()) throw SchemaError("monomial exponent has a negative entry");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (const auto& g : generators) {
    bool redundant = false;
    for (const auto& h : generators)
      if (!(h == g) && divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) gens_.push_back(g);
  }
  std::sort(gens_.begin(), gens_.end(), std::greater<>());
}

MonomialIdeal MonomialIdeal::coordinate(std::size_t n, const std::vector<int>& vars) {
  std::vector<Exponent> g;
  for (int v : vars) {
    Exponent e(n);
    e[static_cast<std::size_t>(v)] = 1;
    g.push_back(e);
  }
  return MonomialIdeal(n, std::move(g));
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_[0].sum() == 0; }

bool MonomialIdeal::contains(const Exponent& e) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Exponent& g) { return divides(g, e); });
}

bool MonomialIdeal::contains(const MonomialIdeal& o) const {
  return std::all_of(o.gens_.begin(), o.gens_.end(), [&](const Exponent& g) { return contains(g); });
}

namespace {

Exponent support_of(const Exponent& e) {
  Exponent s(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) s[i] = e[i] > 0 ? 1 : 0;
  return s;
}

}  // namespace

bool MonomialIdeal::radical_contains(const MonomialIdeal& o) const {
  MonomialIdeal r = radical();
  for (const auto& g : o.gens_)
    if (!r.contains(support_of(g))) return false;
  return true;
}

bool MonomialIdeal::is_squarefree() const {
  for (const auto& g : gens_)
    for (long x : g)
      if (x > 1) return false;
  return true;
}

MonomialIdeal MonomialIdeal::radical() const {
  std::vector<Exponent> g;
  for (const auto& e : gens_) g.push_back(support_of(e));
  return MonomialIdeal(n_, std::move(g));
}

MonomialIdeal MonomialIdeal::sum(const MonomialIdeal& o) const {
  std::vector<Exponent> g = gens_;
  g.insert(g.end(), o.gens_.begin(), o.gens_.end());
  return MonomialIdeal(n_, std::move(g));
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& o) const {
  std::vector<Exponent> g;
  for (const auto& a : gens_)
    for (const auto& b : o.gens_) g.push_back(lcm(a, b));
  return MonomialIdeal(n_, std::move(g));
}

std::vector<std::vector<int>> MonomialIdeal::minimal_primes() const {
  if (is_unit()) return {};
  // minimal vertex covers of the hypergraph of generator supports
  std::vector<std::vector<int>> edges;
  for (const auto& g : gens_) {
    std::vector<int> e;
    for (std::size_t i = 0; i < n_; ++i)
      if (g[i] > 0) e.push_back(static_cast<int>(i));
    edges.push_back(e);
  }
  std::set<std::vector<int>> covers;
  std::vector<int> chosen;
  std::vector<char> in(n_, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    while (idx < edges.size() &&
           std::any_of(edges[idx].begin(), edges[idx].end(), [&](int v) { return in[static_cast<std::size_t>(v)] != 0; }))
      ++idx;
    if (idx == edges.size()) {
      std::vector<int> c = chosen;
      std::sort(c.begin(), c.end());
      covers.insert(c);
      return;
    }
    for (int v : edges[idx]) {
      in[static_cast<std::size_t>(v)] = 1;
      chosen.push_back(v);
      rec(idx + 1);
      chosen.pop_back();
      in[static_cast<std::size_t>(v)] = 0;
    }
  };
  rec(0);
  std::vector<std::vector<int>> out;
  for (const auto& c : covers) {
    bool minimal = true;
    for (const auto& d : covers)
      if (d.size() < c.size() && std::includes(c.begin(), c.end(), d.begin(), d.end())) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(c);
  }
  return out;
}

int MonomialIdeal::quotient_dimension() const {
  auto primes = minimal_primes();
  if (primes.empty()) return -1;
  std::size_t h = n_;
  for (const auto& p : primes) h = std::min(h, p.size());
  return static_cast<int>(n_ - h);
}

Exponent MonomialIdeal::lcm_of(const std::vector<int>& subset) const {
  Exponent e(n_);
  for (int i : subset) e = lcm(e, gens_[static_cast<std::size_t>(i)]);
  return e;
}

Exponent MonomialIdeal::lcm_all() const {
  Exponent e(n_);
  for (const auto& g : gens_) e = lcm(e, g);
  return e;
}

std::vector<int> MonomialIdeal::support() const {
  std::vector<int> s;
  Exponent l = lcm_all();
  for (std::size_t i = 0; i < n_; ++i)
    if (l[i] > 0) s.push_back(static_cast<int>(i));
  return s;
}

std::string MonomialIdeal::str(const std::vector<std::string>& names) const {
  std::string s = "(";
  for (std::size_t j = 0; j < gens_.size(); ++j) {
    if (j) s += ", ";
    std::string m;
    for (std::size_t i = 0; i < n_; ++i) {
      if (gens_[j][i] == 0) continue;
      if (!m.empty()) m += '*';
      m += names[i];
      if (gens_[j][i] != 1) m += '^' + std::to_string(gens_[j][i]);
    }
    s += m.empty() ? "1" : m;
  }
  return s + ")";
}

}  // namespace mgreg
