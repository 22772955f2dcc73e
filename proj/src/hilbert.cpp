#include "mgreg/hilbert.hpp"

#include <algorithm>

#include "mgreg/errors.hpp"

namespace mgreg {

mpz_class generalized_binomial(long x, int r) {
  if (r < 0) return 0;
  mpz_class num = 1;
  for (int t = 0; t < r; ++t) num *= mpz_class(x - t);
  mpz_class den = 1;
  for (int t = 2; t <= r; ++t) den *= t;
  return num / den;
}

namespace {

// binom(a + c, c) as a polynomial in a, coefficients by increasing degree
std::vector<mpq_class> binomial_poly(int c) {
  std::vector<mpq_class> p{1};
  for (int t = 1; t <= c; ++t) {
    std::vector<mpq_class> q(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i] += p[i] * t;
      q[i + 1] += p[i];
    }
    for (auto& v : q) v /= t;
    p = std::move(q);
  }
  return p;
}

std::vector<IntVec> index_grid(const std::vector<int>& bounds) {
  std::vector<IntVec> out;
  if (std::any_of(bounds.begin(), bounds.end(), [](int b) { return b < 0; })) return out;
  IntVec c(bounds.size());
  for (;;) {
    out.push_back(c);
    std::size_t i = bounds.size();
    for (;;) {
      if (i == 0) return out;
      --i;
      if (c[i] < bounds[i]) {
        ++c[i];
        break;
      }
      c[i] = 0;
    }
  }
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

// solves A x = y exactly; A square and invertible
std::vector<mpq_class> solve(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> y) {
  const std::size_t n = y.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw Error("singular interpolation system");
    std::swap(a[piv], a[col]);
    std::swap(y[piv], y[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      mpq_class f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      y[r] -= f * y[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) y[i] /= a[i][i];
  return y;
}

}  // namespace

NumericalPolynomial::NumericalPolynomial(std::vector<int> bounds, std::map<IntVec, mpq_class> coefficients)
    : bounds_(std::move(bounds)) {
  for (auto& [c, q] : coefficients)
    if (q != 0) coeffs_.emplace(c, q);
}

mpq_class NumericalPolynomial::operator()(const Degree& a) const {
  mpq_class s = 0;
  for (const auto& [c, q] : coeffs_) {
    mpq_class term = q;
    for (std::size_t i = 0; i < c.size(); ++i) term *= generalized_binomial(a[i] + c[i], static_cast<int>(c[i]));
    s += term;
  }
  return s;
}

std::vector<int> NumericalPolynomial::multidegree() const {
  std::vector<int> d(bounds_.size(), 0);
  for (const auto& [c, q] : coeffs_)
    for (std::size_t i = 0; i < c.size(); ++i) d[i] = std::max(d[i], static_cast<int>(c[i]));
  return d;
}

std::map<IntVec, mpq_class> NumericalPolynomial::expanded() const {
  std::map<IntVec, mpq_class> out;
  const std::size_t k = bounds_.size();
  for (const auto& [c, q] : coeffs_) {
    std::map<IntVec, mpq_class> term{{IntVec(k), q}};
    for (std::size_t i = 0; i < k; ++i) {
      auto p = binomial_poly(static_cast<int>(c[i]));
      std::map<IntVec, mpq_class> next;
      for (const auto& [e, v] : term)
        for (std::size_t d = 0; d < p.size(); ++d) {
          if (p[d] == 0) continue;
          IntVec f = e;
          f[i] += static_cast<long>(d);
          next[f] += v * p[d];
        }
      term = std::move(next);
    }
    for (const auto& [e, v] : term) out[e] += v;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

namespace {

std::string join_terms(const std::vector<std::pair<mpq_class, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string s;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    mpq_class q = terms[t].first;
    const std::string& body = terms[t].second;
    if (t == 0) {
      if (q < 0) s += "-";
    } else {
      s += q < 0 ? " - " : " + ";
    }
    mpq_class aq = abs(q);
    if (body.empty()) {
      s += rational_str(aq);
    } else {
      if (aq != 1) s += rational_str(aq) + "*";
      s += body;
    }
  }
  return s;
}

}  // namespace

std::string NumericalPolynomial::binomial_str() const {
  std::vector<std::pair<mpq_class, std::string>> terms;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    std::string body;
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      if (it->first[i] == 0) continue;
      if (!body.empty()) body += "*";
      std::string c = std::to_string(it->first[i]);
      body += "C(a" + std::to_string(i + 1) + "+" + c + "," + c + ")";
    }
    terms.emplace_back(it->second, body);
  }
  return join_terms(terms);
}

std::string NumericalPolynomial::expanded_str() const {
  auto e = expanded();
  std::vector<std::pair<IntVec, mpq_class>> items(e.begin(), e.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    if (x.first.sum() != y.first.sum()) return x.first.sum() > y.first.sum();
    return y.first < x.first;
  });
  std::vector<std::pair<mpq_class, std::string>> terms;
  for (const auto& [ex, q] : items) {
    std::string body;
    for (std::size_t i = 0; i < ex.size(); ++i) {
      if (ex[i] == 0) continue;
      if (!body.empty()) body += "*";
      body += "a" + std::to_string(i + 1);
      if (ex[i] > 1) body += "^" + std::to_string(ex[i]);
    }
    terms.emplace_back(q, body);
  }
  return join_terms(terms);
}

NumericalPolynomial fit_polynomial(const std::function<long(const Degree&)>& f, const Degree& base,
                                   const std::vector<int>& bounds) {
  auto idx = index_grid(bounds);
  std::vector<std::vector<mpq_class>> a;
  std::vector<mpq_class> y;
  for (const auto& off : idx) {
    Degree p = base + off;
    std::vector<mpq_class> row;
    for (const auto& c : idx) {
      mpz_class v = 1;
      for (std::size_t i = 0; i < c.size(); ++i) v *= generalized_binomial(p[i] + c[i], static_cast<int>(c[i]));
      row.emplace_back(v);
    }
    a.push_back(std::move(row));
    y.emplace_back(f(p));
  }
  auto x = solve(std::move(a), std::move(y));
  std::map<IntVec, mpq_class> coeffs;
  for (std::size_t i = 0; i < idx.size(); ++i) coeffs.emplace(idx[i], x[i]);
  NumericalPolynomial poly(bounds, std::move(coeffs));
  std::vector<int> wider(bounds);
  for (auto& b : wider) ++b;
  for (const auto& off : index_grid(wider)) {
    Degree p = base + off;
    if (poly(p) != f(p)) throw NotPolynomial("fit fails at " + p.str());
  }
  return poly;
}

std::vector<int> standard_degree_bounds(const Grading& grading) {
  std::vector<int> out;
  for (const auto& b : grading.blocks()) out.push_back(static_cast<int>(b.size()) - 1);
  return out;
}

bool hilbert_setting(const Grading& grading, const MonomialIdeal& b) {
  if (!grading.is_standard()) return false;
  const std::size_t n = static_cast<std::size_t>(grading.num_vars());
  std::optional<MonomialIdeal> irr;
  for (const auto& blk : grading.blocks()) {
    auto c = MonomialIdeal::coordinate(n, blk);
    irr = irr ? irr->intersect(c) : c;
  }
  auto r = b.radical();
  return irr && r.contains(*irr) && irr->contains(r);
}

mpz_class ring_hilbert_closed_form(const Grading& grading, const Degree& a) {
  auto r = standard_degree_bounds(grading);
  mpz_class v = 1;
  for (std::size_t i = 0; i < r.size(); ++i) v *= generalized_binomial(r[i] + a[i], r[i]);
  return v;
}

namespace {

long corrected_from_entries(int module_dim, const std::vector<LcEntry>& entries, const Degree& mu) {
  long v = module_dim;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!entries[i].trusted())
      throw UncertifiedEntry("H^" + std::to_string(i) + " at " + mu.str() + " is " + to_string(entries[i].status));
    v -= (i % 2 == 0 ? 1 : -1) * static_cast<long>(entries[i].dim);
  }
  return v;
}

}  // namespace

template <class F>
long corrected_function(const LocalCohomology<F>& lc, const Degree& mu) {
  return corrected_from_entries(lc.module().dim(mu), lc.entries(mu), mu);
}

template <class F>
HilbertResult hilbert_analysis(const std::string& instance_id, const LocalCohomology<F>& lc, const CohomologyTable& table,
                               const RegularityRegion& reg, const Box& box) {
  const Grading& g = lc.module().grading();
  if (!hilbert_setting(g, lc.ideal()))
    throw HypothesisFailed("Hilbert polynomial fitting needs a standard multigrading and B = intersection of the blocks");
  if (!(table.box.intersect(box) == box)) throw InsufficientTable("table does not cover " + box.str());
  const auto& m = lc.module();
  auto cells_at = [&](const Degree& p) { return table.cells[table.box.index(p)]; };
  auto trusted_at = [&](const Degree& p) {
    const auto& c = cells_at(p);
    return std::all_of(c.begin(), c.end(), [](const LcEntry& e) { return e.trusted(); });
  };
  auto quiet_at = [&](const Degree& p) {
    const auto& c = cells_at(p);
    return std::all_of(c.begin(), c.end(), [](const LcEntry& e) { return e.trusted() && e.dim == 0; });
  };
  auto bounds = standard_degree_bounds(g);
  IntVec span(bounds.size());
  for (std::size_t i = 0; i < bounds.size(); ++i) span[i] = bounds[i] + 1;

  // prefer a grid inside reg where the corrections vanish, else any certified grid
  std::optional<Degree> chosen;
  bool in_reg = false;
  for (int pass = 0; pass < 2 && !chosen; ++pass)
    for (const auto& base : box.points()) {
      if (!box.contains(base + span)) continue;
      Box grid(base, base + span);
      bool ok = true;
      for (const auto& p : grid.points()) {
        ok = pass == 0 ? reg.box.contains(p) && reg.contains(p) && reg.is_certified(p) && quiet_at(p) : trusted_at(p);
        if (!ok) break;
      }
      if (ok) {
        chosen = base;
        in_reg = pass == 0;
        break;
      }
    }
  if (!chosen) throw UncertifiedEntry("no certified fitting grid inside " + box.str());

  HilbertResult out;
  out.fit_grid = Box(*chosen, *chosen + span);
  out.sampled_in_regularity = in_reg;
  out.polynomial = fit_polynomial(
      [&](const Degree& p) { return corrected_from_entries(m.dim(p), cells_at(p), p); }, *chosen, bounds);

  CheckReport gs{"grothendieck_serre", instance_id, CheckStatus::Pass, std::nullopt, "", 0};
  CheckReport hr{"hilbert_on_regularity", instance_id, CheckStatus::Pass, std::nullopt, "", 0};
  auto fail = [](CheckReport& r, const Degree& p, const std::string& what) {
    if (r.status == CheckStatus::Fail) return;
    r.status = CheckStatus::Fail;
    r.witness = p;
    r.detail = what;
  };
  for (const auto& p : box.points()) {
    if (!trusted_at(p)) continue;
    const auto& c = cells_at(p);
    long fm = corrected_from_entries(m.dim(p), c, p);
    ++gs.points_checked;
    if (mpq_class(fm) != out.polynomial(p)) fail(gs, p, "F_M differs from P_M");
    if (reg.box.contains(p) && reg.contains(p) && reg.is_certified(p)) {
      ++hr.points_checked;
      // regularity kills H^i for i >= 1; H^0 may survive on the lower boundary
      mpq_class gap = mpq_class(m.dim(p)) - out.polynomial(p);
      if (gap != c[0].dim) fail(hr, p, "[M] - P_M differs from [H^0_B(M)]");
    }
  }
  if (hr.points_checked == 0) {
    hr.status = CheckStatus::Skipped;
    hr.detail = "no certified point of reg in the box";
  }
  out.checks = {gs, hr};
  return out;
}

template long corrected_function(const LocalCohomology<PrimeField>&, const Degree&);
template long corrected_function(const LocalCohomology<RationalField>&, const Degree&);
template HilbertResult hilbert_analysis(const std::string&, const LocalCohomology<PrimeField>&, const CohomologyTable&,
                                        const RegularityRegion&, const Box&);
template HilbertResult hilbert_analysis(const std::string&, const LocalCohomology<RationalField>&,
                                        const CohomologyTable&, const RegularityRegion&, const Box&);

}  // namespace mgreg
