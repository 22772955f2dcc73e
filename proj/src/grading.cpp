#include "mgreg/grading.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "mgreg/errors.hpp"

namespace mgreg {

namespace {

struct Ineq {
  std::vector<mpq_class> a;  // a . x >= b
  mpq_class b;
  bool operator<(const Ineq& o) const {
    if (b != o.b) return b < o.b;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != o.a[i]) return a[i] < o.a[i];
    return false;
  }
};

// Scale so the first nonzero coefficient has absolute value 1 (keeps the
// direction of the inequality).
Ineq normalized(Ineq q) {
  for (const auto& c : q.a) {
    if (sgn(c) != 0) {
      mpq_class s = abs(c);
      for (auto& x : q.a) x /= s;
      q.b /= s;
      break;
    }
  }
  return q;
}

mpz_class ceil_q(const mpq_class& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

mpz_class floor_q(const mpq_class& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

std::optional<std::vector<mpq_class>> find_positivity_functional(const std::vector<Degree>& vectors, std::size_t k) {
  std::vector<std::vector<Ineq>> levels(k + 1);
  {
    std::set<Ineq> s;
    for (const auto& v : vectors) {
      Ineq q;
      q.a.resize(k);
      for (std::size_t i = 0; i < k; ++i) q.a[i] = v[i];
      q.b = 1;
      s.insert(normalized(q));
    }
    levels[k].assign(s.begin(), s.end());
  }
  // levels[m] only involves variables 0..m-1.
  for (std::size_t m = k; m-- > 0;) {
    std::vector<Ineq> pos, neg;
    std::set<Ineq> next;
    for (const auto& q : levels[m + 1]) {
      int s = sgn(q.a[m]);
      if (s > 0) pos.push_back(q);
      else if (s < 0) neg.push_back(q);
      else next.insert(q);
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        Ineq c;
        c.a.resize(k);
        mpq_class sp = 1 / p.a[m], sn = 1 / (-n.a[m]);
        for (std::size_t i = 0; i < k; ++i) c.a[i] = p.a[i] * sp + n.a[i] * sn;
        c.a[m] = 0;
        c.b = p.b * sp + n.b * sn;
        next.insert(normalized(c));
      }
    levels[m].assign(next.begin(), next.end());
  }
  for (const auto& q : levels[0])
    if (q.b > 0) return std::nullopt;

  std::vector<mpq_class> phi(k);
  for (std::size_t m = 0; m < k; ++m) {
    std::optional<mpq_class> lo, hi;
    for (const auto& q : levels[m + 1]) {
      int s = sgn(q.a[m]);
      if (s == 0) continue;
      mpq_class rest = q.b;
      for (std::size_t i = 0; i < m; ++i) rest -= q.a[i] * phi[i];
      mpq_class bound = rest / q.a[m];
      if (s > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    mpz_class cand = 1;
    if (lo) cand = std::max(cand, ceil_q(*lo));
    if (!hi || mpq_class(cand) <= *hi) {
      phi[m] = cand;
    } else if (!lo || mpq_class(floor_q(*hi)) >= *lo) {
      phi[m] = mpq_class(floor_q(*hi));
    } else {
      phi[m] = *lo;
    }
  }
  return phi;
}

std::vector<long> integer_weights(const std::vector<mpq_class>& phi) {
  mpz_class l = 1;
  for (const auto& q : phi) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> z;
  mpz_class g = 0;
  for (const auto& q : phi) {
    z.push_back(q.get_num() * (l / q.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
  }
  std::vector<long> w;
  for (auto& x : z) w.push_back(g == 0 ? 0 : mpz_class(x / g).get_si());
  return w;
}

namespace {

long dot(const std::vector<long>& w, const IntVec& v) {
  long s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * v[i];
  return s;
}

}  // namespace

std::vector<IntVec> nonneg_solutions(const std::vector<Degree>& cols, const Degree& target,
                                     const std::vector<long>& weights) {
  const std::size_t n = cols.size();
  std::vector<long> cw(n);
  for (std::size_t c = 0; c < n; ++c) cw[c] = dot(weights, cols[c]);
  // min weight among variables c..n-1, used to prune hopeless branches
  std::vector<IntVec> out;
  IntVec x(n);
  std::function<void(std::size_t, Degree&)> rec = [&](std::size_t c, Degree& rem) {
    long rw = dot(weights, rem);
    if (c == n) {
      if (std::all_of(rem.begin(), rem.end(), [](long v) { return v == 0; })) out.push_back(x);
      return;
    }
    if (rw < 0) return;
    if (rw == 0) {
      // only the empty product has weight zero
      if (std::all_of(rem.begin(), rem.end(), [](long v) { return v == 0; })) {
        for (std::size_t i = c; i < n; ++i) x[i] = 0;
        out.push_back(x);
      }
      return;
    }
    long maxe = rw / cw[c];
    for (long e = maxe; e >= 0; --e) {
      x[c] = e;
      for (std::size_t i = 0; i < rem.size(); ++i) rem[i] -= e * cols[c][i];
      rec(c + 1, rem);
      for (std::size_t i = 0; i < rem.size(); ++i) rem[i] += e * cols[c][i];
    }
    x[c] = 0;
  };
  Degree rem = target;
  rec(0, rem);
  return out;
}

Grading::Grading(std::vector<Degree> columns, std::vector<std::string> names)
    : cols_(std::move(columns)), names_(std::move(names)) {
  if (cols_.empty()) throw SchemaError("grading needs at least one variable");
  k_ = static_cast<int>(cols_[0].size());
  for (const auto& c : cols_)
    if (static_cast<int>(c.size()) != k_) throw SchemaError("degree vectors have different lengths");
  auto phi = find_positivity_functional(cols_, static_cast<std::size_t>(k_));
  if (!phi) throw NoPositiveFunctional("no functional is positive on every variable degree");
  phi_ = *phi;
  w_ = integer_weights(phi_);
  if (names_.empty())
    for (int i = 0; i < num_vars(); ++i) names_.push_back("x" + std::to_string(i + 1));
  if (static_cast<int>(names_.size()) != num_vars()) throw SchemaError("variable names do not match degrees");
}

Grading Grading::standard(const std::vector<int>& block_sizes, std::vector<std::string> names) {
  std::vector<Degree> cols;
  for (std::size_t j = 0; j < block_sizes.size(); ++j)
    for (int i = 0; i < block_sizes[j]; ++i) {
      Degree d(block_sizes.size());
      d[j] = 1;
      cols.push_back(d);
    }
  return Grading(std::move(cols), std::move(names));
}

Degree Grading::degree_of(const Exponent& e) const {
  Degree d = zero();
  for (int i = 0; i < num_vars(); ++i)
    if (e[static_cast<std::size_t>(i)] != 0) d += e[static_cast<std::size_t>(i)] * cols_[static_cast<std::size_t>(i)];
  return d;
}

std::string Grading::monomial_string(const Exponent& e) const {
  std::string s;
  for (int i = 0; i < num_vars(); ++i) {
    long x = e[static_cast<std::size_t>(i)];
    if (x == 0) continue;
    if (!s.empty()) s += '*';
    s += names_[static_cast<std::size_t>(i)];
    if (x != 1) s += '^' + std::to_string(x);
  }
  return s.empty() ? "1" : s;
}

long Grading::weight(const Degree& g) const { return dot(w_, g); }

std::shared_ptr<const std::vector<Exponent>> Grading::monomials_of_degree(const Degree& g) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = mono_cache_.find(g);
    if (it != mono_cache_.end()) return it->second;
  }
  auto v = std::make_shared<const std::vector<Exponent>>(nonneg_solutions(cols_, g, w_));
  std::lock_guard<std::mutex> lock(mu_);
  return mono_cache_.emplace(g, v).first->second;
}

bool Grading::in_monoid(const Degree& g) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = monoid_cache_.find(g);
    if (it != monoid_cache_.end()) return it->second;
  }
  bool found = false;
  const std::size_t n = cols_.size();
  std::vector<long> cw(n);
  for (std::size_t c = 0; c < n; ++c) cw[c] = dot(w_, cols_[c]);
  std::function<void(std::size_t, Degree&)> rec = [&](std::size_t c, Degree& rem) {
    if (found) return;
    long rw = dot(w_, rem);
    if (rw < 0) return;
    if (std::all_of(rem.begin(), rem.end(), [](long v) { return v == 0; })) {
      found = true;
      return;
    }
    if (c == n || rw == 0) return;
    for (long e = rw / cw[c]; e >= 0 && !found; --e) {
      for (std::size_t i = 0; i < rem.size(); ++i) rem[i] -= e * cols_[c][i];
      rec(c + 1, rem);
      for (std::size_t i = 0; i < rem.size(); ++i) rem[i] += e * cols_[c][i];
    }
  };
  Degree rem = g;
  rec(0, rem);
  std::lock_guard<std::mutex> lock(mu_);
  monoid_cache_[g] = found;
  return found;
}

std::vector<Degree> Grading::distinct_degrees() const {
  std::set<Degree> s(cols_.begin(), cols_.end());
  return {s.begin(), s.end()};
}

bool Grading::is_standard() const {
  std::vector<char> seen(static_cast<std::size_t>(k_), 0);
  for (const auto& c : cols_) {
    int ones = 0, idx = -1;
    for (int i = 0; i < k_; ++i) {
      if (c[static_cast<std::size_t>(i)] == 1) {
        ++ones;
        idx = i;
      } else if (c[static_cast<std::size_t>(i)] != 0) {
        return false;
      }
    }
    if (ones != 1) return false;
    seen[static_cast<std::size_t>(idx)] = 1;
  }
  return std::all_of(seen.begin(), seen.end(), [](char x) { return x != 0; });
}

std::vector<std::vector<int>> Grading::blocks() const {
  std::vector<std::vector<int>> b(static_cast<std::size_t>(k_));
  for (int v = 0; v < num_vars(); ++v)
    for (int i = 0; i < k_; ++i)
      if (cols_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] != 0) b[static_cast<std::size_t>(i)].push_back(v);
  return b;
}

bool ShiftSet::contains(const Degree& g) const { return std::binary_search(points.begin(), points.end(), g); }

ShiftSet shift_set_of_tuple(const std::vector<Degree>& deltas, std::size_t k, int l) {
  ShiftSet s;
  s.kind = ShiftKind::E;
  s.level = l;
  const int r = static_cast<int>(deltas.size());
  if (l < -1 || l > r) return s;
  if (l == 0) {
    s.points.push_back(Degree(k));
    return s;
  }
  if (l == -1) {
    std::set<Degree> pts;
    for (const auto& d : deltas) pts.insert(-d);
    s.points.assign(pts.begin(), pts.end());
    return s;
  }
  // reach[j] = sums of j distinct entries among those processed so far
  std::vector<std::set<Degree>> reach(static_cast<std::size_t>(l + 1));
  reach[0].insert(Degree(k));
  for (const auto& d : deltas)
    for (int j = l; j >= 1; --j)
      for (const auto& p : reach[static_cast<std::size_t>(j - 1)]) reach[static_cast<std::size_t>(j)].insert(p + d);
  s.points.assign(reach[static_cast<std::size_t>(l)].begin(), reach[static_cast<std::size_t>(l)].end());
  return s;
}

ShiftSet shift_set(const Grading& grading, int l, ShiftKind kind) {
  if (kind == ShiftKind::E || l <= 0) {
    ShiftSet s = shift_set_of_tuple(grading.degrees(), static_cast<std::size_t>(grading.rank()), l);
    s.kind = kind;
    return s;
  }
  ShiftSet s;
  s.kind = ShiftKind::F;
  s.level = l;
  std::set<Degree> cur{grading.zero()};
  auto mus = grading.distinct_degrees();
  for (int j = 0; j < l; ++j) {
    std::set<Degree> next;
    for (const auto& p : cur)
      for (const auto& m : mus) next.insert(p + m);
    cur.swap(next);
  }
  s.points.assign(cur.begin(), cur.end());
  return s;
}

ShiftSet shift_set_restricted(const Grading& grading, int l, const std::vector<Degree>& allowed) {
  std::vector<Degree> sub;
  for (const auto& d : grading.degrees())
    if (std::find(allowed.begin(), allowed.end(), d) != allowed.end()) sub.push_back(d);
  return shift_set_of_tuple(sub, static_cast<std::size_t>(grading.rank()), l);
}

Degree shift_max(const ShiftSet& s, std::size_t k) {
  if (s.points.empty()) return Degree(k);
  Degree m = s.points.front();
  for (const auto& p : s.points) m = componentwise_max(m, p);
  return m;
}

Degree shift_min(const ShiftSet& s, std::size_t k) {
  if (s.points.empty()) return Degree(k);
  Degree m = s.points.front();
  for (const auto& p : s.points) m = componentwise_min(m, p);
  return m;
}

}  // namespace mgreg
