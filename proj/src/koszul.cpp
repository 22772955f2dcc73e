#include "mgreg/koszul.hpp"

#include <map>

namespace mgreg {

namespace {

std::vector<std::vector<int>> subsets_of_size(int r, int j) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == j) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < r; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

std::vector<Polynomial> variable_sequence(const Grading& grading) {
  std::vector<Polynomial> f;
  const auto n = static_cast<std::size_t>(grading.num_vars());
  for (std::size_t i = 0; i < n; ++i) {
    Exponent e(n);
    e[i] = 1;
    f.push_back(Polynomial::monomial(e));
  }
  return f;
}

template <class F>
KoszulSlice<F> koszul_slice(const GradedModule<F>& m, const std::vector<Polynomial>& f, const Degree& g) {
  const F& field = m.field();
  const int r = static_cast<int>(f.size());
  std::vector<Degree> deg;
  for (const auto& p : f) {
    auto d = p.homogeneous_degree(m.grading());
    deg.push_back(d ? *d : m.grading().zero());
  }
  KoszulSlice<F> k;
  k.subsets.resize(static_cast<std::size_t>(r + 1));
  k.offsets.resize(static_cast<std::size_t>(r + 1));
  k.dims.assign(static_cast<std::size_t>(r + 1), 0);
  std::vector<std::map<std::vector<int>, int>> index(static_cast<std::size_t>(r + 1));
  std::vector<std::vector<Degree>> src_deg(static_cast<std::size_t>(r + 1));
  for (int j = 0; j <= r; ++j) {
    auto& subs = k.subsets[static_cast<std::size_t>(j)];
    subs = subsets_of_size(r, j);
    int off = 0;
    for (std::size_t s = 0; s < subs.size(); ++s) {
      Degree h = g;
      for (int i : subs[s]) h -= deg[static_cast<std::size_t>(i)];
      src_deg[static_cast<std::size_t>(j)].push_back(h);
      k.offsets[static_cast<std::size_t>(j)].push_back(off);
      index[static_cast<std::size_t>(j)][subs[s]] = static_cast<int>(s);
      off += m.dim(h);
    }
    k.dims[static_cast<std::size_t>(j)] = off;
  }
  k.d.resize(static_cast<std::size_t>(r + 1));
  for (int j = 1; j <= r; ++j) {
    MatrixBuilder<F> b(field, k.dims[static_cast<std::size_t>(j - 1)], k.dims[static_cast<std::size_t>(j)]);
    const auto& subs = k.subsets[static_cast<std::size_t>(j)];
    for (std::size_t s = 0; s < subs.size(); ++s) {
      const Degree& h = src_deg[static_cast<std::size_t>(j)][s];
      if (m.dim(h) == 0) continue;
      for (int q = 0; q < j; ++q) {
        std::vector<int> face = subs[s];
        int var = face[static_cast<std::size_t>(q)];
        face.erase(face.begin() + q);
        int t = index[static_cast<std::size_t>(j - 1)].at(face);
        const Polynomial& p = f[static_cast<std::size_t>(var)];
        if (p.is_zero()) continue;
        SparseMatrix<F> a = p.is_monomial() && p.terms.begin()->second == 1 ? m.act(h, p.terms.begin()->first)
                                                                            : m.act_poly(h, p);
        b.add_block(k.offsets[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(t)],
                    k.offsets[static_cast<std::size_t>(j)][s], a, q % 2 == 0 ? field.one() : field.neg(field.one()));
      }
    }
    k.d[static_cast<std::size_t>(j)] = b.build();
  }
  return k;
}

template <class F>
std::vector<int> koszul_homology_dims(const GradedModule<F>& m, const std::vector<Polynomial>& f, const Degree& g) {
  auto k = koszul_slice(m, f, g);
  const int r = static_cast<int>(f.size());
  std::vector<int> rk(static_cast<std::size_t>(r + 2), 0);
  for (int j = 1; j <= r; ++j) rk[static_cast<std::size_t>(j)] = static_cast<int>(rank(m.field(), k.d[static_cast<std::size_t>(j)]));
  std::vector<int> h(static_cast<std::size_t>(r + 1));
  for (int j = 0; j <= r; ++j)
    h[static_cast<std::size_t>(j)] = k.dims[static_cast<std::size_t>(j)] - rk[static_cast<std::size_t>(j)] - rk[static_cast<std::size_t>(j + 1)];
  return h;
}

template <class F>
int koszul_homology_dim(const GradedModule<F>& m, const std::vector<Polynomial>& f, int j, const Degree& g) {
  if (j < 0 || j > static_cast<int>(f.size())) return 0;
  return koszul_homology_dims(m, f, g)[static_cast<std::size_t>(j)];
}

template <class F>
std::vector<int> tor_dims(const GradedModule<F>& m, const Degree& g) {
  return koszul_homology_dims(m, variable_sequence(m.grading()), g);
}

template <class F>
int tor_dim(const GradedModule<F>& m, int j, const Degree& g) {
  return koszul_homology_dim(m, variable_sequence(m.grading()), j, g);
}

template <class F>
LatticeRegion betti_support(const GradedModule<F>& m, int j, const Box& box) {
  return LatticeRegion::from_predicate(box, [&](const Degree& g) { return tor_dim(m, j, g) > 0; });
}

template <class F>
std::vector<std::vector<Degree>> betti_supports(const GradedModule<F>& m) {
  const int n = m.grading().num_vars();
  std::vector<std::vector<Degree>> out(static_cast<std::size_t>(n + 1));
  BettiWindow w = m.betti_window();
  if (w.box.empty()) return out;
  for (const auto& g : w.box.points()) {
    auto t = tor_dims(m, g);
    for (int j = 0; j <= n; ++j)
      if (t[static_cast<std::size_t>(j)] > 0) out[static_cast<std::size_t>(j)].push_back(g);
  }
  return out;
}

template <class F>
int tor_inclusion_rank(const TruncatedModule<F>& n, int j, const Degree& g) {
  const GradedModule<F>& m = n.base();
  const F& field = m.field();
  auto f = variable_sequence(m.grading());
  const int r = static_cast<int>(f.size());
  if (j < 0 || j > r) return 0;
  auto kn = koszul_slice<F>(n, f, g);
  auto km = koszul_slice<F>(m, f, g);
  const auto js = static_cast<std::size_t>(j);
  // inclusion K_j(N) -> K_j(M): identity on blocks whose degree lies in S
  MatrixBuilder<F> phi(field, km.dims[js], kn.dims[js]);
  for (std::size_t s = 0; s < kn.subsets[js].size(); ++s) {
    Degree h = g;
    for (int i : kn.subsets[js][s]) h -= m.grading().degree(i);
    int dn = n.dim(h);
    for (int t = 0; t < dn; ++t) phi.add(km.offsets[js][s] + t, kn.offsets[js][s] + t, field.one());
  }
  SparseMatrix<F> cycles =
      j == 0 ? identity_matrix(field, kn.dims[0]) : kernel_basis(field, kn.d[js]);
  SparseMatrix<F> boundaries = j == r ? SparseMatrix<F>(km.dims[js], 0) : km.d[js + 1];
  return static_cast<int>(induced_rank(field, phi.build(), cycles, boundaries));
}

#define MGREG_INSTANTIATE(F)                                                                                 \
  template KoszulSlice<F> koszul_slice(const GradedModule<F>&, const std::vector<Polynomial>&, const Degree&); \
  template std::vector<int> koszul_homology_dims(const GradedModule<F>&, const std::vector<Polynomial>&,      \
                                                 const Degree&);                                            \
  template int koszul_homology_dim(const GradedModule<F>&, const std::vector<Polynomial>&, int, const Degree&); \
  template std::vector<int> tor_dims(const GradedModule<F>&, const Degree&);                                 \
  template int tor_dim(const GradedModule<F>&, int, const Degree&);                                          \
  template LatticeRegion betti_support(const GradedModule<F>&, int, const Box&);                             \
  template std::vector<std::vector<Degree>> betti_supports(const GradedModule<F>&);                          \
  template int tor_inclusion_rank(const TruncatedModule<F>&, int, const Degree&);

MGREG_INSTANTIATE(PrimeField)
MGREG_INSTANTIATE(RationalField)

}  // namespace mgreg
