#include "mgreg/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace mgreg {

template <class F>
std::size_t SparseMatrix<F>::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

template <class F>
typename F::Elem SparseMatrix<F>::at(int r, int c, const F& field) const {
  for (const auto& [row, v] : columns[static_cast<std::size_t>(c)])
    if (row == r) return v;
  return field.zero();
}

template <class F>
void MatrixBuilder<F>::add(int r, int c, const Elem& v) {
  if (field_.is_zero(v)) return;
  ensure();
  cols_data_[static_cast<std::size_t>(c)].emplace_back(r, v);
}

template <class F>
void MatrixBuilder<F>::add_block(int r0, int c0, const SparseMatrix<F>& block, const Elem& scale) {
  if (field_.is_zero(scale)) return;
  ensure();
  for (int c = 0; c < block.cols(); ++c)
    for (const auto& [r, v] : block.columns[static_cast<std::size_t>(c)])
      cols_data_[static_cast<std::size_t>(c0 + c)].emplace_back(r0 + r, field_.mul(scale, v));
}

template <class F>
SparseMatrix<F> MatrixBuilder<F>::build() const {
  SparseMatrix<F> m(rows_, cols_);
  if (cols_data_.empty()) return m;
  for (std::size_t c = 0; c < cols_data_.size(); ++c) {
    auto entries = cols_data_[c];
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    auto& out = m.columns[c];
    for (const auto& [r, v] : entries) {
      if (!out.empty() && out.back().first == r) {
        out.back().second = field_.add(out.back().second, v);
        if (field_.is_zero(out.back().second)) out.pop_back();
      } else {
        out.emplace_back(r, v);
      }
    }
  }
  return m;
}

template <class F>
SparseMatrix<F> identity_matrix(const F& field, int n) {
  SparseMatrix<F> m(n, n);
  for (int i = 0; i < n; ++i) m.columns[static_cast<std::size_t>(i)].emplace_back(i, field.one());
  return m;
}

template <class F>
SparseMatrix<F> hconcat(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  SparseMatrix<F> m = a;
  m.rows = std::max(a.rows, b.rows);
  m.columns.insert(m.columns.end(), b.columns.begin(), b.columns.end());
  return m;
}

template <class F>
SparseMatrix<F> multiply(const F& field, const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  MatrixBuilder<F> out(field, a.rows, b.cols());
  for (int c = 0; c < b.cols(); ++c)
    for (const auto& [k, v] : b.columns[static_cast<std::size_t>(c)])
      for (const auto& [r, w] : a.columns[static_cast<std::size_t>(k)]) out.add(r, c, field.mul(w, v));
  return out.build();
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

struct Component {
  std::vector<int> rows;
  std::vector<int> cols;
};

// Connected components of the bipartite incidence graph; columns without
// entries are skipped. Components are ordered by their smallest column.
template <class F>
std::vector<Component> components(const SparseMatrix<F>& m) {
  const int r = m.rows;
  const int c = m.cols();
  UnionFind uf(r + c);
  for (int j = 0; j < c; ++j)
    for (const auto& e : m.columns[static_cast<std::size_t>(j)]) uf.unite(r + j, e.first);
  std::vector<int> comp_of(static_cast<std::size_t>(r + c), -1);
  std::vector<Component> out;
  for (int j = 0; j < c; ++j) {
    if (m.columns[static_cast<std::size_t>(j)].empty()) continue;
    int root = uf.find(r + j);
    int& id = comp_of[static_cast<std::size_t>(root)];
    if (id < 0) {
      id = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(id)].cols.push_back(j);
  }
  for (int i = 0; i < r; ++i) {
    int id = comp_of[static_cast<std::size_t>(uf.find(i))];
    if (id >= 0) out[static_cast<std::size_t>(id)].rows.push_back(i);
  }
  return out;
}

template <class F>
struct Dense {
  using Elem = typename F::Elem;
  int rows, cols;
  std::vector<Elem> a;
  Dense(const F& field, int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, field.zero()) {}
  Elem& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
};

template <class F>
Dense<F> extract(const F& field, const SparseMatrix<F>& m, const Component& comp) {
  std::vector<int> local(static_cast<std::size_t>(m.rows), -1);
  for (std::size_t i = 0; i < comp.rows.size(); ++i) local[static_cast<std::size_t>(comp.rows[i])] = static_cast<int>(i);
  Dense<F> d(field, static_cast<int>(comp.rows.size()), static_cast<int>(comp.cols.size()));
  for (std::size_t j = 0; j < comp.cols.size(); ++j)
    for (const auto& [r, v] : m.columns[static_cast<std::size_t>(comp.cols[j])])
      d(local[static_cast<std::size_t>(r)], static_cast<int>(j)) = v;
  return d;
}

// Reduced row echelon form in place; returns pivot columns in order.
template <class F>
std::vector<int> rref(const F& field, Dense<F>& d) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < d.cols && row < d.rows; ++col) {
    int sel = -1;
    for (int i = row; i < d.rows; ++i)
      if (!field.is_zero(d(i, col))) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < d.cols; ++j) std::swap(d(sel, j), d(row, j));
    auto inv = field.inv(d(row, col));
    for (int j = col; j < d.cols; ++j) d(row, j) = field.mul(d(row, j), inv);
    for (int i = 0; i < d.rows; ++i) {
      if (i == row || field.is_zero(d(i, col))) continue;
      auto f = d(i, col);
      for (int j = col; j < d.cols; ++j)
        if (!field.is_zero(d(row, j))) d(i, j) = field.sub(d(i, j), field.mul(f, d(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
std::size_t dense_rank(const F& field, Dense<F>& d) {
  std::size_t rank = 0;
  int row = 0;
  for (int col = 0; col < d.cols && row < d.rows; ++col) {
    int sel = -1;
    for (int i = row; i < d.rows; ++i)
      if (!field.is_zero(d(i, col))) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = col; j < d.cols; ++j) std::swap(d(sel, j), d(row, j));
    auto inv = field.inv(d(row, col));
    for (int i = row + 1; i < d.rows; ++i) {
      if (field.is_zero(d(i, col))) continue;
      auto f = field.mul(d(i, col), inv);
      for (int j = col; j < d.cols; ++j)
        if (!field.is_zero(d(row, j))) d(i, j) = field.sub(d(i, j), field.mul(f, d(row, j)));
    }
    ++rank;
    ++row;
  }
  return rank;
}

// Fraction-free (Bareiss) elimination for the rational case: rows are first
// cleared of denominators, which does not change the rank.
std::size_t bareiss_rank(Dense<RationalField>& d) {
  std::vector<mpz_class> a(d.a.size());
  for (int i = 0; i < d.rows; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < d.cols; ++j) {
      const mpq_class& q = d(i, j);
      if (sgn(q) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    for (int j = 0; j < d.cols; ++j) {
      const mpq_class& q = d(i, j);
      a[static_cast<std::size_t>(i) * d.cols + j] = sgn(q) == 0 ? mpz_class(0) : mpz_class(q.get_num() * (l / q.get_den()));
    }
  }
  auto at = [&](int i, int j) -> mpz_class& { return a[static_cast<std::size_t>(i) * d.cols + j]; };
  mpz_class prev = 1;
  int row = 0;
  for (int col = 0; col < d.cols && row < d.rows; ++col) {
    int sel = -1;
    for (int i = row; i < d.rows; ++i)
      if (sgn(at(i, col)) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < d.cols; ++j) std::swap(at(sel, j), at(row, j));
    for (int i = row + 1; i < d.rows; ++i) {
      for (int j = col + 1; j < d.cols; ++j) {
        mpz_class v = at(row, col) * at(i, j) - at(i, col) * at(row, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = v;
      }
      at(i, col) = 0;
    }
    prev = at(row, col);
    ++row;
  }
  return static_cast<std::size_t>(row);
}

template <class F>
std::size_t component_rank(const F& field, Dense<F>& d) {
  return dense_rank(field, d);
}

template <>
std::size_t component_rank<RationalField>(const RationalField&, Dense<RationalField>& d) {
  return bareiss_rank(d);
}

}  // namespace

template <class F>
std::size_t rank(const F& field, const SparseMatrix<F>& m) {
  std::size_t total = 0;
  for (const auto& comp : components(m)) {
    if (comp.cols.size() == 1 || comp.rows.size() == 1) {
      total += 1;  // a connected component with an entry has rank at least one
      continue;
    }
    Dense<F> d = extract(field, m, comp);
    total += component_rank(field, d);
  }
  return total;
}

template <class F>
SparseMatrix<F> kernel_basis(const F& field, const SparseMatrix<F>& m) {
  struct Vec {
    int key;
    typename SparseMatrix<F>::Column entries;
  };
  std::vector<Vec> vecs;
  for (int j = 0; j < m.cols(); ++j)
    if (m.columns[static_cast<std::size_t>(j)].empty()) vecs.push_back({j, {{j, field.one()}}});
  for (const auto& comp : components(m)) {
    Dense<F> d = extract(field, m, comp);
    std::vector<int> piv = rref(field, d);
    std::vector<char> is_piv(comp.cols.size(), 0);
    for (int p : piv) is_piv[static_cast<std::size_t>(p)] = 1;
    for (int f = 0; f < d.cols; ++f) {
      if (is_piv[static_cast<std::size_t>(f)]) continue;
      typename SparseMatrix<F>::Column v;
      v.emplace_back(comp.cols[static_cast<std::size_t>(f)], field.one());
      for (std::size_t r = 0; r < piv.size(); ++r) {
        auto x = d(static_cast<int>(r), f);
        if (!field.is_zero(x)) v.emplace_back(comp.cols[static_cast<std::size_t>(piv[r])], field.neg(x));
      }
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      vecs.push_back({comp.cols[static_cast<std::size_t>(f)], std::move(v)});
    }
  }
  std::sort(vecs.begin(), vecs.end(), [](const Vec& a, const Vec& b) { return a.key < b.key; });
  SparseMatrix<F> k(m.cols(), static_cast<int>(vecs.size()));
  for (std::size_t i = 0; i < vecs.size(); ++i) k.columns[i] = std::move(vecs[i].entries);
  return k;
}

template <class F>
std::size_t induced_rank(const F& field, const SparseMatrix<F>& phi, const SparseMatrix<F>& cycles,
                         const SparseMatrix<F>& boundaries) {
  if (cycles.cols() == 0) return 0;
  SparseMatrix<F> img = multiply(field, phi, cycles);
  img.rows = std::max(img.rows, boundaries.rows);
  SparseMatrix<F> b = boundaries;
  b.rows = img.rows;
  return rank(field, hconcat(img, b)) - rank(field, b);
}

#define MGREG_INSTANTIATE(F)                                                                          \
  template struct SparseMatrix<F>;                                                                    \
  template class MatrixBuilder<F>;                                                                    \
  template SparseMatrix<F> identity_matrix<F>(const F&, int);                                         \
  template SparseMatrix<F> hconcat<F>(const SparseMatrix<F>&, const SparseMatrix<F>&);                \
  template SparseMatrix<F> multiply<F>(const F&, const SparseMatrix<F>&, const SparseMatrix<F>&);     \
  template std::size_t rank<F>(const F&, const SparseMatrix<F>&);                                     \
  template SparseMatrix<F> kernel_basis<F>(const F&, const SparseMatrix<F>&);                         \
  template std::size_t induced_rank<F>(const F&, const SparseMatrix<F>&, const SparseMatrix<F>&,      \
                                       const SparseMatrix<F>&);

MGREG_INSTANTIATE(PrimeField)
MGREG_INSTANTIATE(RationalField)

}  // namespace mgreg
