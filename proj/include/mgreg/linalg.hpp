#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mgreg/field.hpp"

namespace mgreg {

/// Column-major sparse matrix over a field. Each column keeps its nonzero
/// entries sorted by row.
template <class F>
struct SparseMatrix {
  using Elem = typename F::Elem;
  using Column = std::vector<std::pair<int, Elem>>;

  int rows = 0;
  std::vector<Column> columns;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), columns(static_cast<std::size_t>(c)) {}

  int cols() const { return static_cast<int>(columns.size()); }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }
  Elem at(int r, int c, const F& field) const;
};

/// Accumulates (row, col, value) triplets; duplicates are summed.
template <class F>
class MatrixBuilder {
 public:
  using Elem = typename F::Elem;
  MatrixBuilder(const F& field, int rows, int cols) : field_(field), rows_(rows), cols_(cols) {}
  void add(int r, int c, const Elem& v);
  /// Adds `scale * block` with its top-left corner at (r0, c0).
  void add_block(int r0, int c0, const SparseMatrix<F>& block, const Elem& scale);
  SparseMatrix<F> build() const;

 private:
  const F& field_;
  int rows_, cols_;
  std::vector<std::vector<std::pair<int, Elem>>> cols_data_ = {};
  void ensure() { if (cols_data_.empty()) cols_data_.resize(static_cast<std::size_t>(cols_)); }
};

template <class F>
SparseMatrix<F> identity_matrix(const F& field, int n);

template <class F>
SparseMatrix<F> hconcat(const SparseMatrix<F>& a, const SparseMatrix<F>& b);

template <class F>
SparseMatrix<F> multiply(const F& field, const SparseMatrix<F>& a, const SparseMatrix<F>& b);

/// Rank, computed blockwise over the connected components of the bipartite
/// row/column incidence graph.
template <class F>
std::size_t rank(const F& field, const SparseMatrix<F>& m);

/// Columns form a basis of the right kernel.
template <class F>
SparseMatrix<F> kernel_basis(const F& field, const SparseMatrix<F>& m);

/// Rank of the map induced on homology: `phi` maps the source cycle space
/// spanned by `cycles` into a target whose boundaries are spanned by
/// `boundaries`.
template <class F>
std::size_t induced_rank(const F& field, const SparseMatrix<F>& phi, const SparseMatrix<F>& cycles,
                         const SparseMatrix<F>& boundaries);

}  // namespace mgreg
