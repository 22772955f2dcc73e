#pragma once

#include <vector>

#include "mgreg/module.hpp"

namespace mgreg {

/// Degree-g slice of the Koszul complex K(f; M): K_j = sum over |J| = j of
/// M_{g - deg f_J}, subsets in lexicographic order, differential
/// e_J -> sum_q (-1)^q f_{J_q} e_{J - J_q} (q counted from 0).
template <class F>
struct KoszulSlice {
  std::vector<std::vector<std::vector<int>>> subsets;  // subsets[j]
  std::vector<std::vector<int>> offsets;               // offsets[j][s]
  std::vector<int> dims;                               // dims[j] = dim K_j
  std::vector<SparseMatrix<F>> d;                      // d[j] : K_j -> K_{j-1}; d[0] empty
};

template <class F>
KoszulSlice<F> koszul_slice(const GradedModule<F>& m, const std::vector<Polynomial>& f, const Degree& g);

/// dim H_j(f; M)_g for j = 0..|f|.
template <class F>
std::vector<int> koszul_homology_dims(const GradedModule<F>& m, const std::vector<Polynomial>& f, const Degree& g);

template <class F>
int koszul_homology_dim(const GradedModule<F>& m, const std::vector<Polynomial>& f, int j, const Degree& g);

/// The variables X_1..X_n as polynomials.
std::vector<Polynomial> variable_sequence(const Grading& grading);

/// dim Tor_j(M, k)_g for j = 0..n.
template <class F>
std::vector<int> tor_dims(const GradedModule<F>& m, const Degree& g);

template <class F>
int tor_dim(const GradedModule<F>& m, int j, const Degree& g);

/// Supp Tor_j(M, k) on a box.
template <class F>
LatticeRegion betti_support(const GradedModule<F>& m, int j, const Box& box);

/// Supports T_0..T_n over the module's Betti window.
template <class F>
std::vector<std::vector<Degree>> betti_supports(const GradedModule<F>& m);

/// Rank of Tor_j(M_S, k)_g -> Tor_j(M, k)_g induced by the inclusion.
template <class F>
int tor_inclusion_rank(const TruncatedModule<F>& n, int j, const Degree& g);

}  // namespace mgreg
