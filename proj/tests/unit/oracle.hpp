#pragma once

// Independent brute-force reference computations used by the unit and
// acceptance tests. Nothing here calls into the library's algorithms beyond
// plain data types.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "mgreg/int_vec.hpp"

namespace oracle {

using mgreg::IntVec;

/// All exponent vectors in {0..bound}^n.
inline std::vector<IntVec> exponent_cube(std::size_t n, long bound) {
  std::vector<IntVec> out;
  IntVec e(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      out.push_back(e);
      return;
    }
    for (long x = 0; x <= bound; ++x) {
      e[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

inline IntVec degree_of(const std::vector<IntVec>& cols, const IntVec& e) {
  IntVec d(cols[0].size());
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) d[j] += e[i] * cols[i][j];
  return d;
}

/// Monomials of a given degree found by scanning a cube of exponents.
inline std::set<IntVec> monomials(const std::vector<IntVec>& cols, const IntVec& g, long bound) {
  std::set<IntVec> out;
  for (const auto& e : exponent_cube(cols.size(), bound))
    if (degree_of(cols, e) == g) out.insert(e);
  return out;
}

/// Sums over all l-subsets of the columns.
inline std::set<IntVec> subset_sums(const std::vector<IntVec>& cols, int l) {
  std::set<IntVec> out;
  const std::size_t n = cols.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != l) continue;
    IntVec s(cols[0].size());
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s += cols[i];
    out.insert(s);
  }
  return out;
}

/// Rank of a dense matrix modulo p by textbook elimination.
inline int rank_mod_p(std::vector<std::vector<long>> a, long p) {
  int rank = 0;
  const int rows = static_cast<int>(a.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(a[0].size());
  for (auto& row : a)
    for (auto& x : row) x = ((x % p) + p) % p;
  auto inv = [&](long x) {
    long r = 1, b = x, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    long iv = inv(a[rank][c]);
    for (auto& x : a[rank]) x = x * iv % p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      long f = a[r][c];
      for (int k = 0; k < cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

inline long binom(long n, long k) {
  if (k < 0 || n < k) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Generalized binomial coefficient binom(x, k) for any integer x.
inline long gbinom(long x, long k) {
  if (k < 0) return 0;
  long num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= (x - i);
    den *= (i + 1);
  }
  return num / den;
}

}  // namespace oracle
