#pragma once

// Slow, obviously-correct reference implementations used to cross-check the
// library. None of them call into toric_ci beyond the plain data types.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "toric_ci/citest.hpp"
#include "toric_ci/exactmat.hpp"

namespace oracle {

using toric_ci::IntMatrix;
using toric_ci::Integer;
using toric_ci::IntVector;
using toric_ci::Rational;

inline Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = m(i, k);
    const Integer term = m(0, j) * cofactor_det(minor);
    if (j % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

/// Reduced row echelon form over Q; returns the pivot columns.
inline std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& a) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t k = 0; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::vector<std::vector<Rational>> to_rational(const IntMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = Rational(m(i, j));
  return a;
}

inline std::size_t rational_rank(const IntMatrix& m) {
  auto a = to_rational(m);
  return rref(a).size();
}

/// Basis of the rational nullspace, scaled to primitive integer vectors.
inline std::vector<IntVector> rational_nullspace(const IntMatrix& m) {
  auto a = to_rational(m);
  const auto pivots = rref(a);
  std::vector<IntVector> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][free];
    Integer den = 1;
    for (const auto& q : v) den = lcm(den, q.get_den());
    IntVector iv;
    Integer g = 0;
    for (const auto& q : v) {
      iv.push_back(q.get_num() * (den / q.get_den()));
      g = gcd(g, iv.back());
    }
    for (auto& x : iv) x /= g;
    out.push_back(std::move(iv));
  }
  return out;
}

inline Integer factorial_binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Integer num = 1, den = 1;
  for (unsigned long i = 1; i <= n; ++i) num *= i;
  for (unsigned long i = 1; i <= k; ++i) den *= i;
  for (unsigned long i = 1; i <= n - k; ++i) den *= i;
  return num / den;
}

/// All circuits by testing every column subset: S is a circuit support iff
/// the nullspace of A_S is one-dimensional with a nowhere-zero generator.
/// Returned with the first nonzero entry positive, sorted lexicographically
/// by (support size, support, vector).
inline std::vector<IntVector> brute_force_circuits(const IntMatrix& a) {
  const std::size_t n = a.cols();
  std::vector<std::pair<std::vector<std::size_t>, IntVector>> found;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < n; ++j)
      if (mask >> j & 1) s.push_back(j);
    const auto ns = rational_nullspace(a.select_columns(s));
    if (ns.size() != 1) continue;
    if (std::any_of(ns[0].begin(), ns[0].end(), [](const Integer& x) { return x == 0; }))
      continue;
    IntVector v(n);
    for (std::size_t k = 0; k < s.size(); ++k) v[s[k]] = ns[0][k];
    if (ns[0][0] < 0)
      for (auto& x : v) x = -x;
    found.emplace_back(std::move(s), std::move(v));
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    if (x.first != y.first) return x.first < y.first;
    return x.second < y.second;
  });
  std::vector<IntVector> out;
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

/// Literal reading of the criterion: is there a row set R and a column set C
/// with |R| < |C| such that every column of C has a + and a - inside R?
inline bool has_violation(const toric_ci::SignMatrix& s) {
  const std::size_t n = s.rows(), r = s.cols();
  for (std::uint32_t rm = 0; rm < (1u << n); ++rm) {
    const int nr = __builtin_popcount(rm);
    int mixed = 0;
    for (std::size_t j = 0; j < r; ++j) {
      bool pos = false, neg = false;
      for (std::size_t i = 0; i < n; ++i) {
        if (!(rm >> i & 1)) continue;
        pos = pos || s(i, j) > 0;
        neg = neg || s(i, j) < 0;
      }
      mixed += pos && neg;
    }
    // Taking every column mixed inside R is optimal for a fixed R.
    if (mixed > nr) return true;
  }
  return false;
}

inline toric_ci::SignMatrix random_signs(std::mt19937_64& rng, std::size_t rows,
                                         std::size_t cols) {
  std::uniform_int_distribution<int> d(-1, 1);
  toric_ci::SignMatrix s(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) s.set(i, j, d(rng));
  return s;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                               long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace oracle
