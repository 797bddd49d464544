#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "toric_ci/circuits.hpp"
#include "toric_ci/citest.hpp"
#include "toric_ci/exactmat.hpp"
#include "toric_ci/lattice.hpp"

namespace toric_ci {

/// Subtracts a_1 from every entry. Throws DomainError unless the input is
/// non-decreasing, has at least 3 entries and the result has gcd 1.
IntVector normalize_curve(const IntVector& a);

/// The 2 x n configuration with rows (1,...,1) and the normalized a.
Configuration monomial_curve(const IntVector& a);

/// n x (n-2) kernel matrix whose column j has a_{j+2}-a_{j+1} in row 1,
/// -a_{j+2} in row j+1 and a_{j+1} in row j+2 (1-based, normalized a).
/// Every mixed submatrix has more rows than columns, so the basis ideal is
/// a complete intersection. A*B = 0 and full rank are checked here.
IntMatrix curve_ci_basis(const IntVector& a);

/// Rows 1, t, t^2, ..., t^{m-1} at 0 < t_1 < ... < t_n.
Configuration cyclic_polytope(std::size_t m, const IntVector& t);
/// t = (1, 2, ..., n).
IntVector default_cyclic_parameters(std::size_t n);

/// Homogenized parabola points (1, i, i^2), i = 0..n-1: a convex n-gon in
/// counterclockwise order.
Configuration convex_polygon(std::size_t n);

/// The circuit on four increasing vertex indices (0-based) of a convex
/// polygon configuration; its signs are +,-,+,- along the quadruple.
Circuit quadruple_circuit(const Configuration& polygon,
                          const std::array<std::size_t, 4>& idx);

/// The 10 x 7 sign pattern built from seven quadruple circuits of a convex
/// decagon, all of whose mixed submatrices have at least as many rows as
/// columns.
SignMatrix decagon_sign_matrix();
/// Supports of the columns of decagon_sign_matrix(), 0-based.
std::vector<std::array<std::size_t, 4>> decagon_quadruples();

/// Number of (d+2)-subsets of n points versus the number of them the columns
/// of a circuit basis can keep non-mixed.
struct BoundEvaluation {
  std::size_t d = 0;
  std::size_t n = 0;
  Integer lhs;  // C(n, d+2)
  Integer rhs;  // 2 (n-d-1) C(n-2, d)
  bool holds = false;
};

BoundEvaluation bound_eval(std::size_t d, std::size_t n);

/// Smallest n from which lhs > rhs holds for good. lhs/rhs reduces to a
/// quadratic in n; the scan stops once that quadratic is positive and
/// increasing.
std::size_t bound_threshold(std::size_t d);

/// 2(r^2 - r + 1); throws DomainError for r < 3.
std::size_t codim3_bound(std::size_t r);

}  // namespace toric_ci
