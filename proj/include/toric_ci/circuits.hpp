#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "toric_ci/exactmat.hpp"
#include "toric_ci/lattice.hpp"

namespace toric_ci {

using IndexSet = std::vector<std::size_t>;  // sorted, 0-based

/// A primitive kernel vector of minimal support. The stored representative
/// of {u, -u} has its first nonzero entry positive.
struct Circuit {
  IntVector vector;
  IndexSet support;
  IndexSet positive_support;
  IndexSet negative_support;
  /// Support has m+1 elements, i.e. the minor formula applies to A itself
  /// rather than to a rank-deficient column subset.
  bool maximal = true;

  static Circuit from_vector(IntVector v, std::size_t m);
};

/// Canonical order: support size, then support lexicographically, then the
/// vector entries lexicographically.
bool canonical_less(const Circuit& a, const Circuit& b);

/// Negates v if its first nonzero entry is negative.
IntVector canonical_sign(IntVector v);

/// The circuit supported exactly on `support` (0-based), or nullopt if that
/// set is not a circuit support of cfg.
std::optional<Circuit> circuit_from_support(const Configuration& cfg,
                                            std::span<const std::size_t> support);

/// All circuits of the kernel lattice, once each, in canonical order.
std::vector<Circuit> enumerate_circuits(const Configuration& cfg);

/// supp+(u) in supp+(v) and supp-(u) in supp-(v). Throws DimensionError on
/// length mismatch.
bool is_conformal(std::span<const Integer> u, std::span<const Integer> v);

struct ConformalTerm {
  Rational coefficient;  // strictly positive
  IntVector circuit;     // a circuit or its negation, conformal to v
};

/// Writes the kernel vector v as a positive rational combination of circuits
/// conformal to v. Greedy: the first conformal circuit (in the given order)
/// inside the current support is subtracted with the largest coefficient that
/// keeps the remainder conformal, which zeroes at least one coordinate.
/// Throws DomainError if v is zero or not in the kernel.
std::vector<ConformalTerm> conformal_decomposition(const Configuration& cfg,
                                                   std::span<const Integer> v,
                                                   std::span<const Circuit> circuits);

/// Replaces every non-circuit column of a kernel basis by a conformal circuit
/// from its decomposition that keeps the columns independent (lexicographically
/// smallest support among the admissible ones). Circuit multiples become the
/// primitive circuit. Throws InvalidBasis.
IntMatrix circuitize_basis(const Configuration& cfg, const IntMatrix& b);
IntMatrix circuitize_basis(const Configuration& cfg, const IntMatrix& b,
                           std::span<const Circuit> circuits);

}  // namespace toric_ci
