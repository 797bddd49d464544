#pragma once

// Complete-intersection test for basis ideals via mixed submatrices:
// J_B is a complete intersection iff no mixed n' x r' submatrix of B has
// n' < r'. Only the sign pattern of B matters.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "toric_ci/circuits.hpp"
#include "toric_ci/exactmat.hpp"

namespace toric_ci {

/// n x r matrix with entries in {-1, 0, +1}.
class SignMatrix {
 public:
  SignMatrix() = default;
  SignMatrix(std::size_t rows, std::size_t cols);
  SignMatrix(std::initializer_list<std::initializer_list<int>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Stores the sign of `value`.
  void set(std::size_t i, std::size_t j, int value);

  SignMatrix select_columns(std::span<const std::size_t> idx) const;
  IntMatrix to_int() const;

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int8_t> data_;
};

struct MixedWitness {
  IndexSet rows;
  IndexSet cols;
};

SignMatrix sign_pattern(const IntMatrix& b);

/// Every column has a +1 and a -1.
bool is_mixed(const SignMatrix& s);

/// Checks that the submatrix on (rows, cols) is mixed and has fewer rows
/// than columns.
bool is_valid_witness(const SignMatrix& s, const MixedWitness& w);

/// Positive and negative row sets of one column, as bit masks.
struct SignColumn {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
};

/// Maximum row count the bit-mask search supports.
inline constexpr std::size_t kMaxSignRows = 64;

/// Throws DimensionError for more than kMaxSignRows rows.
std::vector<SignColumn> sign_columns(const SignMatrix& s);

/// Column-subset search for a mixed submatrix with fewer rows than columns.
/// Subsets are scanned by increasing size; for each one a branch-and-bound
/// hitting-set search looks for |C|-1 rows that mix every column of C.
/// When `required` is set only subsets containing that column are examined.
/// Returned witnesses have been checked with is_valid_witness.
std::optional<MixedWitness> find_violation(std::span<const SignColumn> cols,
                                           std::optional<std::size_t> required = {});
std::optional<MixedWitness> find_violation(const SignMatrix& s);

bool is_complete_intersection(const SignMatrix& s);
bool is_complete_intersection(const IntMatrix& b);

/// Exhaustive scan over all (row subset, column subset) pairs. Reference
/// semantics for find_violation. Throws SizeCapExceeded if rows > max_rows.
std::optional<MixedWitness> brute_force_violation(const SignMatrix& s,
                                                  std::size_t max_rows = 12);

/// First pair (j, j+1) of adjacent rows with no zero entry. For circuit
/// matrices with alternating column signs such a pair is a 2 x r mixed
/// submatrix, and <x_j, x_{j+1}> is an associated prime of J_B.
std::optional<std::pair<std::size_t, std::size_t>> find_two_full_rows(const SignMatrix& s);

}  // namespace toric_ci
