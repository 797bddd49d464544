#pragma once

// Exact integer and rational linear algebra. Everything here works on
// arbitrary-precision GMP integers; no floating point is involved.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace toric_ci {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

/// Dense row-major integer matrix. Zero-sized dimensions are allowed so
/// that an empty kernel can be represented as an n x 0 matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix from_rows(const std::vector<IntVector>& rows,
                             std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& columns,
                                std::size_t rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Integer& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  std::vector<IntVector> columns() const;
  void set_column(std::size_t j, const IntVector& v);

  IntMatrix transpose() const;
  IntMatrix select_columns(std::span<const std::size_t> idx) const;
  IntMatrix select_rows(std::span<const std::size_t> idx) const;

  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Rational vector whose entries are always in lowest terms with a positive
/// denominator.
class RatVector {
 public:
  RatVector() = default;
  explicit RatVector(std::size_t n) : entries_(n) {}
  explicit RatVector(std::vector<Rational> entries);
  explicit RatVector(const IntVector& v);

  std::size_t size() const noexcept { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  void set(std::size_t i, Rational value);
  const std::vector<Rational>& entries() const noexcept { return entries_; }
  bool is_zero() const;

  /// this += scale * v
  void add_scaled(const Rational& scale, const IntVector& v);

  friend bool operator==(const RatVector&, const RatVector&) = default;

 private:
  std::vector<Rational> entries_;
};

/// Fraction-free (Bareiss) determinant. Throws DimensionError if not square.
Integer det(const IntMatrix& m);

/// Rank over Q by fraction-free elimination.
std::size_t rank(const IntMatrix& m);

/// Row-style Hermite normal form of the lattice generated by the rows of m.
/// Only the nonzero rows are returned; pivots are positive and the entries
/// above each pivot are reduced into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Z-basis of the saturated integer kernel {v : m v = 0}, one column per
/// basis vector, in Hermite normal form (as rows of the transpose).
IntMatrix kernel_basis(const IntMatrix& m);

/// gcd of all cols x cols minors of m (rows >= cols). 0 iff rank deficient.
Integer gcd_maximal_minors(const IntMatrix& m);

/// gcd of the absolute values of the entries (0 for the zero vector).
Integer content(std::span<const Integer> v);

/// v divided by its content. Throws DomainError on the zero vector.
IntVector primitive_part(std::span<const Integer> v);

IntVector mat_vec(const IntMatrix& m, std::span<const Integer> v);

/// Incrementally maintained row echelon form of a set of integer vectors.
/// Each stored row is primitive and vanishes at the pivots of earlier rows,
/// so membership tests are a single fraction-free reduction pass.
class EchelonBasis {
 public:
  EchelonBasis() = default;
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t dim() const noexcept { return dim_; }

  /// Adds v if it is independent of the current rows; returns whether it was.
  bool add(std::span<const Integer> v);
  bool is_independent(std::span<const Integer> v) const;

 private:
  IntVector reduce(std::span<const Integer> v) const;

  std::size_t dim_ = 0;
  std::vector<IntVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Integer vectors from machine integers; convenient for literals.
IntVector int_vector(std::initializer_list<long> values);

std::string to_string(std::span<const Integer> v);

}  // namespace toric_ci
