#include "toric_ci/exactmat.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

#include "toric_ci/errors.hpp"

namespace toric_ci {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows,
                               std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("ragged row list");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns,
                                  std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) m.set_column(j, columns[j]);
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<IntVector> IntMatrix::columns() const {
  std::vector<IntVector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

void IntMatrix::set_column(std::size_t j, const IntVector& v) {
  if (v.size() != rows_) throw DimensionError("column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::select_columns(std::span<const std::size_t> idx) const {
  IntMatrix s(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) s(i, k) = (*this)(i, idx[k]);
  return s;
}

IntMatrix IntMatrix::select_rows(std::span<const std::size_t> idx) const {
  IntMatrix s(idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t j = 0; j < cols_; ++j) s(k, j) = (*this)(idx[k], j);
  return s;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Integer& x) { return sgn(x) == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
    os << '\n';
  }
  return os;
}

RatVector::RatVector(std::vector<Rational> entries)
    : entries_(std::move(entries)) {
  for (auto& q : entries_) q.canonicalize();
}

RatVector::RatVector(const IntVector& v) : entries_(v.size()) {
  for (std::size_t i = 0; i < v.size(); ++i) entries_[i] = Rational(v[i]);
}

void RatVector::set(std::size_t i, Rational value) {
  value.canonicalize();
  entries_.at(i) = std::move(value);
}

bool RatVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& q) { return sgn(q) == 0; });
}

void RatVector::add_scaled(const Rational& scale, const IntVector& v) {
  if (v.size() != entries_.size()) throw DimensionError("vector length mismatch");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    entries_[i] += scale * Rational(v[i]);
    entries_[i].canonicalize();
  }
}

namespace {

// Fraction-free row echelon in place. Returns the rank; `swaps` counts row
// exchanges so callers can recover the determinant sign.
std::size_t bareiss(std::vector<Integer>& a, std::size_t rows, std::size_t cols,
                    std::size_t& swaps) {
  auto at = [&](std::size_t i, std::size_t j) -> Integer& {
    return a[i * cols + j];
  };
  Integer prev = 1;
  std::size_t r = 0;
  swaps = 0;
  Integer t;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(at(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
      ++swaps;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = at(r, c) * at(i, j) - at(i, c) * at(r, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

// Unimodular (Euclidean) row reduction over the first `ncols` columns.
// When `reduce_above` is set the pivots are made positive and the entries
// above them reduced, yielding Hermite normal form. Returns the rank.
std::size_t euclid_echelon(std::vector<IntVector>& rows, std::size_t ncols,
                           bool reduce_above) {
  std::size_t r = 0;
  Integer q;
  auto sub_multiple = [](IntVector& dst, const Integer& k, const IntVector& src) {
    for (std::size_t j = 0; j < dst.size(); ++j)
      if (sgn(src[j]) != 0) dst[j] -= k * src[j];
  };
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    bool have_pivot = false;
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (sgn(rows[i][c]) == 0) continue;
        if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;
      have_pivot = true;
      std::swap(rows[r], rows[best]);
      bool cleared = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (sgn(rows[i][c]) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        sub_multiple(rows[i], q, rows[r]);
        if (sgn(rows[i][c]) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!have_pivot) continue;
    if (reduce_above) {
      if (sgn(rows[r][c]) < 0)
        for (auto& x : rows[r]) x = -x;
      for (std::size_t i = 0; i < r; ++i) {
        if (sgn(rows[i][c]) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        sub_multiple(rows[i], q, rows[r]);
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

Integer det(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("det of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<Integer> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  std::size_t swaps = 0;
  if (bareiss(a, n, n, swaps) < n) return 0;
  Integer d = a[n * n - 1];
  return swaps % 2 ? Integer(-d) : d;
}

std::size_t rank(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  std::vector<Integer> a(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i * m.cols() + j] = m(i, j);
  std::size_t swaps = 0;
  return bareiss(a, m.rows(), m.cols(), swaps);
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  std::vector<IntVector> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  const std::size_t r = euclid_echelon(rows, m.cols(), true);
  rows.resize(r);
  return IntMatrix::from_rows(rows, m.cols());
}

IntMatrix kernel_basis(const IntMatrix& m) {
  const std::size_t nrows = m.rows();
  const std::size_t n = m.cols();
  // Rows of [m^T | I]; unimodular reduction of the left block leaves the
  // kernel lattice basis in the right block of the zeroed rows.
  std::vector<IntVector> t(n, IntVector(nrows + n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < nrows; ++j) t[i][j] = m(j, i);
    t[i][nrows + i] = 1;
  }
  const std::size_t r = euclid_echelon(t, nrows, false);
  IntMatrix k(n - r, n);
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k(i - r, j) = t[i][nrows + j];
  if (k.rows() == 0) return IntMatrix(n, 0);
  return hermite_normal_form(k).transpose();
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntVector primitive_part(std::span<const Integer> v) {
  const Integer g = content(v);
  if (sgn(g) == 0) throw DomainError("primitive part of the zero vector");
  IntVector out(v.begin(), v.end());
  if (g != 1)
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

Integer gcd_maximal_minors(const IntMatrix& m) {
  const std::size_t n = m.rows();
  const std::size_t k = m.cols();
  if (n < k) throw DimensionError("gcd_maximal_minors needs rows >= cols");
  if (k == 0) return 1;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  Integer g = 0;
  for (;;) {
    const Integer d = det(m.select_rows(idx));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    if (g == 1) return g;
    // next k-combination of {0..n-1}
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return g;
}

IntVector EchelonBasis::reduce(std::span<const Integer> v) const {
  if (v.size() != dim_) throw DimensionError("echelon vector length mismatch");
  IntVector w(v.begin(), v.end());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (sgn(w[p]) == 0) continue;
    const Integer wp = w[p];
    const IntVector& row = rows_[k];
    for (std::size_t j = 0; j < dim_; ++j) {
      w[j] *= row[p];
      if (sgn(row[j]) != 0) w[j] -= wp * row[j];
    }
    const Integer g = content(w);
    if (sgn(g) == 0) return w;
    if (g != 1)
      for (auto& x : w) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return w;
}

bool EchelonBasis::is_independent(std::span<const Integer> v) const {
  const IntVector w = reduce(v);
  return std::any_of(w.begin(), w.end(), [](const Integer& x) { return sgn(x) != 0; });
}

bool EchelonBasis::add(std::span<const Integer> v) {
  IntVector w = reduce(v);
  auto it = std::find_if(w.begin(), w.end(), [](const Integer& x) { return sgn(x) != 0; });
  if (it == w.end()) return false;
  pivots_.push_back(static_cast<std::size_t>(it - w.begin()));
  rows_.push_back(std::move(w));
  return true;
}

IntVector mat_vec(const IntMatrix& m, std::span<const Integer> v) {
  if (v.size() != m.cols()) throw DimensionError("matrix-vector shape");
  IntVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(v[j]) != 0) out[i] += m(i, j) * v[j];
  return out;
}

IntVector int_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

std::string to_string(std::span<const Integer> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace toric_ci
