#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "toric_ci/exactmat.hpp"

namespace toric_ci {

struct ValidationOptions {
  /// When false, a configuration whose row span misses (1,...,1) is accepted
  /// with a warning instead of raising NotHomogeneous.
  bool require_homogeneity = true;
  bool allow_repeated_columns = false;
};

/// A validated point configuration: an m x n integer matrix of rank m whose
/// columns are the points a_1..a_n.
class Configuration {
 public:
  /// Throws InvalidConfiguration (rank deficient, empty, repeated columns)
  /// or NotHomogeneous.
  static Configuration validate(IntMatrix a, const ValidationOptions& opts = {},
                                std::vector<std::string> labels = {});

  const IntMatrix& matrix() const noexcept { return a_; }
  std::size_t m() const noexcept { return a_.rows(); }
  std::size_t n() const noexcept { return a_.cols(); }
  std::size_t dimension() const noexcept { return a_.rows() - 1; }
  std::size_t codimension() const noexcept { return a_.cols() - a_.rows(); }

  bool homogeneous() const noexcept { return homogeneous_; }
  /// Index of the lattice spanned by the columns inside Z^m (1 iff they span).
  const Integer& column_lattice_index() const noexcept { return column_index_; }
  bool spans_lattice() const { return column_index_ == 1; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

 private:
  Configuration() = default;

  IntMatrix a_;
  bool homogeneous_ = true;
  Integer column_index_ = 1;
  std::vector<std::string> labels_;
  std::vector<std::string> warnings_;
};

/// n x r matrix whose columns form a Q-basis of the kernel lattice, with the
/// index of the lattice they span.
struct LatticeBasis {
  IntMatrix basis;
  Integer index_g;
};

/// Checks that `b` is a full-rank kernel matrix of cfg (every column mixed
/// when cfg is homogeneous) and returns it with its index. Throws InvalidBasis.
LatticeBasis make_basis(const Configuration& cfg, IntMatrix b);

/// Saturated Z-basis of the kernel lattice; its index is always 1.
LatticeBasis kernel_lattice(const Configuration& cfg);

Integer lattice_index(const Configuration& cfg, const IntMatrix& b);

/// True iff the basis ideal agrees with the toric ideal after inverting all
/// variables, i.e. the index is 1.
bool laurent_equal(const Configuration& cfg, const IntMatrix& b);

/// x^{v+} - x^{v-} rendered with variables x1..xn, e.g. "x1*x3 - x2^2".
std::string binomial_string(std::span<const Integer> v);
std::vector<std::string> binomial_strings(const IntMatrix& b);

/// Has a strictly positive and a strictly negative entry.
bool is_mixed_vector(std::span<const Integer> v);

}  // namespace toric_ci
