#include "toric_ci/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "toric_ci/errors.hpp"

namespace toric_ci {

Configuration Configuration::validate(IntMatrix a, const ValidationOptions& opts,
                                      std::vector<std::string> labels) {
  if (a.rows() == 0 || a.cols() == 0)
    throw InvalidConfiguration("configuration matrix is empty");
  if (!labels.empty() && labels.size() != a.cols())
    throw InvalidConfiguration("label count does not match column count");
  if (rank(a) != a.rows())
    throw InvalidConfiguration("configuration matrix has rank below its row count");

  Configuration cfg;
  if (!opts.allow_repeated_columns) {
    std::set<IntVector> seen;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!seen.insert(a.column(j)).second)
        throw InvalidConfiguration("repeated column " + std::to_string(j + 1));
  }

  IntMatrix with_ones(a.rows() + 1, a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) with_ones(i, j) = a(i, j);
  for (std::size_t j = 0; j < a.cols(); ++j) with_ones(a.rows(), j) = 1;
  cfg.homogeneous_ = rank(with_ones) == a.rows();
  if (!cfg.homogeneous_) {
    if (opts.require_homogeneity)
      throw NotHomogeneous("(1,...,1) is not in the row span of the configuration");
    cfg.warnings_.push_back("configuration is not homogeneous");
  }

  // Columns as generators: the HNF has m pivots whose product is the index.
  const IntMatrix h = hermite_normal_form(a.transpose());
  cfg.column_index_ = 1;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t j = 0;
    while (sgn(h(i, j)) == 0) ++j;
    cfg.column_index_ *= h(i, j);
  }
  if (cfg.column_index_ != 1)
    cfg.warnings_.push_back("columns span a sublattice of index " +
                            cfg.column_index_.get_str() + " in Z^m");

  cfg.a_ = std::move(a);
  cfg.labels_ = std::move(labels);
  return cfg;
}

bool is_mixed_vector(std::span<const Integer> v) {
  bool pos = false, neg = false;
  for (const auto& x : v) {
    pos = pos || sgn(x) > 0;
    neg = neg || sgn(x) < 0;
  }
  return pos && neg;
}

namespace {

void check_basis(const Configuration& cfg, const IntMatrix& b) {
  if (b.rows() != cfg.n())
    throw InvalidBasis("basis has " + std::to_string(b.rows()) +
                       " rows, expected " + std::to_string(cfg.n()));
  if (b.cols() != cfg.codimension())
    throw InvalidBasis("basis has " + std::to_string(b.cols()) +
                       " columns, expected codimension " +
                       std::to_string(cfg.codimension()));
  if (!(cfg.matrix() * b).is_zero())
    throw InvalidBasis("basis columns are not in the kernel of A");
  if (rank(b) != b.cols()) throw InvalidBasis("basis columns are linearly dependent");
}

}  // namespace

LatticeBasis make_basis(const Configuration& cfg, IntMatrix b) {
  check_basis(cfg, b);
  if (cfg.homogeneous())
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (!is_mixed_vector(b.column(j)))
        throw InvariantViolation("kernel column " + std::to_string(j + 1) +
                                 " of a homogeneous configuration is not mixed");
  Integer g = gcd_maximal_minors(b);
  return {std::move(b), std::move(g)};
}

LatticeBasis kernel_lattice(const Configuration& cfg) {
  IntMatrix k = kernel_basis(cfg.matrix());
  return make_basis(cfg, std::move(k));
}

Integer lattice_index(const Configuration& cfg, const IntMatrix& b) {
  check_basis(cfg, b);
  // The saturated kernel basis has minor gcd 1, so no normalization needed.
  return gcd_maximal_minors(b);
}

bool laurent_equal(const Configuration& cfg, const IntMatrix& b) {
  return lattice_index(cfg, b) == 1;
}

std::string binomial_string(std::span<const Integer> v) {
  auto monomial = [&](int sign) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (sgn(v[i]) != sign) continue;
      if (!first) os << '*';
      first = false;
      os << 'x' << (i + 1);
      const Integer e = abs(v[i]);
      if (e != 1) os << '^' << e;
    }
    return first ? std::string("1") : os.str();
  };
  return monomial(1) + " - " + monomial(-1);
}

std::vector<std::string> binomial_strings(const IntMatrix& b) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < b.cols(); ++j) out.push_back(binomial_string(b.column(j)));
  return out;
}

}  // namespace toric_ci
