#include "toric_ci/generators.hpp"

#include <algorithm>

#include "toric_ci/errors.hpp"

namespace toric_ci {

IntVector normalize_curve(const IntVector& a) {
  if (a.size() < 3) throw DomainError("a monomial curve needs at least 3 points");
  if (!std::is_sorted(a.begin(), a.end()))
    throw DomainError("curve exponents must be non-decreasing");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - a[0];
  if (content(out) != 1) throw DomainError("curve exponents are not coprime");
  return out;
}

Configuration monomial_curve(const IntVector& a) {
  const IntVector b = normalize_curve(a);
  IntMatrix m(2, b.size());
  for (std::size_t j = 0; j < b.size(); ++j) {
    m(0, j) = 1;
    m(1, j) = b[j];
  }
  return Configuration::validate(std::move(m));
}

IntMatrix curve_ci_basis(const IntVector& a) {
  const Configuration cfg = monomial_curve(a);
  const IntVector b = normalize_curve(a);
  const std::size_t n = b.size();
  IntMatrix basis(n, n - 2);
  for (std::size_t j = 0; j + 2 < n; ++j) {
    basis(0, j) += b[j + 2] - b[j + 1];
    basis(j + 1, j) += -b[j + 2];
    basis(j + 2, j) += b[j + 1];
  }
  if (!(cfg.matrix() * basis).is_zero() || rank(basis) != n - 2)
    throw InvariantViolation("curve basis is not a full-rank kernel matrix");
  return basis;
}

Configuration cyclic_polytope(std::size_t m, const IntVector& t) {
  const std::size_t n = t.size();
  if (m < 2 || n <= m) throw DomainError("cyclic polytope needs n > m >= 2");
  if (sgn(t[0]) <= 0) throw DomainError("cyclic parameters must be positive");
  for (std::size_t i = 1; i < n; ++i)
    if (t[i] <= t[i - 1]) throw DomainError("cyclic parameters must increase strictly");
  IntMatrix a(m, n);
  for (std::size_t j = 0; j < n; ++j) {
    Integer p = 1;
    for (std::size_t i = 0; i < m; ++i) {
      a(i, j) = p;
      p *= t[j];
    }
  }
  return Configuration::validate(std::move(a));
}

IntVector default_cyclic_parameters(std::size_t n) {
  IntVector t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<unsigned long>(i + 1);
  return t;
}

Configuration convex_polygon(std::size_t n) {
  if (n < 3) throw DomainError("a polygon needs at least 3 vertices");
  IntMatrix a(3, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(0, i) = 1;
    a(1, i) = static_cast<unsigned long>(i);
    a(2, i) = static_cast<unsigned long>(i * i);
  }
  return Configuration::validate(std::move(a));
}

Circuit quadruple_circuit(const Configuration& polygon,
                          const std::array<std::size_t, 4>& idx) {
  for (std::size_t k = 0; k < 4; ++k) {
    if (idx[k] >= polygon.n()) throw DomainError("quadruple index out of range");
    if (k > 0 && idx[k] <= idx[k - 1])
      throw DomainError("quadruple indices must increase strictly");
  }
  auto c = circuit_from_support(polygon, idx);
  if (!c) throw DomainError("quadruple does not support a circuit");
  for (std::size_t k = 0; k < 4; ++k)
    if (sgn(c->vector[idx[k]]) != (k % 2 == 0 ? 1 : -1))
      throw DomainError("configuration is not in convex position");
  return *c;
}

SignMatrix decagon_sign_matrix() {
  return SignMatrix{
      {+1, +1, +1, 0, +1, 0, 0},   //
      {-1, -1, 0, 0, 0, 0, 0},     //
      {+1, 0, 0, 0, -1, +1, 0},    //
      {-1, +1, -1, 0, 0, 0, 0},    //
      {0, 0, 0, +1, 0, -1, 0},     //
      {0, 0, 0, -1, +1, +1, +1},   //
      {0, 0, 0, +1, 0, 0, -1},     //
      {0, 0, +1, 0, -1, 0, +1},    //
      {0, -1, -1, 0, 0, 0, 0},     //
      {0, 0, 0, -1, 0, -1, -1},
  };
}

std::vector<std::array<std::size_t, 4>> decagon_quadruples() {
  return {{0, 1, 2, 3}, {0, 1, 3, 8}, {0, 3, 7, 8}, {4, 5, 6, 9},
          {0, 2, 5, 7}, {2, 4, 5, 9}, {5, 6, 7, 9}};
}

namespace {

Integer binomial(std::size_t n, std::size_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

BoundEvaluation bound_eval(std::size_t d, std::size_t n) {
  if (d < 1) throw DomainError("bound needs d >= 1");
  if (n < d + 2) throw DomainError("bound needs n >= d + 2");
  BoundEvaluation e;
  e.d = d;
  e.n = n;
  e.lhs = binomial(n, d + 2);
  e.rhs = 2 * Integer(static_cast<unsigned long>(n - d - 1)) * binomial(n - 2, d);
  e.holds = e.lhs > e.rhs;
  return e;
}

std::size_t bound_threshold(std::size_t d) {
  if (d < 1) throw DomainError("bound needs d >= 1");
  // C(n,d+2) = C(n-2,d) n(n-1) / ((d+1)(d+2)), so for n >= d+2 the bound holds
  // iff q(n) = n(n-1) - 2(d+1)(d+2)(n-d-1) > 0.
  const Integer k = 2 * Integer(static_cast<unsigned long>((d + 1) * (d + 2)));
  auto q = [&](std::size_t n) -> Integer {
    const Integer nn(static_cast<unsigned long>(n));
    return nn * (nn - 1) - k * (nn - static_cast<unsigned long>(d + 1));
  };
  std::size_t threshold = d + 2;
  for (std::size_t n = d + 2;; ++n) {
    const BoundEvaluation e = bound_eval(d, n);
    if (e.holds != (sgn(q(n)) > 0))
      throw InvariantViolation("binomial bound disagrees with its quadratic form");
    if (!e.holds) threshold = n + 1;
    // q'(n) = 2n - 1 - k > 0: q increases from here on.
    if (e.holds && 2 * Integer(static_cast<unsigned long>(n)) - 1 > k) break;
  }
  return threshold;
}

std::size_t codim3_bound(std::size_t r) {
  if (r < 3) throw DomainError("the codimension bound needs r >= 3");
  return 2 * (r * r - r + 1);
}

}  // namespace toric_ci
