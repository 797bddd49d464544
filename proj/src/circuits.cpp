#include "toric_ci/circuits.hpp"

#include <algorithm>
#include <map>

#include "toric_ci/errors.hpp"

namespace toric_ci {

Circuit Circuit::from_vector(IntVector v, std::size_t m) {
  Circuit c;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int s = sgn(v[i]);
    if (s == 0) continue;
    c.support.push_back(i);
    (s > 0 ? c.positive_support : c.negative_support).push_back(i);
  }
  c.maximal = c.support.size() == m + 1;
  c.vector = std::move(v);
  return c;
}

bool canonical_less(const Circuit& a, const Circuit& b) {
  if (a.support.size() != b.support.size()) return a.support.size() < b.support.size();
  if (a.support != b.support) return a.support < b.support;
  return a.vector < b.vector;
}

IntVector canonical_sign(IntVector v) {
  auto it = std::find_if(v.begin(), v.end(), [](const Integer& x) { return sgn(x) != 0; });
  if (it != v.end() && sgn(*it) < 0)
    for (auto& x : v) x = -x;
  return v;
}

std::optional<Circuit> circuit_from_support(const Configuration& cfg,
                                            std::span<const std::size_t> support) {
  const IntMatrix& a = cfg.matrix();
  const std::size_t s = support.size();
  for (std::size_t k = 0; k < s; ++k) {
    if (support[k] >= cfg.n()) throw DomainError("support index out of range");
    if (k > 0 && support[k] <= support[k - 1])
      throw DomainError("support must be strictly increasing");
  }
  if (s < 2 || s > cfg.m() + 1) return std::nullopt;

  // Keep s-1 independent rows of A_S; the remaining rows are combinations of
  // them and do not change the kernel.
  const IntMatrix sub = a.select_columns(support);
  EchelonBasis rows(s);
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < sub.rows() && kept.size() < s; ++i)
    if (rows.add(sub.row(i))) kept.push_back(i);
  if (kept.size() != s - 1) return std::nullopt;
  const IntMatrix reduced = sub.select_rows(kept);

  IntVector u(s);
  std::vector<std::size_t> others;
  others.reserve(s - 1);
  for (std::size_t j = 0; j < s; ++j) {
    others.clear();
    for (std::size_t k = 0; k < s; ++k)
      if (k != j) others.push_back(k);
    Integer minor = det(reduced.select_columns(others));
    if (sgn(minor) == 0) return std::nullopt;  // a proper subset is dependent
    u[j] = (j % 2 == 0) ? minor : Integer(-minor);
  }
  u = canonical_sign(primitive_part(u));

  IntVector full(cfg.n());
  for (std::size_t k = 0; k < s; ++k) full[support[k]] = u[k];
  return Circuit::from_vector(std::move(full), cfg.m());
}

namespace {

void extend_supports(const Configuration& cfg, const std::vector<IntVector>& cols,
                     IndexSet& current, const EchelonBasis& span,
                     std::vector<Circuit>& out) {
  const std::size_t start = current.empty() ? 0 : current.back() + 1;
  for (std::size_t j = start; j < cfg.n(); ++j) {
    current.push_back(j);
    EchelonBasis next = span;
    if (next.add(cols[j])) {
      extend_supports(cfg, cols, current, next, out);
    } else if (auto c = circuit_from_support(cfg, current)) {
      // `current` minus j is independent, so the dependency is unique; it is a
      // circuit on exactly this set iff it has full support here.
      out.push_back(std::move(*c));
    }
    current.pop_back();
  }
}

}  // namespace

std::vector<Circuit> enumerate_circuits(const Configuration& cfg) {
  std::vector<Circuit> out;
  if (cfg.codimension() == 0) return out;
  const std::vector<IntVector> cols = cfg.matrix().columns();
  IndexSet current;
  extend_supports(cfg, cols, current, EchelonBasis(cfg.m()), out);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool is_conformal(std::span<const Integer> u, std::span<const Integer> v) {
  if (u.size() != v.size()) throw DimensionError("is_conformal length mismatch");
  for (std::size_t i = 0; i < u.size(); ++i) {
    const int su = sgn(u[i]);
    if (su != 0 && su != sgn(v[i])) return false;
  }
  return true;
}

namespace {

// +1 if c is conformal to w, -1 if -c is, 0 otherwise.
int conformal_orientation(const Circuit& c, const RatVector& w) {
  int orient = 0;
  for (std::size_t i : c.support) {
    const int sw = sgn(w[i]);
    if (sw == 0) return 0;
    const int rel = sw * sgn(c.vector[i]);
    if (orient == 0) orient = rel;
    else if (rel != orient) return 0;
  }
  return orient;
}

}  // namespace

std::vector<ConformalTerm> conformal_decomposition(const Configuration& cfg,
                                                   std::span<const Integer> v,
                                                   std::span<const Circuit> circuits) {
  if (v.size() != cfg.n()) throw DimensionError("vector length does not match n");
  if (std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; }))
    throw DomainError("cannot decompose the zero vector");
  const IntVector av = mat_vec(cfg.matrix(), v);
  if (std::any_of(av.begin(), av.end(), [](const Integer& x) { return sgn(x) != 0; }))
    throw DomainError("vector is not in the kernel lattice");

  std::vector<ConformalTerm> terms;
  RatVector rest{IntVector(v.begin(), v.end())};
  while (!rest.is_zero()) {
    const Circuit* pick = nullptr;
    int orient = 0;
    for (const auto& c : circuits) {
      orient = conformal_orientation(c, rest);
      if (orient != 0) {
        pick = &c;
        break;
      }
    }
    if (pick == nullptr)
      throw InvariantViolation("no conformal circuit inside the remaining support");

    IntVector w = pick->vector;
    if (orient < 0)
      for (auto& x : w) x = -x;
    Rational lambda;
    bool first = true;
    for (std::size_t i : pick->support) {
      Rational ratio = rest[i] / Rational(w[i]);
      ratio.canonicalize();
      if (first || ratio < lambda) lambda = ratio;
      first = false;
    }
    rest.add_scaled(-lambda, w);
    terms.push_back({lambda, std::move(w)});
    if (terms.size() > v.size())
      throw InvariantViolation("conformal decomposition did not shrink the support");
  }
  return terms;
}

IntMatrix circuitize_basis(const Configuration& cfg, const IntMatrix& b) {
  const std::vector<Circuit> circuits = enumerate_circuits(cfg);
  return circuitize_basis(cfg, b, circuits);
}

IntMatrix circuitize_basis(const Configuration& cfg, const IntMatrix& b,
                           std::span<const Circuit> circuits) {
  make_basis(cfg, b);  // throws InvalidBasis
  std::map<IndexSet, const Circuit*> by_support;
  for (const auto& c : circuits) by_support.emplace(c.support, &c);

  IntMatrix out = b;
  const std::size_t r = b.cols();
  for (std::size_t j = 0; j < r; ++j) {
    const IntVector col = out.column(j);
    IntVector prim = primitive_part(col);
    const Circuit probe = Circuit::from_vector(prim, cfg.m());
    if (by_support.contains(probe.support)) {
      out.set_column(j, prim);
      continue;
    }

    std::vector<ConformalTerm> terms = conformal_decomposition(cfg, col, circuits);
    std::vector<Circuit> candidates;
    for (auto& t : terms) candidates.push_back(Circuit::from_vector(t.circuit, cfg.m()));
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Circuit& x, const Circuit& y) { return x.support < y.support; });

    bool replaced = false;
    for (const auto& cand : candidates) {
      EchelonBasis span(cfg.n());
      for (std::size_t k = 0; k < r; ++k)
        if (k != j) span.add(out.column(k));
      if (span.add(cand.vector)) {
        out.set_column(j, cand.vector);
        replaced = true;
        break;
      }
    }
    if (!replaced)
      throw InvariantViolation("no decomposition circuit keeps the basis independent");
  }
  return out;
}

}  // namespace toric_ci
