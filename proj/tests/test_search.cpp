#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toric_ci/circuits.hpp"
#include "toric_ci/citest.hpp"
#include "toric_ci/errors.hpp"
#include "toric_ci/generators.hpp"
#include "toric_ci/search.hpp"
#include "toric_ci/verify.hpp"

using namespace toric_ci;

namespace {

Configuration twisted_cubic() { return Configuration::validate(IntMatrix{{1, 1, 1, 1}, {0, 1, 2, 3}}); }

SearchOptions exhaustive() {
  SearchOptions o;
  o.mode = SearchMode::Exhaustive;
  return o;
}

/// Counts CI circuit bases by testing every r-subset with the literal oracle.
std::size_t oracle_ci_bases(const Configuration& cfg, const std::vector<Circuit>& cs) {
  const std::size_t r = cfg.codimension(), N = cs.size();
  std::size_t count = 0;
  std::vector<std::size_t> idx(r);
  for (std::size_t k = 0; k < r; ++k) idx[k] = k;
  if (N < r) return 0;
  for (;;) {
    std::vector<IntVector> cols;
    for (std::size_t k : idx) cols.push_back(cs[k].vector);
    const IntMatrix b = IntMatrix::from_columns(cols, cfg.n());
    if (oracle::rational_rank(b) == r && !oracle::has_violation(sign_pattern(b))) ++count;
    std::size_t k = r;
    while (k > 0 && idx[k - 1] == N - r + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t t = k; t < r; ++t) idx[t] = idx[t - 1] + 1;
  }
  return count;
}

void check_found_report(const Configuration& cfg, const SearchReport& rep) {
  REQUIRE(rep.verdict == Verdict::Found);
  REQUIRE(rep.basis.has_value());
  const IntMatrix& b = *rep.basis;
  CHECK((cfg.matrix() * b).is_zero());
  CHECK(oracle::rational_rank(b) == cfg.codimension());
  CHECK_FALSE(oracle::has_violation(sign_pattern(b)));
  for (std::size_t j = 0; j < b.cols(); ++j)
    CHECK(circuit_from_support(cfg, Circuit::from_vector(b.column(j), cfg.m()).support).has_value());
  REQUIRE(rep.index_g.has_value());
  CHECK(*rep.index_g == gcd_maximal_minors(b));
}

}  // namespace

TEST_CASE("twisted cubic has a CI circuit basis") {
  const Configuration cfg = twisted_cubic();
  const SearchReport rep = search_ci_circuit_basis(cfg);
  check_found_report(cfg, rep);
  CHECK(rep.counters.circuits == 4);
  CHECK(rep.combinations == 6);

  const SearchReport all = search_ci_circuit_basis(cfg, exhaustive());
  CHECK(all.verdict == Verdict::Found);
  CHECK(all.counters.ci_bases == 6);
  CHECK(all.counters.tested + all.counters.pruned_sign + all.counters.pruned_rank == 6);
}

TEST_CASE("cyclic r=3 n=14 exhaustive search certifies nonexistence") {
  const Configuration cfg = cyclic_polytope(11, default_cyclic_parameters(14));
  const SearchReport rep = search_ci_circuit_basis(cfg, exhaustive());
  CHECK(rep.verdict == Verdict::ExhaustedNone);
  CHECK(rep.counters.circuits == 91);
  CHECK(rep.combinations == 121485);
  CHECK(rep.counters.tested + rep.counters.pruned_sign + rep.counters.pruned_rank == 121485);
  CHECK_FALSE(rep.basis.has_value());

  SearchOptions first;
  first.mode = SearchMode::FirstFound;
  CHECK(search_ci_circuit_basis(cfg, first).verdict == Verdict::ExhaustedNone);
}

TEST_CASE("decagon search seeded with the reference quadruples") {
  const Configuration decagon = convex_polygon(10);
  SearchOptions opts;
  std::vector<IndexSet> seeds;
  for (const auto& q : decagon_quadruples()) seeds.emplace_back(q.begin(), q.end());
  opts.supports = seeds;
  const SearchReport rep = search_ci_circuit_basis(decagon, opts);
  check_found_report(decagon, rep);
  CHECK(rep.counters.circuits == 7);

  // Same sign matrix as the reference example, up to column order.
  const SignMatrix found = sign_pattern(*rep.basis);
  const SignMatrix expected = decagon_sign_matrix();
  std::vector<std::vector<int>> a, b;
  for (std::size_t j = 0; j < 7; ++j) {
    std::vector<int> ca, cb;
    for (std::size_t i = 0; i < 10; ++i) {
      ca.push_back(found(i, j));
      cb.push_back(expected(i, j));
    }
    a.push_back(ca);
    b.push_back(cb);
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);

  opts.supports = std::vector<IndexSet>{{0, 1}};
  CHECK_THROWS_AS(search_ci_circuit_basis(convex_polygon(6), opts), DomainError);
}

TEST_CASE("budget exhaustion is reported, never silently partial") {
  const Configuration cfg = cyclic_polytope(11, default_cyclic_parameters(14));
  SearchOptions opts = exhaustive();
  opts.budget = 10;
  const SearchReport rep = search_ci_circuit_basis(cfg, opts);
  CHECK(rep.verdict == Verdict::BudgetExceeded);
  CHECK(rep.counters.tested <= 10);

  opts.budget = 0;
  CHECK_THROWS_AS(search_ci_circuit_basis(cfg, opts), DomainError);
  CHECK_THROWS_AS(search_ci_circuit_basis(Configuration::validate(IntMatrix{{1, 0}, {0, 1}})),
                  DomainError);
}

TEST_CASE("pruning never changes the verdict or the number of CI bases") {
  std::mt19937_64 rng(61);
  int found = 0, none = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 4 + trial % 4;
    const std::size_t r = 1 + trial % std::min<std::size_t>(4, n - 2);
    const Configuration cfg = random_configuration(rng, n, r, 5);
    const auto cs = enumerate_circuits(cfg);
    SearchOptions with = exhaustive(), without = exhaustive();
    without.prune = false;
    const SearchReport a = search_ci_circuit_basis(cfg, cs, with);
    const SearchReport b = search_ci_circuit_basis(cfg, cs, without);
    REQUIRE(a.verdict == b.verdict);
    CHECK(a.counters.ci_bases == b.counters.ci_bases);
    CHECK(a.counters.ci_bases == oracle_ci_bases(cfg, cs));
    CHECK(a.counters.tested + a.counters.pruned_sign + a.counters.pruned_rank == a.combinations);
    CHECK(b.counters.tested == b.combinations);
    if (a.verdict == Verdict::Found) {
      ++found;
      CHECK(a.basis == b.basis);
      check_found_report(cfg, a);
    } else {
      ++none;
    }
  }
  CHECK(found > 0);
}

TEST_CASE("parallel first-found search is deterministic") {
  const Configuration cfg = cyclic_polytope(5, default_cyclic_parameters(8));
  SearchOptions one, two;
  two.jobs = 2;
  const SearchReport a = search_ci_circuit_basis(cfg, one);
  const SearchReport b = search_ci_circuit_basis(cfg, two);
  REQUIRE(a.verdict == Verdict::Found);
  CHECK(a.basis == b.basis);
  for (int k = 0; k < 3; ++k) CHECK(search_ci_circuit_basis(cfg, two).basis == a.basis);

  SearchOptions ex1 = exhaustive(), ex3 = exhaustive();
  ex3.jobs = 3;
  const SearchReport c = search_ci_circuit_basis(cfg, ex1);
  const SearchReport d = search_ci_circuit_basis(cfg, ex3);
  CHECK(c.counters.ci_bases == d.counters.ci_bases);
  CHECK(c.basis == d.basis);
  const auto& k = d.counters;
  CHECK(k.tested + k.pruned_sign + k.pruned_rank == d.combinations);
}

TEST_CASE("randomized mode is reproducible from its seed") {
  const Configuration cfg = cyclic_polytope(5, default_cyclic_parameters(8));
  SearchOptions opts;
  opts.mode = SearchMode::Randomized;
  opts.seed = 7;
  const SearchReport a = search_ci_circuit_basis(cfg, opts);
  const SearchReport b = search_ci_circuit_basis(cfg, opts);
  check_found_report(cfg, a);
  CHECK(a.basis == b.basis);
  CHECK(a.seed == 7);
}

TEST_CASE("check_given_basis") {
  const Configuration cubic = twisted_cubic();
  const IntMatrix curve = curve_ci_basis(int_vector({0, 1, 2, 3}));
  const SearchReport a = check_given_basis(cubic, curve);
  CHECK(a.verdict == Verdict::Found);
  // Maximal minors of (1,-2,1,0),(1,0,-3,2): 2,-4,2,6,-4,2.
  CHECK(a.index_g == Integer(2));
  CHECK(a.laurent_equal == false);

  const IntMatrix doubled = IntMatrix::from_columns({int_vector({2, -4, 2, 0}), int_vector({0, 1, -2, 1})}, 4);
  const SearchReport b = check_given_basis(cubic, doubled);
  CHECK(b.verdict == Verdict::Found);
  CHECK(b.index_g == Integer(2));
  CHECK(b.laurent_equal == false);

  const Configuration cyc = cyclic_polytope(11, default_cyclic_parameters(14));
  const auto cs = enumerate_circuits(cyc);
  const IntMatrix triple = IntMatrix::from_columns({cs[0].vector, cs[40].vector, cs[90].vector}, 14);
  const SearchReport c = check_given_basis(cyc, triple);
  CHECK(c.verdict == Verdict::NotCompleteIntersection);
  REQUIRE(c.witness.has_value());
  CHECK(c.witness->rows.size() < c.witness->cols.size());
  REQUIRE(c.full_rows.has_value());
  CHECK(c.full_rows->second == c.full_rows->first + 1);

  CHECK_THROWS_AS(check_given_basis(cubic, IntMatrix::from_columns({int_vector({1, 0, 0, 0}), int_vector({0, 1, -2, 1})}, 4)),
                  InvalidBasis);
}

TEST_CASE("nonexistence table") {
  const auto rows = verify_nonexistence_bound(Family::Cyclic, 3, 14, 16, exhaustive());
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) CHECK(row.report.verdict == Verdict::ExhaustedNone);

  const auto small = verify_nonexistence_bound(Family::Cyclic, 3, 6, 11, {});
  REQUIRE(small.size() == 6);
  for (const auto& row : small) CHECK(row.report.verdict == Verdict::Found);

  CHECK_THROWS_AS(verify_nonexistence_bound(Family::Polygon, 3, 5, 6, {}), DomainError);
}

TEST_CASE("polygons with few vertices") {
  const auto rows = verify_nonexistence_bound(Family::Polygon, 2, 5, 6, {});
  for (const auto& row : rows) {
    CAPTURE(row.n);
    CHECK(row.report.verdict == Verdict::Found);
  }
}

TEST_CASE("verdict and mode names round-trip") {
  for (auto v : {Verdict::Found, Verdict::ExhaustedNone, Verdict::BudgetExceeded,
                 Verdict::NotCompleteIntersection})
    CHECK(parse_verdict(to_string(v)) == v);
  for (auto m : {SearchMode::Exhaustive, SearchMode::FirstFound, SearchMode::Randomized})
    CHECK(parse_search_mode(to_string(m)) == m);
  CHECK_THROWS_AS(parse_search_mode("sideways"), DomainError);
  CHECK(binomial_u64(91, 3) == 121485);
  CHECK(binomial_u64(210, 7) == 3230129794320ULL);
}
