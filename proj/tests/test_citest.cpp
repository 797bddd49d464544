#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toric_ci/circuits.hpp"
#include "toric_ci/citest.hpp"
#include "toric_ci/errors.hpp"
#include "toric_ci/generators.hpp"

using namespace toric_ci;

namespace {

SignMatrix negate_column(SignMatrix s, std::size_t j) {
  for (std::size_t i = 0; i < s.rows(); ++i) s.set(i, j, -s(i, j));
  return s;
}

}  // namespace

TEST_CASE("sign pattern") {
  const IntMatrix b = IntMatrix::from_columns({int_vector({1, -2, 1, 0})}, 4);
  CHECK(sign_pattern(b) == SignMatrix{{+1}, {-1}, {+1}, {0}});
  CHECK(sign_pattern(IntMatrix(3, 2)) == SignMatrix(3, 2));

  const Configuration decagon = convex_polygon(10);
  for (const auto& q : decagon_quadruples()) {
    const Circuit c = quadruple_circuit(decagon, q);
    const SignMatrix s = sign_pattern(IntMatrix::from_columns({c.vector}, 10));
    for (std::size_t k = 0; k < 4; ++k) CHECK(s(q[k], 0) == (k % 2 == 0 ? 1 : -1));
    CHECK(c.support == IndexSet(q.begin(), q.end()));
  }
}

TEST_CASE("mixed matrices") {
  CHECK(is_mixed(SignMatrix{{+1}, {-1}}));
  CHECK_FALSE(is_mixed(SignMatrix{{+1}, {+1}}));
  CHECK_FALSE(is_mixed(SignMatrix(3, 1)));
}

TEST_CASE("find_violation examples") {
  const SignMatrix fully_mixed{{+1, +1, +1}, {-1, -1, -1}};
  const auto w = find_violation(fully_mixed);
  REQUIRE(w.has_value());
  CHECK(w->rows == IndexSet{0, 1});
  CHECK(w->cols == IndexSet{0, 1, 2});
  CHECK(is_valid_witness(fully_mixed, *w));
  CHECK_FALSE(is_complete_intersection(fully_mixed));

  CHECK_FALSE(find_violation(decagon_sign_matrix()).has_value());
  CHECK(is_complete_intersection(decagon_sign_matrix()));

  const SignMatrix small{{+1, +1}, {-1, -1}, {+1, -1}};
  CHECK_FALSE(find_violation(small).has_value());
  CHECK_FALSE(oracle::has_violation(small));
}

TEST_CASE("brute force oracle examples") {
  const SignMatrix fully_mixed{{+1, +1, +1}, {-1, -1, -1}};
  const auto w = brute_force_violation(fully_mixed);
  REQUIRE(w.has_value());
  CHECK(w->rows == IndexSet{0, 1});
  CHECK(w->cols == IndexSet{0, 1, 2});
  CHECK_FALSE(brute_force_violation(decagon_sign_matrix()).has_value());
  CHECK_FALSE(brute_force_violation(SignMatrix{{+1, +1}, {-1, -1}, {+1, -1}}).has_value());
  CHECK_THROWS_AS(brute_force_violation(SignMatrix(13, 2)), SizeCapExceeded);
  CHECK_NOTHROW(brute_force_violation(SignMatrix(13, 2), 13));
}

TEST_CASE("find_violation agrees with both brute-force oracles") {
  std::mt19937_64 rng(41);
  int violations = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t rows = 1 + trial % 8, cols = 1 + (trial / 8) % 5;
    const SignMatrix s = oracle::random_signs(rng, rows, cols);
    const auto fast = find_violation(s);
    const auto brute = brute_force_violation(s);
    REQUIRE(fast.has_value() == brute.has_value());
    REQUIRE(fast.has_value() == oracle::has_violation(s));
    if (fast) {
      ++violations;
      CHECK(is_valid_witness(s, *fast));
      CHECK(fast->rows.size() < fast->cols.size());
      CHECK(is_valid_witness(s, *brute));
    }
  }
  CHECK(violations > 100);
}

TEST_CASE("violations are monotone under adding columns") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    const SignMatrix s = oracle::random_signs(rng, 2 + trial % 6, 2 + trial % 4);
    std::vector<std::size_t> subset;
    for (std::size_t j = 0; j < s.cols(); ++j)
      if (rng() & 1) subset.push_back(j);
    if (find_violation(s.select_columns(subset))) CHECK(find_violation(s).has_value());
  }
}

TEST_CASE("zeroing entries never creates a violation") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 500; ++trial) {
    const SignMatrix s = oracle::random_signs(rng, 3 + trial % 6, 2 + trial % 4);
    if (!is_complete_intersection(s)) continue;
    SignMatrix shrunk = s;
    for (std::size_t i = 0; i < s.rows(); ++i)
      for (std::size_t j = 0; j < s.cols(); ++j)
        if (rng() % 3 == 0) shrunk.set(i, j, 0);
    CHECK(is_complete_intersection(shrunk));
  }
}

TEST_CASE("negating a column never changes the verdict") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 500; ++trial) {
    const SignMatrix s = oracle::random_signs(rng, 2 + trial % 7, 1 + trial % 5);
    const std::size_t j = rng() % s.cols();
    CHECK(is_complete_intersection(s) == is_complete_intersection(negate_column(s, j)));
  }
}

TEST_CASE("two columns never violate") {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 300; ++trial)
    CHECK(is_complete_intersection(oracle::random_signs(rng, 1 + trial % 8, 1 + trial % 2)));
}

TEST_CASE("required column restricts the search") {
  // Columns 0..2 violate on rows {0,1}; column 3 is mixed but plays no part.
  const SignMatrix s{{+1, +1, +1, 0}, {-1, -1, -1, 0}, {0, 0, 0, +1}, {0, 0, 0, -1}};
  const auto cols = sign_columns(s);
  CHECK(find_violation(cols).has_value());
  CHECK(find_violation(cols, 0).has_value());
  CHECK_FALSE(find_violation(cols, 3).has_value());
}

TEST_CASE("two consecutive full rows") {
  CHECK_FALSE(find_two_full_rows(decagon_sign_matrix()).has_value());
  CHECK_FALSE(find_two_full_rows(SignMatrix(4, 3)).has_value());
  const SignMatrix s{{+1, 0, +1}, {-1, +1, -1}, {+1, -1, +1}, {0, 0, -1}};
  const auto rows = find_two_full_rows(s);
  REQUIRE(rows.has_value());
  CHECK(rows->first == 1);
  CHECK(rows->second == 2);
}

TEST_CASE("cyclic circuit triples contain two consecutive full rows") {
  const Configuration cfg = cyclic_polytope(11, default_cyclic_parameters(14));
  const auto cs = enumerate_circuits(cfg);
  REQUIRE(cs.size() == 91);
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t idx[3];
    do {
      for (auto& k : idx) k = rng() % cs.size();
    } while (idx[0] == idx[1] || idx[1] == idx[2] || idx[0] == idx[2]);
    const IntMatrix b = IntMatrix::from_columns({cs[idx[0]].vector, cs[idx[1]].vector, cs[idx[2]].vector}, 14);
    const SignMatrix s = sign_pattern(b);
    const auto rows = find_two_full_rows(s);
    REQUIRE(rows.has_value());
    CHECK(rows->second == rows->first + 1);
    CHECK_FALSE(is_complete_intersection(s));
    const MixedWitness w{{rows->first, rows->second}, {0, 1, 2}};
    CHECK(is_valid_witness(s, w));
  }
}

TEST_CASE("sign matrices are limited to 64 rows") {
  CHECK_THROWS_AS(sign_columns(SignMatrix(65, 2)), DimensionError);
  CHECK_NOTHROW(sign_columns(SignMatrix(64, 2)));
}
