#pragma once

// Search for a complete-intersection basis ideal inside a toric ideal.
// It suffices to look at bases made of circuits: any CI basis can be
// replaced column by column with conformal circuits without losing the CI
// property, so an exhausted circuit search rules out every basis ideal.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "toric_ci/circuits.hpp"
#include "toric_ci/citest.hpp"
#include "toric_ci/lattice.hpp"

namespace toric_ci {

enum class SearchMode { Exhaustive, FirstFound, Randomized };

enum class Verdict {
  Found,                    // a CI circuit basis (or the given basis is CI)
  ExhaustedNone,            // every r-subset of circuits was covered
  BudgetExceeded,           // stopped after `budget` tested combinations
  NotCompleteIntersection,  // check_given_basis: the given basis is not CI
};

const char* to_string(SearchMode mode);
const char* to_string(Verdict verdict);
SearchMode parse_search_mode(const std::string& s);
Verdict parse_verdict(const std::string& s);

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct SearchOptions {
  SearchMode mode = SearchMode::FirstFound;
  std::uint64_t budget = kDefaultBudget;  // r-subsets tested
  std::uint64_t seed = 0;                 // randomized mode only
  unsigned jobs = 1;
  bool prune = true;
  /// Restrict the candidates to circuits on these supports (0-based).
  std::optional<std::vector<IndexSet>> supports;
};

struct SearchCounters {
  std::uint64_t circuits = 0;
  std::uint64_t tested = 0;       // r-subsets evaluated at the leaves
  std::uint64_t pruned_sign = 0;  // r-subsets under prefixes with a violation
  std::uint64_t pruned_rank = 0;  // r-subsets under dependent prefixes
  std::uint64_t ci_bases = 0;     // CI bases met (all of them in exhaustive mode)

  SearchCounters& operator+=(const SearchCounters& o);
};

struct SearchReport {
  Verdict verdict = Verdict::ExhaustedNone;
  SearchMode mode = SearchMode::FirstFound;
  std::optional<IntMatrix> basis;
  std::optional<MixedWitness> witness;
  /// Adjacent fully nonzero rows forming a mixed 2 x r block.
  std::optional<std::pair<std::size_t, std::size_t>> full_rows;
  std::optional<Integer> index_g;
  std::optional<bool> laurent_equal;
  SearchCounters counters;
  std::uint64_t combinations = 0;  // C(#circuits, r), saturating
  std::uint64_t seed = 0;
  double elapsed_ms = 0;
  /// Some candidate circuit has support smaller than m+1.
  bool lower_rank_circuits = false;
};

/// Throws DomainError for codimension 0 or unknown seeded supports.
SearchReport search_ci_circuit_basis(const Configuration& cfg,
                                     const SearchOptions& opts = {});
SearchReport search_ci_circuit_basis(const Configuration& cfg,
                                     std::span<const Circuit> circuits,
                                     const SearchOptions& opts = {});

/// One-shot report for a user-supplied basis. Throws InvalidBasis.
SearchReport check_given_basis(const Configuration& cfg, const IntMatrix& b);

enum class Family { Cyclic, Polygon };

struct BoundRow {
  std::size_t n = 0;
  SearchReport report;
};

/// Runs a full search per n in [n_lo, n_hi]. For Cyclic, `param` is the
/// codimension r and t = (1..n); for Polygon it is the dimension d (only 2).
std::vector<BoundRow> verify_nonexistence_bound(Family family, std::size_t param,
                                                std::size_t n_lo, std::size_t n_hi,
                                                const SearchOptions& opts = {});

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k);

}  // namespace toric_ci
