#pragma once

// Reproduction checks for the constructions, examples and nonexistence
// results this library implements. Each check is self-contained and carries
// its own pass threshold; the exploratory ones are reported but never fail
// the run.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "toric_ci/lattice.hpp"

namespace toric_ci {

struct CheckResult {
  int id = 0;
  std::string group;
  std::string name;
  bool passed = false;
  bool blocking = true;
  std::string detail;
  double elapsed_ms = 0;
};

struct VerifyOptions {
  /// Run only the checks of this group (see verification_groups()).
  std::optional<std::string> only;
  std::uint64_t seed = 20051201;
};

std::vector<std::string> verification_groups();

/// Throws DomainError for an unknown group name.
std::vector<CheckResult> run_verification(const VerifyOptions& opts = {});

/// True iff every blocking check passed.
bool all_blocking_passed(const std::vector<CheckResult>& results);

/// Random homogeneous configuration: first row all ones, other entries
/// uniform in [0, max_entry], resampled until valid. Requires n >= r + 2
/// and, when m = 2, n <= max_entry + 1.
Configuration random_configuration(std::mt19937_64& rng, std::size_t n, std::size_t r,
                                   long max_entry);

/// Random strictly increasing sequence starting at 0 with gcd 1 and last
/// entry at most max_last.
IntVector random_curve(std::mt19937_64& rng, std::size_t n, long max_last);

}  // namespace toric_ci
