#pragma once

// JSON form of a SearchReport:
//
//   {"verdict": "found" | "exhausted-none" | "budget-exceeded" | "not-ci",
//    "mode": "...", "basis": [[...column...], ...] | null,
//    "binomials": [...], "witness": {"rows": [...], "cols": [...]} | null,
//    "full_rows": [j, k] | null, "g": int | null, "laurent_equal": bool | null,
//    "counters": {"circuits", "tested", "pruned_sign", "pruned_rank", "ci_bases"},
//    "combinations": int, "seed": int, "elapsed_ms": number,
//    "lower_rank_circuits": bool}
//
// Row and column indices are 1-based. Integers that do not fit in 64 bits
// are written as decimal strings.

#include <json.hpp>

#include "toric_ci/exactmat.hpp"
#include "toric_ci/search.hpp"

namespace toric_ci {

nlohmann::json integer_to_json(const Integer& x);
Integer integer_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(std::span<const Integer> v);
nlohmann::json matrix_columns_to_json(const IntMatrix& m);

nlohmann::json report_to_json(const SearchReport& report);
/// Inverse of report_to_json (elapsed time and all fields restored).
SearchReport report_from_json(const nlohmann::json& j);

}  // namespace toric_ci
