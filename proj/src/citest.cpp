#include "toric_ci/citest.hpp"

#include <algorithm>
#include <bit>

#include "toric_ci/errors.hpp"

namespace toric_ci {

SignMatrix::SignMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

SignMatrix::SignMatrix(std::initializer_list<std::initializer_list<int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged sign matrix literal");
    for (int x : r) data_.push_back(static_cast<std::int8_t>((x > 0) - (x < 0)));
  }
}

void SignMatrix::set(std::size_t i, std::size_t j, int value) {
  data_.at(i * cols_ + j) = static_cast<std::int8_t>((value > 0) - (value < 0));
}

SignMatrix SignMatrix::select_columns(std::span<const std::size_t> idx) const {
  SignMatrix out(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) out.set(i, k, (*this)(i, idx[k]));
  return out;
}

IntMatrix SignMatrix::to_int() const {
  IntMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

SignMatrix sign_pattern(const IntMatrix& b) {
  SignMatrix s(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) s.set(i, j, sgn(b(i, j)));
  return s;
}

bool is_mixed(const SignMatrix& s) {
  for (std::size_t j = 0; j < s.cols(); ++j) {
    bool pos = false, neg = false;
    for (std::size_t i = 0; i < s.rows(); ++i) {
      pos = pos || s(i, j) > 0;
      neg = neg || s(i, j) < 0;
    }
    if (!(pos && neg)) return false;
  }
  return true;
}

bool is_valid_witness(const SignMatrix& s, const MixedWitness& w) {
  if (w.rows.size() >= w.cols.size() || w.rows.empty()) return false;
  for (std::size_t i : w.rows)
    if (i >= s.rows()) return false;
  for (std::size_t j : w.cols)
    if (j >= s.cols()) return false;
  return is_mixed(sign_pattern(s.to_int().select_rows(w.rows).select_columns(w.cols)));
}

std::vector<SignColumn> sign_columns(const SignMatrix& s) {
  if (s.rows() > kMaxSignRows)
    throw DimensionError("sign matrices with more than 64 rows are not supported");
  std::vector<SignColumn> cols(s.cols());
  for (std::size_t j = 0; j < s.cols(); ++j)
    for (std::size_t i = 0; i < s.rows(); ++i) {
      if (s(i, j) > 0) cols[j].pos |= std::uint64_t{1} << i;
      if (s(i, j) < 0) cols[j].neg |= std::uint64_t{1} << i;
    }
  return cols;
}

namespace {

IndexSet mask_to_rows(std::uint64_t mask) {
  IndexSet rows;
  while (mask) {
    rows.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return rows;
}

// Finds at most `budget` rows hitting every mask in `sets`.
bool hitting_set(std::span<const std::uint64_t> sets, std::uint64_t chosen,
                 int budget, std::uint64_t& result) {
  int best = -1;
  int best_size = 65;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    if (sets[s] & chosen) continue;
    const int size = std::popcount(sets[s]);
    if (size < best_size) {
      best_size = size;
      best = static_cast<int>(s);
    }
  }
  if (best < 0) {
    result = chosen;
    return true;
  }
  if (budget == 0) return false;

  // Pairwise disjoint unhit sets each need their own row.
  std::uint64_t used = 0;
  int disjoint = 0;
  for (std::uint64_t m : sets) {
    if ((m & chosen) || (m & used)) continue;
    used |= m;
    if (++disjoint > budget) return false;
  }

  std::uint64_t options = sets[static_cast<std::size_t>(best)];
  while (options) {
    const std::uint64_t bit = options & (~options + 1);
    options &= options - 1;
    if (hitting_set(sets, chosen | bit, budget - 1, result)) return true;
  }
  return false;
}

bool mixed_in(const SignColumn& c, std::uint64_t rows) {
  return (c.pos & rows) && (c.neg & rows);
}

// Two rows mixing three columns: the smallest possible violation.
std::optional<MixedWitness> two_row_violation(std::span<const SignColumn> cols,
                                              std::span<const std::size_t> eligible,
                                              std::optional<std::size_t> required,
                                              std::size_t nrows) {
  for (std::size_t a = 0; a < nrows; ++a)
    for (std::size_t b = a + 1; b < nrows; ++b) {
      const std::uint64_t rows = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
      if (required && !mixed_in(cols[*required], rows)) continue;
      IndexSet hit;
      for (std::size_t j : eligible)
        if (mixed_in(cols[j], rows)) hit.push_back(j);
      if (hit.size() < 3) continue;
      if (required && std::find(hit.begin(), hit.end(), *required) == hit.end()) continue;
      IndexSet chosen;
      if (required) chosen.push_back(*required);
      for (std::size_t j : hit)
        if (chosen.size() < 3 && (!required || j != *required)) chosen.push_back(j);
      std::sort(chosen.begin(), chosen.end());
      return MixedWitness{{a, b}, chosen};
    }
  return std::nullopt;
}

std::optional<MixedWitness> search_violation(std::span<const SignColumn> cols,
                                             std::optional<std::size_t> required) {
  // A column that is not mixed in the whole matrix is mixed in no submatrix.
  IndexSet eligible;
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (cols[j].pos && cols[j].neg) eligible.push_back(j);
  if (required) {
    if (*required >= cols.size()) throw DomainError("required column out of range");
    if (std::find(eligible.begin(), eligible.end(), *required) == eligible.end())
      return std::nullopt;
  }
  if (eligible.size() < 3) return std::nullopt;

  std::uint64_t all_rows = 0;
  for (std::size_t j : eligible) all_rows |= cols[j].pos | cols[j].neg;
  const std::size_t nrows = static_cast<std::size_t>(64 - std::countl_zero(all_rows));

  if (auto w = two_row_violation(cols, eligible, required, nrows)) return w;

  IndexSet others;
  for (std::size_t j : eligible)
    if (!required || j != *required) others.push_back(j);
  const std::size_t fixed = required ? 1 : 0;

  std::vector<std::uint64_t> sets;
  std::vector<std::size_t> pick;
  for (std::size_t k = 4; k <= eligible.size(); ++k) {
    const std::size_t free = k - fixed;
    if (free > others.size()) break;
    pick.resize(free);
    for (std::size_t i = 0; i < free; ++i) pick[i] = i;
    for (;;) {
      sets.clear();
      IndexSet subset;
      if (required) subset.push_back(*required);
      for (std::size_t i : pick) subset.push_back(others[i]);
      for (std::size_t j : subset) {
        sets.push_back(cols[j].pos);
        sets.push_back(cols[j].neg);
      }
      std::uint64_t rows = 0;
      if (hitting_set(sets, 0, static_cast<int>(k) - 1, rows)) {
        std::sort(subset.begin(), subset.end());
        return MixedWitness{mask_to_rows(rows), subset};
      }
      std::size_t i = free;
      while (i > 0 && pick[i - 1] == others.size() - free + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t t = i; t < free; ++t) pick[t] = pick[t - 1] + 1;
    }
  }
  return std::nullopt;
}

bool witness_ok(std::span<const SignColumn> cols, const MixedWitness& w) {
  if (w.rows.empty() || w.rows.size() >= w.cols.size()) return false;
  std::uint64_t rows = 0;
  for (std::size_t i : w.rows) rows |= std::uint64_t{1} << i;
  return std::all_of(w.cols.begin(), w.cols.end(),
                     [&](std::size_t j) { return mixed_in(cols[j], rows); });
}

}  // namespace

std::optional<MixedWitness> find_violation(std::span<const SignColumn> cols,
                                           std::optional<std::size_t> required) {
  auto w = search_violation(cols, required);
  if (w && !witness_ok(cols, *w))
    throw InvariantViolation("violation search produced an invalid witness");
  return w;
}

std::optional<MixedWitness> find_violation(const SignMatrix& s) {
  const auto cols = sign_columns(s);
  return find_violation(cols);
}

bool is_complete_intersection(const SignMatrix& s) { return !find_violation(s); }

bool is_complete_intersection(const IntMatrix& b) {
  return is_complete_intersection(sign_pattern(b));
}

std::optional<MixedWitness> brute_force_violation(const SignMatrix& s,
                                                  std::size_t max_rows) {
  if (s.rows() > max_rows)
    throw SizeCapExceeded("brute-force violation scan is capped at " +
                          std::to_string(max_rows) + " rows");
  if (s.cols() >= 32) throw SizeCapExceeded("brute-force scan needs fewer than 32 columns");
  const std::uint64_t row_limit = std::uint64_t{1} << s.rows();
  const std::uint64_t col_limit = std::uint64_t{1} << s.cols();
  for (std::uint64_t rmask = 1; rmask < row_limit; ++rmask) {
    const int nr = std::popcount(rmask);
    for (std::uint64_t cmask = 1; cmask < col_limit; ++cmask) {
      if (std::popcount(cmask) <= nr) continue;
      bool mixed = true;
      for (std::size_t j = 0; j < s.cols() && mixed; ++j) {
        if (!(cmask >> j & 1)) continue;
        bool pos = false, neg = false;
        for (std::size_t i = 0; i < s.rows(); ++i) {
          if (!(rmask >> i & 1)) continue;
          pos = pos || s(i, j) > 0;
          neg = neg || s(i, j) < 0;
        }
        mixed = pos && neg;
      }
      if (mixed) return MixedWitness{mask_to_rows(rmask), mask_to_rows(cmask)};
    }
  }
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> find_two_full_rows(const SignMatrix& s) {
  if (s.cols() == 0) return std::nullopt;
  auto full = [&](std::size_t i) {
    for (std::size_t j = 0; j < s.cols(); ++j)
      if (s(i, j) == 0) return false;
    return true;
  };
  for (std::size_t i = 0; i + 1 < s.rows(); ++i)
    if (full(i) && full(i + 1)) return std::pair{i, i + 1};
  return std::nullopt;
}

}  // namespace toric_ci
