#include "toric_ci/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "toric_ci/errors.hpp"
#include "toric_ci/generators.hpp"

namespace toric_ci {

const char* to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::Exhaustive: return "exhaustive";
    case SearchMode::FirstFound: return "first-found";
    case SearchMode::Randomized: return "randomized";
  }
  return "?";
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Found: return "found";
    case Verdict::ExhaustedNone: return "exhausted-none";
    case Verdict::BudgetExceeded: return "budget-exceeded";
    case Verdict::NotCompleteIntersection: return "not-ci";
  }
  return "?";
}

SearchMode parse_search_mode(const std::string& s) {
  for (auto m : {SearchMode::Exhaustive, SearchMode::FirstFound, SearchMode::Randomized})
    if (s == to_string(m)) return m;
  throw DomainError("unknown search mode '" + s + "'");
}

Verdict parse_verdict(const std::string& s) {
  for (auto v : {Verdict::Found, Verdict::ExhaustedNone, Verdict::BudgetExceeded,
                 Verdict::NotCompleteIntersection})
    if (s == to_string(v)) return v;
  throw DomainError("unknown verdict '" + s + "'");
}

SearchCounters& SearchCounters::operator+=(const SearchCounters& o) {
  tested += o.tested;
  pruned_sign += o.pruned_sign;
  pruned_rank += o.pruned_rank;
  ci_bases += o.ci_bases;
  return *this;
}

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(c);
}

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

struct SharedState {
  const std::vector<Circuit>& circuits;
  std::vector<SignColumn> signs;
  std::size_t r = 0;
  std::size_t n = 0;
  const SearchOptions& opts;
  std::atomic<std::uint64_t> tested{0};
  std::atomic<bool> budget_hit{false};
  std::atomic<std::size_t> best_first;
  std::atomic<std::size_t> next_first{0};
  std::vector<std::optional<std::vector<std::size_t>>> found_by_first;

  SharedState(const std::vector<Circuit>& c, std::size_t r_, std::size_t n_,
              const SearchOptions& o)
      : circuits(c), r(r_), n(n_), opts(o), best_first(c.size()),
        found_by_first(c.size()) {
    SignMatrix s(n, c.size());
    for (std::size_t j = 0; j < c.size(); ++j)
      for (std::size_t i : c[j].support) s.set(i, j, sgn(c[j].vector[i]));
    signs = sign_columns(s);
  }

  bool take_test() {
    if (tested.fetch_add(1, std::memory_order_relaxed) >= opts.budget) {
      tested.fetch_sub(1, std::memory_order_relaxed);
      budget_hit.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }
};

// Full CI + rank check of an r-subset, independent of any prefix state.
bool subset_is_ci_basis(const SharedState& st, std::span<const std::size_t> idx) {
  std::vector<SignColumn> cols;
  cols.reserve(idx.size());
  for (std::size_t i : idx) cols.push_back(st.signs[i]);
  if (find_violation(cols)) return false;
  EchelonBasis span(st.n);
  for (std::size_t i : idx)
    if (!span.add(st.circuits[i].vector)) return false;
  return true;
}

// Depth-first walk over r-subsets in lexicographic order with one first
// index fixed per call to explore().
class PrefixWalker {
 public:
  explicit PrefixWalker(SharedState& st)
      : st_(st), chosen_(st.r), cols_(st.r), span_(st.r + 1, EchelonBasis(st.n)) {}

  void explore(std::size_t first) {
    found_ = false;
    visit(0, first, first + 1);
  }

  const SearchCounters& counters() const { return counters_; }

 private:
  bool should_stop() const {
    if (st_.budget_hit.load(std::memory_order_relaxed)) return true;
    if (st_.opts.mode == SearchMode::Exhaustive) return false;
    return found_ || st_.best_first.load(std::memory_order_relaxed) < chosen_[0];
  }

  void record(std::size_t depth) {
    ++counters_.ci_bases;
    if (st_.found_by_first[chosen_[0]]) return;  // keep the lexicographically first
    st_.found_by_first[chosen_[0]] =
        std::vector<std::size_t>(chosen_.begin(), chosen_.begin() + static_cast<std::ptrdiff_t>(depth) + 1);
    found_ = true;
    std::size_t cur = st_.best_first.load();
    while (chosen_[0] < cur && !st_.best_first.compare_exchange_weak(cur, chosen_[0])) {
    }
  }

  // Places index i at position `depth`, then recurses over [next, N).
  void visit(std::size_t depth, std::size_t i, std::size_t next) {
    const std::size_t total = st_.circuits.size();
    const bool prune = st_.opts.prune;
    chosen_[depth] = i;
    cols_[depth] = st_.signs[i];
    const std::span<const SignColumn> prefix(cols_.data(), depth + 1);

    if (depth + 1 == st_.r) {
      if (!st_.take_test()) return;
      ++counters_.tested;
      bool ok;
      if (prune) {
        ok = !find_violation(prefix, depth) &&
             span_[depth].is_independent(st_.circuits[i].vector);
      } else {
        ok = subset_is_ci_basis(st_, chosen_);
      }
      if (ok) record(depth);
      return;
    }

    if (prune) {
      const std::uint64_t below = binomial_u64(total - 1 - i, st_.r - depth - 1);
      if (depth >= 2 && find_violation(prefix, depth)) {
        counters_.pruned_sign = saturating_add(counters_.pruned_sign, below);
        return;
      }
      span_[depth + 1] = span_[depth];
      if (!span_[depth + 1].add(st_.circuits[i].vector)) {
        counters_.pruned_rank = saturating_add(counters_.pruned_rank, below);
        return;
      }
    }
    const std::size_t remaining = st_.r - depth - 1;
    for (std::size_t j = next; j + remaining <= total; ++j) {
      if (should_stop()) return;
      visit(depth + 1, j, j + 1);
    }
  }

  SharedState& st_;
  std::vector<std::size_t> chosen_;
  std::vector<SignColumn> cols_;
  std::vector<EchelonBasis> span_;
  SearchCounters counters_;
  bool found_ = false;
};

std::optional<std::vector<std::size_t>> run_prefix_search(SharedState& st,
                                                          SearchCounters& counters) {
  const std::size_t total = st.circuits.size();
  const unsigned jobs = std::max(1u, st.opts.jobs);
  std::vector<SearchCounters> per_worker(jobs);

  auto worker = [&](unsigned w) {
    PrefixWalker walker(st);
    for (;;) {
      const std::size_t first = st.next_first.fetch_add(1);
      if (first + st.r > total) break;
      if (st.budget_hit.load()) break;
      if (st.opts.mode != SearchMode::Exhaustive && st.best_first.load() < first) break;
      walker.explore(first);
    }
    per_worker[w] = walker.counters();
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (auto& t : threads) t.join();
  }
  for (const auto& c : per_worker) counters += c;

  for (const auto& f : st.found_by_first)
    if (f) return f;
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> run_randomized(SharedState& st,
                                                       SearchCounters& counters,
                                                       std::uint64_t total) {
  const std::size_t n_circ = st.circuits.size();
  std::mt19937_64 rng(st.opts.seed);
  auto evaluate = [&](const std::vector<std::size_t>& idx) {
    ++counters.tested;
    if (!subset_is_ci_basis(st, idx)) return false;
    ++counters.ci_bases;
    return true;
  };

  if (total <= 1'000'000) {
    // Small space: shuffle all subsets and walk the permutation.
    std::vector<std::vector<std::size_t>> all;
    all.reserve(total);
    std::vector<std::size_t> idx(st.r);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      all.push_back(idx);
      std::size_t i = st.r;
      while (i > 0 && idx[i - 1] == n_circ - st.r + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < st.r; ++j) idx[j] = idx[j - 1] + 1;
    }
    std::shuffle(all.begin(), all.end(), rng);
    for (const auto& s : all) {
      if (counters.tested >= st.opts.budget) {
        st.budget_hit = true;
        return std::nullopt;
      }
      if (evaluate(s)) return s;
    }
    return std::nullopt;
  }

  // Large space: Floyd sampling with rejection of repeats.
  std::set<std::vector<std::size_t>> seen;
  while (counters.tested < st.opts.budget) {
    std::set<std::size_t> pick;
    for (std::size_t j = n_circ - st.r; j < n_circ; ++j) {
      const std::size_t t = std::uniform_int_distribution<std::size_t>(0, j)(rng);
      if (!pick.insert(t).second) pick.insert(j);
    }
    std::vector<std::size_t> s(pick.begin(), pick.end());
    if (!seen.insert(s).second) continue;
    if (evaluate(s)) return s;
  }
  st.budget_hit = true;
  return std::nullopt;
}

IntMatrix assemble(const std::vector<Circuit>& circuits, std::span<const std::size_t> idx,
                   std::size_t n) {
  std::vector<IntVector> cols;
  for (std::size_t i : idx) cols.push_back(circuits[i].vector);
  return IntMatrix::from_columns(cols, n);
}

void verify_found(const Configuration& cfg, const IntMatrix& b) {
  if (!(cfg.matrix() * b).is_zero() || rank(b) != cfg.codimension())
    throw InvariantViolation("search produced a basis that is not a full-rank kernel matrix");
  const SignMatrix s = sign_pattern(b);
  if (find_violation(s))
    throw InvariantViolation("search produced a basis that fails the CI criterion");
  if (s.rows() <= 12 && s.cols() < 32 && brute_force_violation(s))
    throw InvariantViolation("brute-force scan disagrees with the search");
}

std::optional<std::pair<std::size_t, std::size_t>> mixed_full_rows(const SignMatrix& s) {
  auto rows = find_two_full_rows(s);
  if (!rows || s.cols() < 3) return std::nullopt;
  IndexSet all(s.cols());
  std::iota(all.begin(), all.end(), 0);
  if (!is_valid_witness(s, MixedWitness{{rows->first, rows->second}, all})) return std::nullopt;
  return rows;
}

}  // namespace

SearchReport search_ci_circuit_basis(const Configuration& cfg, const SearchOptions& opts) {
  const std::vector<Circuit> circuits = enumerate_circuits(cfg);
  return search_ci_circuit_basis(cfg, circuits, opts);
}

SearchReport search_ci_circuit_basis(const Configuration& cfg,
                                     std::span<const Circuit> all_circuits,
                                     const SearchOptions& opts) {
  const auto start = Clock::now();
  const std::size_t r = cfg.codimension();
  if (r == 0) throw DomainError("search needs codimension at least 1");
  if (opts.budget == 0) throw DomainError("search budget must be positive");

  std::vector<Circuit> circuits;
  if (opts.supports) {
    for (const auto& s : *opts.supports) {
      auto it = std::find_if(all_circuits.begin(), all_circuits.end(),
                             [&](const Circuit& c) { return c.support == s; });
      if (it == all_circuits.end())
        throw DomainError("seeded support is not a circuit support");
      circuits.push_back(*it);
    }
    std::sort(circuits.begin(), circuits.end(), canonical_less);
    circuits.erase(std::unique(circuits.begin(), circuits.end(),
                               [](const Circuit& a, const Circuit& b) { return a.support == b.support; }),
                   circuits.end());
  } else {
    circuits.assign(all_circuits.begin(), all_circuits.end());
  }

  SearchReport report;
  report.mode = opts.mode;
  report.seed = opts.seed;
  report.counters.circuits = circuits.size();
  report.combinations = binomial_u64(circuits.size(), r);
  report.lower_rank_circuits = std::any_of(circuits.begin(), circuits.end(),
                                           [](const Circuit& c) { return !c.maximal; });

  SharedState st(circuits, r, cfg.n(), opts);
  std::optional<std::vector<std::size_t>> found;
  if (circuits.size() >= r) {
    found = opts.mode == SearchMode::Randomized
                ? run_randomized(st, report.counters, report.combinations)
                : run_prefix_search(st, report.counters);
  }

  if (found) {
    IntMatrix b = assemble(circuits, *found, cfg.n());
    verify_found(cfg, b);
    report.verdict = Verdict::Found;
    report.index_g = gcd_maximal_minors(b);
    report.laurent_equal = *report.index_g == 1;
    report.basis = std::move(b);
  } else if (st.budget_hit) {
    report.verdict = Verdict::BudgetExceeded;
  } else {
    report.verdict = Verdict::ExhaustedNone;
    const auto& c = report.counters;
    if (report.combinations != UINT64_MAX &&
        saturating_add(saturating_add(c.tested, c.pruned_sign), c.pruned_rank) !=
            report.combinations)
      throw InvariantViolation("exhaustive search did not cover every r-subset");
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

SearchReport check_given_basis(const Configuration& cfg, const IntMatrix& b) {
  const auto start = Clock::now();
  LatticeBasis lb = make_basis(cfg, b);
  const SignMatrix s = sign_pattern(lb.basis);
  SearchReport report;
  report.witness = find_violation(s);
  report.verdict = report.witness ? Verdict::NotCompleteIntersection : Verdict::Found;
  report.full_rows = mixed_full_rows(s);
  report.index_g = lb.index_g;
  report.laurent_equal = lb.index_g == 1;
  report.counters.tested = 1;
  report.combinations = 1;
  report.basis = std::move(lb.basis);
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

std::vector<BoundRow> verify_nonexistence_bound(Family family, std::size_t param,
                                                std::size_t n_lo, std::size_t n_hi,
                                                const SearchOptions& opts) {
  if (family == Family::Polygon && param != 2)
    throw DomainError("the polygon family is planar (d = 2)");
  if (family == Family::Cyclic && param < 1) throw DomainError("codimension must be positive");
  std::vector<BoundRow> rows;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    Configuration cfg = family == Family::Cyclic
                            ? cyclic_polytope(n - param, default_cyclic_parameters(n))
                            : convex_polygon(n);
    rows.push_back({n, search_ci_circuit_basis(cfg, opts)});
  }
  return rows;
}

}  // namespace toric_ci
