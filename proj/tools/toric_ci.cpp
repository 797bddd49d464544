// toric-ci: complete-intersection basis ideals of toric ideals.
//
// Exit codes:
//   0  success (ci-check: complete intersection; search: found)
//   1  verify-paper failure or internal error
//   2  usage or parse error
//   3  invalid basis
//   4  invalid configuration
//   10 ci-check: not a complete intersection
//   11 search: exhausted, no CI circuit basis
//   12 search: budget exceeded

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "toric_ci/circuits.hpp"
#include "toric_ci/citest.hpp"
#include "toric_ci/errors.hpp"
#include "toric_ci/generators.hpp"
#include "toric_ci/lattice.hpp"
#include "toric_ci/report_json.hpp"
#include "toric_ci/search.hpp"
#include "toric_ci/textio.hpp"
#include "toric_ci/verify.hpp"

namespace {

using namespace toric_ci;
using nlohmann::json;

enum Exit : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kInvalidBasis = 3,
  kInvalidConfig = 4,
  kNotCi = 10,
  kExhausted = 11,
  kBudget = 12,
};

struct ConfigInput {
  std::string path;
  bool no_homogeneity_check = false;
  bool allow_repeats = false;

  void add_to(CLI::App* cmd, const char* what = "configuration matrix file ('-' for stdin)") {
    cmd->add_option("input", path, what)->required();
    cmd->add_flag("--no-homogeneity-check", no_homogeneity_check,
                  "accept configurations whose row span misses (1,...,1)");
    cmd->add_flag("--allow-repeats", allow_repeats, "accept repeated columns");
  }

  Configuration load() const {
    IntMatrix a = path == "-" ? read_matrix(std::cin) : read_matrix_file(path);
    ValidationOptions opts;
    opts.require_homogeneity = !no_homogeneity_check;
    opts.allow_repeated_columns = allow_repeats;
    Configuration cfg = Configuration::validate(std::move(a), opts);
    for (const auto& w : cfg.warnings()) std::cerr << "warning: " << w << '\n';
    return cfg;
  }
};

std::string one_based(const IndexSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < s.size(); ++k) os << (k ? "," : "") << s[k] + 1;
  os << '}';
  return os.str();
}

std::string sign_string(std::span<const Integer> v) {
  std::string out;
  for (const auto& x : v) out += sgn(x) > 0 ? '+' : sgn(x) < 0 ? '-' : '0';
  return out;
}

std::vector<std::size_t> parse_index_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    if (tok.empty()) continue;
    const long v = std::stol(tok);
    if (v < 1) throw DomainError("indices are 1-based");
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  return out;
}

IntVector parse_integer_list(const std::string& s) {
  IntVector out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');)
    if (!tok.empty()) out.emplace_back(tok);
  return out;
}

void print_report_text(const SearchReport& rep) {
  std::cout << "verdict: " << to_string(rep.verdict) << '\n';
  if (rep.basis) {
    std::cout << "basis (columns):\n";
    const auto binomials = binomial_strings(*rep.basis);
    for (std::size_t j = 0; j < rep.basis->cols(); ++j)
      std::cout << "  " << to_string(rep.basis->column(j)) << "   " << binomials[j] << '\n';
  }
  if (rep.index_g) std::cout << "g: " << *rep.index_g << '\n';
  if (rep.laurent_equal)
    std::cout << "laurent_equal: " << (*rep.laurent_equal ? "true" : "false") << '\n';
  if (rep.witness)
    std::cout << "witness: rows " << one_based(rep.witness->rows) << " cols "
              << one_based(rep.witness->cols) << '\n';
  if (rep.full_rows)
    std::cout << "consecutive full rows: " << rep.full_rows->first + 1 << ","
              << rep.full_rows->second + 1 << " (associated prime <x"
              << rep.full_rows->first + 1 << ", x" << rep.full_rows->second + 1 << ">)\n";
  const auto& c = rep.counters;
  std::cout << "circuits: " << c.circuits << "  combinations: " << rep.combinations
            << "  tested: " << c.tested << "  pruned_sign: " << c.pruned_sign
            << "  pruned_rank: " << c.pruned_rank << "  ci_bases: " << c.ci_bases << '\n';
  if (rep.lower_rank_circuits)
    std::cout << "note: some circuits have support smaller than m+1\n";
  std::cout << "elapsed_ms: " << rep.elapsed_ms << '\n';
}

int cmd_kernel(const ConfigInput& in, bool as_json) {
  const Configuration cfg = in.load();
  const LatticeBasis lb = kernel_lattice(cfg);
  if (as_json) {
    json j;
    j["m"] = cfg.m();
    j["n"] = cfg.n();
    j["codimension"] = cfg.codimension();
    j["basis"] = matrix_columns_to_json(lb.basis);
    j["binomials"] = binomial_strings(lb.basis);
    j["g"] = integer_to_json(lb.index_g);
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  if (cfg.codimension() == 0) {
    std::cout << "codimension 0: the kernel lattice is trivial\n";
    return kOk;
  }
  std::cout << "# kernel lattice basis, columns; g = " << lb.index_g << '\n';
  write_matrix(std::cout, lb.basis);
  for (const auto& b : binomial_strings(lb.basis)) std::cout << "# " << b << '\n';
  return kOk;
}

int cmd_circuits(const ConfigInput& in, bool as_json) {
  const Configuration cfg = in.load();
  const auto circuits = enumerate_circuits(cfg);
  if (as_json) {
    json arr = json::array();
    for (const auto& c : circuits) {
      json support = json::array();
      for (std::size_t i : c.support) support.push_back(i + 1);
      arr.push_back({{"vector", vector_to_json(c.vector)},
                     {"support", support},
                     {"signs", sign_string(c.vector)},
                     {"binomial", binomial_string(c.vector)},
                     {"maximal", c.maximal}});
    }
    std::cout << json{{"count", circuits.size()}, {"circuits", arr}}.dump(2) << '\n';
    return kOk;
  }
  std::cout << "# " << circuits.size() << " circuits\n";
  for (std::size_t k = 0; k < circuits.size(); ++k) {
    const auto& c = circuits[k];
    std::cout << k + 1 << ": " << to_string(c.vector) << "  support " << one_based(c.support)
              << "  signs " << sign_string(c.vector) << "  " << binomial_string(c.vector)
              << (c.maximal ? "" : "  [lower rank]") << '\n';
  }
  return kOk;
}

int report_violation(const SignMatrix& s, bool as_json) {
  const auto w = find_violation(s);
  auto rows = find_two_full_rows(s);
  if (as_json) {
    json j;
    j["complete_intersection"] = !w.has_value();
    if (w) {
      json wr = json::array(), wc = json::array();
      for (std::size_t i : w->rows) wr.push_back(i + 1);
      for (std::size_t i : w->cols) wc.push_back(i + 1);
      j["witness"] = {{"rows", wr}, {"cols", wc}};
    } else {
      j["witness"] = nullptr;
    }
    std::cout << j.dump(2) << '\n';
  } else if (w) {
    std::cout << "complete intersection: false\nwitness: rows " << one_based(w->rows)
              << " cols " << one_based(w->cols) << " (" << w->rows.size() << " < "
              << w->cols.size() << ")\n";
    if (rows && s.cols() >= 3)
      std::cout << "consecutive full rows: " << rows->first + 1 << "," << rows->second + 1
                << '\n';
  } else {
    std::cout << "complete intersection: true\n";
  }
  return w ? kNotCi : kOk;
}

int cmd_ci_check(const ConfigInput& in, const std::string& basis_path,
                 const std::string& signs_path, bool as_json) {
  if (!signs_path.empty()) {
    const SignMatrix s = signs_path == "-" ? read_sign_matrix(std::cin)
                                           : read_sign_matrix_file(signs_path);
    return report_violation(s, as_json);
  }
  if (in.path.empty() || basis_path.empty())
    throw CLI::ValidationError("ci-check needs A and B files, or --signs FILE");
  const Configuration cfg = in.load();
  const IntMatrix b = read_matrix_file(basis_path);
  const SearchReport rep = check_given_basis(cfg, b);
  if (as_json)
    std::cout << report_to_json(rep).dump(2) << '\n';
  else
    print_report_text(rep);
  return rep.verdict == Verdict::Found ? kOk : kNotCi;
}

int cmd_search(const ConfigInput& in, SearchOptions opts, const std::string& supports,
               bool as_json) {
  const Configuration cfg = in.load();
  if (!supports.empty()) {
    std::vector<IndexSet> seeds;
    std::stringstream ss(supports);
    for (std::string part; std::getline(ss, part, ';');)
      if (!part.empty()) seeds.push_back(parse_index_list(part));
    opts.supports = std::move(seeds);
  }
  const SearchReport rep = search_ci_circuit_basis(cfg, opts);
  if (as_json)
    std::cout << report_to_json(rep).dump(2) << '\n';
  else
    print_report_text(rep);
  switch (rep.verdict) {
    case Verdict::Found: return kOk;
    case Verdict::ExhaustedNone: return kExhausted;
    case Verdict::BudgetExceeded: return kBudget;
    case Verdict::NotCompleteIntersection: return kNotCi;
  }
  return kFailure;
}

struct GenArgs {
  std::string family;
  std::string a;
  std::string t;
  std::size_t m = 0;
  std::size_t r = 0;
  std::size_t n = 0;
};

int cmd_gen(const GenArgs& g) {
  Configuration cfg = [&] {
    if (g.family == "curve") {
      if (g.a.empty()) throw CLI::ValidationError("--family curve needs --a");
      return monomial_curve(parse_integer_list(g.a));
    }
    if (g.family == "cyclic") {
      IntVector t = g.t.empty() ? default_cyclic_parameters(g.n) : parse_integer_list(g.t);
      std::size_t m = g.m;
      if (m == 0 && g.r > 0 && t.size() > g.r) m = t.size() - g.r;
      if (m == 0) throw CLI::ValidationError("--family cyclic needs --m or --r");
      return cyclic_polytope(m, t);
    }
    if (g.family == "polygon") return convex_polygon(g.n);
    throw CLI::ValidationError("unknown family '" + g.family + "'");
  }();
  for (const auto& w : cfg.warnings()) std::cerr << "warning: " << w << '\n';
  std::cout << "# " << g.family << " configuration, m=" << cfg.m() << " n=" << cfg.n()
            << " r=" << cfg.codimension() << '\n';
  write_matrix(std::cout, cfg.matrix());
  return kOk;
}

struct BoundArgs {
  std::size_t d = 0;
  std::size_t n = 0;
  bool threshold = false;
  std::size_t codim3 = 0;
  std::string scan;
  std::size_t param = 0;
  std::size_t from = 0;
  std::size_t to = 0;
};

int cmd_bound(const BoundArgs& b, const SearchOptions& opts, bool as_json) {
  json out = json::object();
  if (b.codim3) {
    const std::size_t v = codim3_bound(b.codim3);
    out["codim3_bound"] = v;
    if (!as_json) std::cout << "codim3_bound(" << b.codim3 << ") = " << v << '\n';
  }
  if (b.d && b.n) {
    const auto e = bound_eval(b.d, b.n);
    out["eval"] = {{"d", e.d}, {"n", e.n}, {"lhs", integer_to_json(e.lhs)},
                   {"rhs", integer_to_json(e.rhs)}, {"holds", e.holds}};
    if (!as_json)
      std::cout << "d=" << e.d << " n=" << e.n << ": C(n,d+2) = " << e.lhs
                << ", 2(n-d-1)C(n-2,d) = " << e.rhs << ", holds: " << (e.holds ? "yes" : "no")
                << '\n';
  }
  if (b.d && b.threshold) {
    const std::size_t t = bound_threshold(b.d);
    out["threshold"] = t;
    if (!as_json) std::cout << "bound_threshold(" << b.d << ") = " << t << '\n';
  }
  if (!b.scan.empty()) {
    const Family fam = b.scan == "cyclic" ? Family::Cyclic
                       : b.scan == "polygon"
                           ? Family::Polygon
                           : throw CLI::ValidationError("--scan takes cyclic or polygon");
    const std::size_t param = b.param ? b.param : (fam == Family::Polygon ? 2 : 3);
    json rows = json::array();
    for (const auto& row : verify_nonexistence_bound(fam, param, b.from, b.to, opts)) {
      rows.push_back({{"n", row.n}, {"verdict", to_string(row.report.verdict)},
                      {"circuits", row.report.counters.circuits},
                      {"tested", row.report.counters.tested},
                      {"elapsed_ms", row.report.elapsed_ms}});
      if (!as_json)
        std::cout << b.scan << " param=" << param << " n=" << row.n << ": "
                  << to_string(row.report.verdict) << " (" << row.report.counters.circuits
                  << " circuits, " << row.report.counters.tested << " tested)\n";
    }
    out["scan"] = rows;
  }
  if (out.empty()) throw CLI::ValidationError("bound needs --codim3, --d with --n/--threshold, or --scan");
  if (as_json) std::cout << out.dump(2) << '\n';
  return kOk;
}

int cmd_verify(const VerifyOptions& opts, bool as_json) {
  const auto results = run_verification(opts);
  const bool ok = all_blocking_passed(results);
  if (as_json) {
    json arr = json::array();
    for (const auto& r : results)
      arr.push_back({{"id", r.id}, {"group", r.group}, {"name", r.name}, {"passed", r.passed},
                     {"blocking", r.blocking}, {"detail", r.detail},
                     {"elapsed_ms", r.elapsed_ms}});
    std::cout << json{{"passed", ok}, {"checks", arr}}.dump(2) << '\n';
  } else {
    for (const auto& r : results)
      std::cout << (r.passed ? "PASS" : r.blocking ? "FAIL" : "INFO") << "  [" << r.id
                << "] " << r.name << " -- " << r.detail << '\n';
    std::cout << (ok ? "all checks passed\n" : "some checks failed\n");
  }
  return ok ? kOk : kFailure;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("TORIC_CI_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed TORIC_CI_BUDGET\n";
    }
  }
  return kDefaultBudget;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complete-intersection basis ideals of toric ideals", "toric-ci"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  ConfigInput kernel_in, circuits_in, check_in, search_in;
  auto* kernel = app.add_subcommand("kernel", "saturated kernel lattice basis and index");
  kernel_in.add_to(kernel);
  kernel->add_flag("--json", as_json);

  auto* circuits = app.add_subcommand("circuits", "list the circuits of the kernel lattice");
  circuits_in.add_to(circuits);
  circuits->add_flag("--json", as_json);

  std::string basis_path, signs_path;
  auto* check = app.add_subcommand("ci-check", "test the complete-intersection criterion");
  check->add_option("input", check_in.path, "configuration matrix file");
  check->add_option("basis", basis_path, "n x r basis matrix file");
  check->add_option("--signs", signs_path, "sign matrix file ('+ - 0' rows)");
  check->add_flag("--no-homogeneity-check", check_in.no_homogeneity_check);
  check->add_flag("--allow-repeats", check_in.allow_repeats);
  check->add_flag("--json", as_json);

  SearchOptions search_opts;
  search_opts.budget = default_budget();
  std::string mode = "first-found", supports;
  bool no_prune = false;
  auto* search = app.add_subcommand("search", "search for a CI basis ideal made of circuits");
  search_in.add_to(search);
  search->add_option("--mode", mode, "exhaustive | first-found | randomized")
      ->check(CLI::IsMember({"exhaustive", "first-found", "randomized"}));
  search->add_option("--budget", search_opts.budget, "maximum r-subsets tested")
      ->check(CLI::PositiveNumber);
  search->add_option("--jobs", search_opts.jobs, "worker threads")->check(CLI::PositiveNumber);
  search->add_option("--seed", search_opts.seed, "seed for randomized mode");
  search->add_option("--supports", supports,
                     "restrict to circuits on these 1-based supports, e.g. '1,2,3,4;1,2,4,9'");
  search->add_flag("--no-prune", no_prune, "disable prefix pruning");
  search->add_flag("--json", as_json);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "emit a configuration from a family");
  gen->add_option("--family", gen_args.family, "curve | cyclic | polygon")
      ->required()
      ->check(CLI::IsMember({"curve", "cyclic", "polygon"}));
  gen->add_option("--a", gen_args.a, "curve exponents, comma separated");
  gen->add_option("--t", gen_args.t, "cyclic parameters, comma separated");
  gen->add_option("--m", gen_args.m, "cyclic: number of rows");
  gen->add_option("--r", gen_args.r, "cyclic: codimension (m = n - r)");
  gen->add_option("--n", gen_args.n, "number of points (cyclic with t = 1..n, polygon)");

  BoundArgs bound_args;
  auto* bound = app.add_subcommand("bound", "counting bounds and nonexistence scans");
  bound->add_option("--d", bound_args.d, "dimension for the counting bound");
  bound->add_option("--n", bound_args.n, "point count for --d");
  bound->add_flag("--threshold", bound_args.threshold, "smallest n where the bound holds");
  bound->add_option("--codim3", bound_args.codim3, "evaluate 2(r^2-r+1) at r");
  bound->add_option("--scan", bound_args.scan, "cyclic | polygon: search each n in a range");
  bound->add_option("--param", bound_args.param, "scan parameter (cyclic: r, polygon: d)");
  bound->add_option("--from", bound_args.from, "first n of the scan");
  bound->add_option("--to", bound_args.to, "last n of the scan");
  bound->add_option("--budget", search_opts.budget, "per-row search budget");
  bound->add_flag("--json", as_json);

  VerifyOptions verify_opts;
  std::string only;
  auto* verify = app.add_subcommand("verify-paper", "run the reproduction checks");
  verify->add_option("--only", only, "run one group of checks");
  verify->add_option("--seed", verify_opts.seed, "seed for the randomized checks");
  verify->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*kernel) return cmd_kernel(kernel_in, as_json);
    if (*circuits) return cmd_circuits(circuits_in, as_json);
    if (*check) return cmd_ci_check(check_in, basis_path, signs_path, as_json);
    if (*search) {
      search_opts.mode = parse_search_mode(mode);
      search_opts.prune = !no_prune;
      return cmd_search(search_in, search_opts, supports, as_json);
    }
    if (*gen) return cmd_gen(gen_args);
    if (*bound) return cmd_bound(bound_args, search_opts, as_json);
    if (*verify) {
      if (!only.empty()) verify_opts.only = only;
      return cmd_verify(verify_opts, as_json);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidBasis& e) {
    std::cerr << "invalid basis: " << e.what() << '\n';
    return kInvalidBasis;
  } catch (const InvalidConfiguration& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kInvalidConfig;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
