#include "toric_ci/report_json.hpp"

#include "toric_ci/errors.hpp"
#include "toric_ci/lattice.hpp"

namespace toric_ci {

using nlohmann::json;

json integer_to_json(const Integer& x) {
  if (mpz_fits_slong_p(x.get_mpz_t())) return json(x.get_si());
  return json(x.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw DomainError("expected an integer in JSON");
}

json vector_to_json(std::span<const Integer> v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(integer_to_json(x));
  return arr;
}

json matrix_columns_to_json(const IntMatrix& m) {
  json cols = json::array();
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(vector_to_json(m.column(j)));
  return cols;
}

namespace {

json one_based(const IndexSet& idx) {
  json arr = json::array();
  for (std::size_t i : idx) arr.push_back(i + 1);
  return arr;
}

IndexSet zero_based(const json& arr) {
  IndexSet out;
  for (const auto& x : arr) out.push_back(x.get<std::size_t>() - 1);
  return out;
}

}  // namespace

json report_to_json(const SearchReport& report) {
  json j;
  j["verdict"] = to_string(report.verdict);
  j["mode"] = to_string(report.mode);
  if (report.basis) {
    j["basis"] = matrix_columns_to_json(*report.basis);
    j["binomials"] = binomial_strings(*report.basis);
  } else {
    j["basis"] = nullptr;
    j["binomials"] = nullptr;
  }
  if (report.witness)
    j["witness"] = {{"rows", one_based(report.witness->rows)},
                    {"cols", one_based(report.witness->cols)}};
  else
    j["witness"] = nullptr;
  if (report.full_rows)
    j["full_rows"] = {report.full_rows->first + 1, report.full_rows->second + 1};
  else
    j["full_rows"] = nullptr;
  j["g"] = report.index_g ? integer_to_json(*report.index_g) : json(nullptr);
  j["laurent_equal"] = report.laurent_equal ? json(*report.laurent_equal) : json(nullptr);
  j["counters"] = {{"circuits", report.counters.circuits},
                   {"tested", report.counters.tested},
                   {"pruned_sign", report.counters.pruned_sign},
                   {"pruned_rank", report.counters.pruned_rank},
                   {"ci_bases", report.counters.ci_bases}};
  j["combinations"] = report.combinations;
  j["seed"] = report.seed;
  j["elapsed_ms"] = report.elapsed_ms;
  j["lower_rank_circuits"] = report.lower_rank_circuits;
  return j;
}

SearchReport report_from_json(const json& j) {
  SearchReport r;
  r.verdict = parse_verdict(j.at("verdict").get<std::string>());
  r.mode = parse_search_mode(j.at("mode").get<std::string>());
  if (!j.at("basis").is_null()) {
    std::vector<IntVector> cols;
    for (const auto& c : j.at("basis")) {
      IntVector v;
      for (const auto& x : c) v.push_back(integer_from_json(x));
      cols.push_back(std::move(v));
    }
    const std::size_t n = cols.empty() ? 0 : cols.front().size();
    r.basis = IntMatrix::from_columns(cols, n);
  }
  if (!j.at("witness").is_null())
    r.witness = MixedWitness{zero_based(j["witness"].at("rows")),
                             zero_based(j["witness"].at("cols"))};
  if (!j.at("full_rows").is_null())
    r.full_rows = std::pair{j["full_rows"][0].get<std::size_t>() - 1,
                            j["full_rows"][1].get<std::size_t>() - 1};
  if (!j.at("g").is_null()) r.index_g = integer_from_json(j["g"]);
  if (!j.at("laurent_equal").is_null()) r.laurent_equal = j["laurent_equal"].get<bool>();
  const auto& c = j.at("counters");
  r.counters.circuits = c.at("circuits").get<std::uint64_t>();
  r.counters.tested = c.at("tested").get<std::uint64_t>();
  r.counters.pruned_sign = c.at("pruned_sign").get<std::uint64_t>();
  r.counters.pruned_rank = c.at("pruned_rank").get<std::uint64_t>();
  r.counters.ci_bases = c.at("ci_bases").get<std::uint64_t>();
  r.combinations = j.at("combinations").get<std::uint64_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  r.lower_rank_circuits = j.at("lower_rank_circuits").get<bool>();
  return r;
}

}  // namespace toric_ci
