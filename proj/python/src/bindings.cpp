#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "toric_ci/circuits.hpp"
#include "toric_ci/citest.hpp"
#include "toric_ci/errors.hpp"
#include "toric_ci/generators.hpp"
#include "toric_ci/lattice.hpp"
#include "toric_ci/report_json.hpp"
#include "toric_ci/search.hpp"
#include "toric_ci/verify.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace toric_ci;

namespace {

Integer to_integer(const py::handle& h) { return Integer(py::str(h).cast<std::string>()); }

py::int_ to_py(const Integer& x) {
  if (mpz_fits_slong_p(x.get_mpz_t())) return py::int_(x.get_si());
  return py::int_(py::str(x.get_str()));
}

IntVector to_vector(const py::sequence& seq) {
  IntVector v;
  for (auto h : seq) v.push_back(to_integer(h));
  return v;
}

py::list to_list(std::span<const Integer> v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

/// Rows given as a sequence of sequences of ints.
IntMatrix to_matrix(const py::sequence& rows) {
  std::vector<IntVector> r;
  for (auto row : rows) r.push_back(to_vector(row.cast<py::sequence>()));
  const std::size_t cols = r.empty() ? 0 : r.front().size();
  for (const auto& row : r)
    if (row.size() != cols) throw DimensionError("ragged matrix rows");
  return IntMatrix::from_rows(r, cols);
}

IntMatrix columns_to_matrix(const py::sequence& columns, std::size_t n) {
  std::vector<IntVector> c;
  for (auto col : columns) c.push_back(to_vector(col.cast<py::sequence>()));
  for (const auto& col : c)
    if (col.size() != n) throw DimensionError("column length does not match n");
  return IntMatrix::from_columns(c, n);
}

py::list rows_of(const IntMatrix& m) {
  py::list out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.append(to_list(m.row(i)));
  return out;
}

py::list columns_of(const IntMatrix& m) {
  py::list out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.append(to_list(m.column(j)));
  return out;
}

SignMatrix to_signs(const py::sequence& rows) {
  std::vector<std::vector<int>> r;
  for (auto row : rows) {
    std::vector<int> v;
    for (auto h : row.cast<py::sequence>()) {
      if (py::isinstance<py::str>(h)) {
        const std::string t = h.cast<std::string>();
        if (t == "+") v.push_back(1);
        else if (t == "-") v.push_back(-1);
        else if (t == "0") v.push_back(0);
        else throw DomainError("sign tokens are '+', '-' and '0'");
      } else {
        v.push_back(sgn(to_integer(h)));
      }
    }
    r.push_back(std::move(v));
  }
  const std::size_t cols = r.empty() ? 0 : r.front().size();
  SignMatrix s(r.size(), cols);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].size() != cols) throw DimensionError("ragged sign matrix rows");
    for (std::size_t j = 0; j < cols; ++j) s.set(i, j, r[i][j]);
  }
  return s;
}

py::object witness_to_py(const std::optional<MixedWitness>& w) {
  if (!w) return py::none();
  return py::make_tuple(w->rows, w->cols);
}

std::string report_json(const SearchReport& r) { return report_to_json(r).dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Complete-intersection basis ideals of toric ideals (native core)";

  // Translators run newest first, so the base class is registered first.
  auto& error = py::register_exception<Error>(m, "ToricCIError", PyExc_ValueError);
  auto& invalid_config =
      py::register_exception<InvalidConfiguration>(m, "InvalidConfiguration", error.ptr());
  py::register_exception<NotHomogeneous>(m, "NotHomogeneous", invalid_config.ptr());
  py::register_exception<InvalidBasis>(m, "InvalidBasis", error.ptr());
  py::register_exception<DomainError>(m, "DomainError", error.ptr());
  py::register_exception<DimensionError>(m, "DimensionError", error.ptr());

  py::class_<Configuration>(m, "Configuration")
      .def(py::init([](const py::sequence& rows, bool require_homogeneity, bool allow_repeats) {
             ValidationOptions opts;
             opts.require_homogeneity = require_homogeneity;
             opts.allow_repeated_columns = allow_repeats;
             return Configuration::validate(to_matrix(rows), opts);
           }),
           "rows"_a, py::kw_only(), "require_homogeneity"_a = true, "allow_repeats"_a = false)
      .def_property_readonly("m", &Configuration::m)
      .def_property_readonly("n", &Configuration::n)
      .def_property_readonly("dimension", &Configuration::dimension)
      .def_property_readonly("codimension", &Configuration::codimension)
      .def_property_readonly("homogeneous", &Configuration::homogeneous)
      .def_property_readonly("warnings", &Configuration::warnings)
      .def_property_readonly("matrix", [](const Configuration& c) { return rows_of(c.matrix()); })
      .def("__repr__", [](const Configuration& c) {
        return "<Configuration m=" + std::to_string(c.m()) + " n=" + std::to_string(c.n()) + ">";
      });

  m.def("kernel_lattice", [](const Configuration& cfg) {
    const LatticeBasis lb = kernel_lattice(cfg);
    return py::make_tuple(columns_of(lb.basis), to_py(lb.index_g));
  }, "cfg"_a, "Saturated kernel basis (list of columns) and its index.");

  m.def("lattice_index", [](const Configuration& cfg, const py::sequence& columns) {
    return to_py(lattice_index(cfg, columns_to_matrix(columns, cfg.n())));
  }, "cfg"_a, "columns"_a);

  m.def("circuits", [](const Configuration& cfg) {
    py::list out;
    for (const auto& c : enumerate_circuits(cfg)) out.append(to_list(c.vector));
    return out;
  }, "cfg"_a, "All circuits, first nonzero entry positive, in canonical order.");

  m.def("conformal_decomposition", [](const Configuration& cfg, const py::sequence& v) {
    const auto cs = enumerate_circuits(cfg);
    py::list out;
    for (const auto& t : conformal_decomposition(cfg, to_vector(v), cs))
      out.append(py::make_tuple(to_py(t.coefficient.get_num()), to_py(t.coefficient.get_den()),
                                to_list(t.circuit)));
    return out;
  }, "cfg"_a, "v"_a);

  m.def("circuitize_basis", [](const Configuration& cfg, const py::sequence& columns) {
    return columns_of(circuitize_basis(cfg, columns_to_matrix(columns, cfg.n())));
  }, "cfg"_a, "columns"_a);

  m.def("binomials", [](const py::sequence& columns) {
    std::vector<std::string> out;
    for (auto col : columns) out.push_back(binomial_string(to_vector(col.cast<py::sequence>())));
    return out;
  }, "columns"_a);

  m.def("find_violation", [](const py::sequence& signs) {
    return witness_to_py(find_violation(to_signs(signs)));
  }, "signs"_a, "None, or (rows, cols) of a mixed submatrix with fewer rows than columns.");

  m.def("brute_force_violation", [](const py::sequence& signs, std::size_t max_rows) {
    return witness_to_py(brute_force_violation(to_signs(signs), max_rows));
  }, "signs"_a, "max_rows"_a = 12);

  m.def("is_complete_intersection", [](const py::sequence& signs) {
    return is_complete_intersection(to_signs(signs));
  }, "matrix"_a, "Rows of signs or integers; only the signs matter.");

  m.def("_search", [](const Configuration& cfg, const std::string& mode, std::uint64_t budget,
                      unsigned jobs, std::uint64_t seed, bool prune,
                      std::optional<std::vector<IndexSet>> supports) {
    SearchOptions opts;
    opts.mode = parse_search_mode(mode);
    opts.budget = budget;
    opts.jobs = jobs;
    opts.seed = seed;
    opts.prune = prune;
    opts.supports = std::move(supports);
    py::gil_scoped_release release;
    return report_json(search_ci_circuit_basis(cfg, opts));
  }, "cfg"_a, "mode"_a, "budget"_a, "jobs"_a, "seed"_a, "prune"_a, "supports"_a);

  m.def("_check_basis", [](const Configuration& cfg, const py::sequence& columns) {
    return report_json(check_given_basis(cfg, columns_to_matrix(columns, cfg.n())));
  }, "cfg"_a, "columns"_a);

  m.def("monomial_curve", [](const py::sequence& a) { return monomial_curve(to_vector(a)); }, "a"_a);
  m.def("curve_ci_basis", [](const py::sequence& a) { return columns_of(curve_ci_basis(to_vector(a))); },
        "a"_a);
  m.def("cyclic_polytope", [](std::size_t mrows, std::optional<py::sequence> t, std::size_t n) {
    return cyclic_polytope(mrows, t ? to_vector(*t) : default_cyclic_parameters(n));
  }, "m"_a, "t"_a = py::none(), "n"_a = 0);
  m.def("convex_polygon", &convex_polygon, "n"_a);
  m.def("decagon_quadruples", &decagon_quadruples);
  m.def("decagon_sign_matrix", [] {
    const SignMatrix s = decagon_sign_matrix();
    py::list out;
    for (std::size_t i = 0; i < s.rows(); ++i) {
      py::list row;
      for (std::size_t j = 0; j < s.cols(); ++j) row.append(s(i, j));
      out.append(row);
    }
    return out;
  });

  m.def("bound_eval", [](std::size_t d, std::size_t n) {
    const BoundEvaluation e = bound_eval(d, n);
    return py::dict("d"_a = e.d, "n"_a = e.n, "lhs"_a = to_py(e.lhs), "rhs"_a = to_py(e.rhs),
                    "holds"_a = e.holds);
  }, "d"_a, "n"_a);
  m.def("bound_threshold", &bound_threshold, "d"_a);
  m.def("codim3_bound", &codim3_bound, "r"_a);

  m.def("run_verification", [](std::optional<std::string> only, std::uint64_t seed) {
    VerifyOptions opts;
    opts.only = std::move(only);
    opts.seed = seed;
    std::vector<CheckResult> results;
    {
      py::gil_scoped_release release;
      results = run_verification(opts);
    }
    py::list out;
    for (const auto& r : results)
      out.append(py::dict("id"_a = r.id, "group"_a = r.group, "name"_a = r.name,
                          "passed"_a = r.passed, "blocking"_a = r.blocking,
                          "detail"_a = r.detail, "elapsed_ms"_a = r.elapsed_ms));
    return out;
  }, "only"_a = py::none(), "seed"_a = VerifyOptions{}.seed);
}
