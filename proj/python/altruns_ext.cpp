#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "altruns/derivpoly.hpp"
#include "altruns/oracle.hpp"
#include "altruns/runs.hpp"
#include "altruns/sequences.hpp"
#include "altruns/verify.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// Exact integers cross the boundary as Python ints via their decimal form.
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    return value.set_str(py::str(src).cast<std::string>(), 10) == 0;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

using namespace altruns;

py::list table_rows(const TriangularTable& table) {
  py::list rows;
  if (table.empty()) return rows;
  for (unsigned n = table.row_offset(); n <= table.last_row(); ++n) {
    const auto row = table.row(n);
    rows.append(py::cast(std::vector<BigInt>(row.begin(), row.end())));
  }
  return rows;
}

py::object to_fraction(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::cast(BigInt(q.get_num())), py::cast(BigInt(q.get_den())));
}

std::vector<BigInt> runs_poly(unsigned n, const std::string& method) {
  if (method == "recurrence") return r_poly_recurrence(n).poly.coeffs();
  if (method == "theorem") return r_poly_theorem(n).poly.coeffs();
  throw DomainError("runs_poly: method must be 'recurrence' or 'theorem'");
}

py::list runs_table(unsigned n_max, const std::string& method) {
  if (n_max < 2) throw DomainError("runs_table: n_max must be >= 2");
  if (method == "recurrence") return table_rows(r_table_recurrence(n_max).table());
  if (method == "oracle") return table_rows(runs_triangle_oracle(n_max));
  if (method != "explicit" && method != "stanley")
    throw DomainError("runs_table: method must be recurrence, explicit, stanley or oracle");
  const DerivPolyFamily family = derivative_polys(method == "explicit" ? n_max : 0);
  py::list rows;
  for (unsigned n = 2; n <= n_max; ++n) {
    std::vector<BigInt> row;
    for (unsigned k = 1; k <= n - 1; ++k) row.push_back(method == "explicit" ? r_explicit(n, k, family) : r_stanley(n, k));
    rows.append(py::cast(row));
  }
  return rows;
}

std::string verify_json(unsigned n_max, unsigned oracle_max, std::vector<std::string> checks) {
  VerifyOptions options;
  options.checks = std::move(checks);
  return verify_all(n_max, oracle_max, options).to_json();
}

}  // namespace

PYBIND11_MODULE(_altruns, m) {
  m.doc() = "Exact alternating-runs numbers and their supporting sequences";

  static py::exception<Error> base_error(m, "AltrunsError", PyExc_ValueError);
  static py::exception<ExactnessError> exactness_error(m, "ExactnessError", base_error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ExactnessError& e) {
      py::set_error(exactness_error, e.what());
    } catch (const Error& e) {
      py::set_error(base_error, e.what());
    }
  });

  m.def("binomial", &binomial, py::arg("n"), py::arg("k"));
  m.def("stirling2", &stirling2, py::arg("n"), py::arg("k"));
  m.def("eulerian_poly", [](unsigned n) { return eulerian_poly_frobenius(n).coeffs(); }, py::arg("n"),
        "Coefficients of A_n(x), ascending");
  m.def("tangent_numbers", [](unsigned n_max) { return table_rows(tangent_numbers(n_max)); }, py::arg("n_max"),
        "Rows n = 1..n_max of T(n,k), k = 1..n");

  m.def("derivative_poly", [](unsigned n) { return derivative_polys(n).poly(n).coeffs(); }, py::arg("n"));
  m.def("p_coeff_closed_form", &p_coeff_closed_form, py::arg("n"), py::arg("k"));
  m.def("a_poly", [](unsigned n) { return a_poly(n).coeffs(); }, py::arg("n"));
  m.def("cvijovic_poly", [](unsigned n) { return cvijovic_poly(n).coeffs(); }, py::arg("n"));

  m.def("runs_table", &runs_table, py::arg("n_max"), py::arg("method") = "recurrence",
        "Rows n = 2..n_max of R(n,k), k = 1..n-1");
  m.def("runs_poly", &runs_poly, py::arg("n"), py::arg("method") = "recurrence");
  m.def("r_explicit", py::overload_cast<unsigned, unsigned>(&r_explicit), py::arg("n"), py::arg("s"));
  m.def("r_stanley", &r_stanley, py::arg("n"), py::arg("k"));
  m.def("e_coeff", &e_coeff, py::arg("n"), py::arg("k"), py::arg("s"));
  m.def("knuth_identity_residual", [](unsigned n) { return knuth_identity_residual(n).coeffs(); }, py::arg("n"));
  m.def("bona_ehrenborg_multiplicity", py::overload_cast<unsigned>(&bona_ehrenborg_multiplicity), py::arg("n"));
  m.def("canfield_wilf_check",
        [](unsigned n, unsigned k) { return to_fraction(canfield_wilf_check(n, k)); }, py::arg("n"), py::arg("k"));
  m.def("canfield_wilf_ratio",
        [](unsigned n, unsigned k) { return to_fraction(canfield_wilf_ratio(n, k, r_table_recurrence(n))); },
        py::arg("n"), py::arg("k"));

  m.def("count_runs", [](std::vector<unsigned> p) { return count_runs(Permutation(std::move(p))); }, py::arg("perm"));
  m.def("count_descents", [](std::vector<unsigned> p) { return count_descents(Permutation(std::move(p))); },
        py::arg("perm"));
  m.def("eulerian_oracle", [](unsigned n_max) { return table_rows(eulerian_triangle_oracle(n_max)); },
        py::arg("n_max"));

  m.def("verify_json", &verify_json, py::arg("n_max"), py::arg("oracle_max"),
        py::arg("checks") = std::vector<std::string>{});
  m.def("available_checks", &available_checks);
}
