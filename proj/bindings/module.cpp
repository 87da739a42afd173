#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "hypercat/asymptotics.hpp"
#include "hypercat/closed_form.hpp"
#include "hypercat/combinatorics.hpp"
#include "hypercat/oracle.hpp"
#include "hypercat/series.hpp"
#include "hypercat/verify.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py_int(const hypercat::Natural& value) {
    const std::string dec = value.get_str();
    PyObject* obj = PyLong_FromString(dec.c_str(), nullptr, 10);
    if (!obj)
        throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::int_ compute(unsigned long n, unsigned long k, const std::string& method) {
    if (method == "closed")
        return to_py_int(hypercat::hypergraph_catalan_closed(n, k));
    if (method == "series")
        return to_py_int(n == 0 ? hypercat::Natural(1)
                                : hypercat::ck_series(k, n + 1).natural_coeff(n + 1));
    if (method == "lagrange")
        return to_py_int(n == 0 ? hypercat::Natural(1) : hypercat::lagrange_extract(n, k));
    if (method == "trees")
        return to_py_int(hypercat::oracle_by_trees(n, k));
    if (method == "walks")
        return to_py_int(hypercat::brute_force_walks(n, k));
    throw py::value_error("unknown method: " + method);
}

}  // namespace

PYBIND11_MODULE(_hypercat, m) {
    m.doc() = "exact hypergraph Catalan numbers and their asymptotics";

    m.def("catalan", [](unsigned long n) { return to_py_int(hypercat::catalan(n)); }, py::arg("n"));

    m.def("hypergraph_catalan", &compute, py::arg("n"), py::arg("k"),
          py::arg("method") = "series",
          "c_n^(k) by one of: closed, series, lagrange, trees, walks");

    m.def("hypergraph_catalan_table",
          [](unsigned long n_max, unsigned long k) {
              py::list values;
              const auto c = hypercat::ck_series(k, n_max + 1);
              for (unsigned long n = 0; n <= n_max; ++n)
                  values.append(to_py_int(c.natural_coeff(n + 1)));
              return values;
          },
          py::arg("n_max"), py::arg("k"), "list of c_n^(k) for n = 0..n_max");

    m.def("root_degree_count",
          [](unsigned long n, unsigned long j, unsigned long k) {
              return to_py_int(hypercat::root_degree_count(n, j, k));
          },
          py::arg("n"), py::arg("j"), py::arg("k"));

    m.def("star_count",
          [](unsigned long n, unsigned long m, unsigned long k) {
              return to_py_int(hypercat::star_count_exact({n, m, k}));
          },
          py::arg("n"), py::arg("m"), py::arg("k"));

    m.def("asymptotic_log", &hypercat::asymptotic_log_value, py::arg("n"), py::arg("k"));
    m.def("gunnells_log", &hypercat::gunnells_log_value, py::arg("n"), py::arg("k"));

    m.def("ratio_report",
          [](unsigned long k, std::vector<unsigned long> ns) {
              const auto report = hypercat::ratio_report(k, std::move(ns));
              py::list rows;
              for (const auto& row : report.rows) {
                  py::dict d;
                  d["n"] = row.n;
                  d["log_exact"] = row.log_exact;
                  d["log_asym"] = row.log_asym;
                  d["ratio"] = row.ratio;
                  rows.append(d);
              }
              return rows;
          },
          py::arg("k"), py::arg("ns"));

    m.def("functional_equation_ok",
          [](unsigned long k, std::size_t order) {
              return hypercat::verify_functional_equation(k, order).ok;
          },
          py::arg("k"), py::arg("order") = 6);

    m.def("verify_quick", [] {
        py::list out;
        for (const auto& check : hypercat::verify::run_quick())
            out.append(py::make_tuple(check.name, check.passed));
        return out;
    });
}
