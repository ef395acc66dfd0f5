#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gmconn/aomoto_kita.hpp"
#include "gmconn/cli.hpp"
#include "gmconn/gauss_manin.hpp"
#include "gmconn/golden.hpp"
#include "gmconn/io.hpp"

namespace py = pybind11;

namespace {

using gmconn::IndexSet;

std::vector<std::vector<std::string>> strings(const gmconn::Matrix<gmconn::RatFunc>& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j).to_string());
  }
  return out;
}

py::dict matrix_dict(const std::vector<IndexSet>& rows, const std::vector<IndexSet>& cols,
                     const gmconn::Matrix<gmconn::RatFunc>& m) {
  py::dict d;
  d["rows"] = rows;
  d["cols"] = cols;
  d["entries"] = strings(m);
  return d;
}

// Keys become labels such as "345"; lists are not hashable.
std::map<std::string, int> labelled(const std::map<IndexSet, int>& m) {
  std::map<std::string, int> out;
  for (const auto& [J, v] : m) out[gmconn::set_label(J)] = v;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Gauss-Manin connection matrices for hyperplane arrangements";

  auto error = py::register_exception<gmconn::Error>(m, "Error");
  py::register_exception<gmconn::ParseError>(m, "ParseError", error);
  py::register_exception<gmconn::InvalidInput>(m, "InvalidInput", error);
  py::register_exception<gmconn::ArithmeticError>(m, "ArithmeticError", error);
  py::register_exception<gmconn::InconsistentSystem>(m, "InconsistentSystem", error);

  m.def("canonical", [](const std::string& text, int nvars) { return gmconn::parse_ratfunc(text, nvars).to_string(); },
        py::arg("text"), py::arg("nvars"), "Canonical form of a rational function in l1..l<nvars>.");

  m.def(
      "analyze",
      [](const std::string& arrangement_json) {
        const auto a = gmconn::parse_arrangement(arrangement_json);
        const auto t = gmconn::compute_type(a.realization);
        const auto betti = gmconn::betti_and_euler(t);
        py::dict d;
        d["n"] = t.n;
        d["ell"] = t.ell;
        d["dep"] = t.dep;
        d["betanbc"] = gmconn::betanbc_frames(t);
        d["betti"] = betti.b;
        d["euler"] = betti.euler;
        return d;
      },
      py::arg("arrangement_json"));

  m.def(
      "projection",
      [](const std::string& arrangement_json, const std::string& basis) {
        const auto a = gmconn::parse_arrangement(arrangement_json);
        auto p = gmconn::projection_matrix(gmconn::compute_type(a.realization), a.weights);
        if (basis == "eta") {
          p = gmconn::to_eta_basis(p);
        } else if (basis != "zeta") {
          throw gmconn::InvalidInput("basis must be zeta or eta");
        }
        return matrix_dict(p.rows, p.cols, p.entries);
      },
      py::arg("arrangement_json"), py::arg("basis") = "zeta");

  m.def(
      "omega_general",
      [](const IndexSet& J, int n, int ell) {
        const auto o = gmconn::omega_general(J, n, ell);
        return matrix_dict(o.basis, o.basis, o.entries);
      },
      py::arg("J"), py::arg("n"), py::arg("ell"));

  m.def(
      "multiplicities",
      [](const std::string& path_json, int jobs) {
        const auto table = gmconn::multiplicities(gmconn::parse_path(path_json).path, jobs);
        return labelled(table.m);
      },
      py::arg("path_json"), py::arg("jobs") = 1);

  m.def(
      "connection",
      [](const std::string& path_json, int jobs) {
        const auto p = gmconn::parse_path(path_json);
        const auto c = gmconn::compute_connection(p.path, p.weights, jobs);
        py::dict d;
        d["multiplicities"] = labelled(c.multiplicities.m);
        d["projection"] = matrix_dict(c.projection.rows, c.projection.cols, c.projection.entries);
        d["omega"] = matrix_dict(c.omega.basis, c.omega.basis, c.omega.entries);
        d["caveats"] = c.caveats;
        return d;
      },
      py::arg("path_json"), py::arg("jobs") = 1);

  m.def(
      "verify",
      [](int jobs) {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& c : gmconn::golden_suite(jobs)) out.emplace_back(c.name, c.passed, c.detail);
        return out;
      },
      py::arg("jobs") = 1);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        int code = 0;
        {
          py::gil_scoped_release release;
          code = gmconn::run_cli(args, out, err);
        }
        return std::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in process; returns (exit code, stdout, stderr).");
}
