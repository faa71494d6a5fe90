#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rrbx/cli.hpp"
#include "rrbx/error.hpp"
#include "rrbx/problem_io.hpp"

namespace py = pybind11;
using namespace rrbx;

namespace {

std::vector<std::vector<std::string>> rows(const Matrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j).str());
  return out;
}

py::object verdict(Verdict v) {
  if (v == Verdict::Unknown) return py::none();
  return py::bool_(v == Verdict::Yes);
}

}  // namespace

PYBIND11_MODULE(_rrbx, m) {
  m.doc() = "Exact relative Rota-Baxter Lie algebra computations on .rrb documents.";
  py::register_exception<Error>(m, "RrbxError", PyExc_ValueError);

  m.attr("FORMAT_VERSION") = kFormatVersion;

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a CLI command in-process; returns (exit code, stdout, stderr).");

  m.def(
      "validate",
      [](const std::string& text, const std::string& name) {
        const Problem p = Problem::parse(text);
        const std::string kind = p.kind(name);
        ValidationReport r;
        if (kind == "rrb") {
          r = validate_rrb(p.rrb(Json(name), name));
        } else if (kind == "rrb-rep") {
          r = validate_rrb_representation(p.representation(Json(name), name));
        } else if (kind == "cocycle") {
          const auto c = p.cocycle(Json(name), name);
          r = validate_nab_cocycle(c.base, c.kernel, c.cocycle);
        } else if (kind == "extension") {
          r = validate_extension(p.extension(Json(name), name));
        } else {
          throw Error(ErrorKind::InvalidInput, "cannot validate objects of kind " + kind);
        }
        py::list out;
        for (const auto& v : r.violations) out.append(py::make_tuple(v.tag, v.indices));
        return out;
      },
      py::arg("text"), py::arg("name"), "Violations of the named object as (tag, indices); empty when valid.");

  m.def(
      "cohomology_dim",
      [](const std::string& text, const std::string& rep, std::size_t degree) {
        const Problem p = Problem::parse(text);
        return rrbx::cohomology_dim(p.representation(Json(rep), rep), degree);
      },
      py::arg("text"), py::arg("rep"), py::arg("degree"));

  m.def(
      "coboundary_matrix",
      [](const std::string& text, const std::string& rep, std::size_t degree) {
        const Problem p = Problem::parse(text);
        return rows(rrbx::coboundary_matrix(p.representation(Json(rep), rep), degree));
      },
      py::arg("text"), py::arg("rep"), py::arg("degree"), "Entries as canonical strings, row by row.");

  m.def(
      "cocycles_equivalent",
      [](const std::string& text, const std::string& c1, const std::string& c2) {
        const Problem p = Problem::parse(text);
        const auto a = p.cocycle(Json(c1), c1);
        const auto b = p.cocycle(Json(c2), c2);
        return verdict(rrbx::cocycles_equivalent(a.base, a.kernel, a.cocycle, b.cocycle).verdict);
      },
      py::arg("text"), py::arg("c1"), py::arg("c2"), "True, False, or None when undecided.");
}
