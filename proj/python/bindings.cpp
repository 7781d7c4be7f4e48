#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <cstdio>

#include "scfem/bench.hpp"
#include "scfem/errors.hpp"
#include "scfem/identities.hpp"
#include "scfem/mesh.hpp"
#include "scfem/system.hpp"

namespace py = pybind11;
using namespace scfem;

namespace {

using PyMatrix = std::array<std::array<double, 3>, 3>;

PyMatrix to_py(const Matrix3& m) {
  PyMatrix out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out[i][j] = m(i, j);
  }
  return out;
}

ErrorNorm norm_from_string(const std::string& name) {
  if (name == "l2") return ErrorNorm::L2;
  if (name == "hsc") return ErrorNorm::HsymCurl;
  throw InputError("unknown norm (use 'l2' or 'hsc'): " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Tetrahedral finite elements for matrix-valued H(sym Curl) problems";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);

  py::class_<Mesh>(m, "Mesh")
      .def_readonly("n", &Mesh::n)
      .def_property_readonly(
          "num_vertices", [](const Mesh& mesh) { return mesh.vertices.size(); })
      .def_property_readonly(
          "num_edges", [](const Mesh& mesh) { return mesh.edges.size(); })
      .def_property_readonly(
          "num_tets", [](const Mesh& mesh) { return mesh.tets.size(); })
      .def("write_vtk",
           [](const Mesh& mesh, const std::string& path) { write_vtk(mesh, path); },
           py::arg("path"))
      .def("__repr__", [](const Mesh& mesh) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "Mesh(n=%d, vertices=%zu, tets=%zu)",
                      mesh.n, mesh.vertices.size(), mesh.tets.size());
        return std::string(buf);
      });

  py::class_<ConvergenceRecord>(m, "ConvergenceRecord")
      .def_readonly("n", &ConvergenceRecord::n)
      .def_readonly("elements", &ConvergenceRecord::elements)
      .def_readonly("dofs", &ConvergenceRecord::dofs)
      .def_readonly("l2_error", &ConvergenceRecord::l2_error)
      .def_readonly("hsc_error", &ConvergenceRecord::hsc_error)
      .def_readonly("seconds", &ConvergenceRecord::seconds)
      .def("__repr__", [](const ConvergenceRecord& r) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "ConvergenceRecord(n=%d, dofs=%ld, l2=%.6e, hsc=%.6e)",
                      r.n, r.dofs, r.l2_error, r.hsc_error);
        return std::string(buf);
      });

  m.def("generate_cube_mesh", &generate_cube_mesh, py::arg("n"));

  m.def(
      "dof_count",
      [](const std::string& family, int n) {
        const Mesh mesh = generate_cube_mesh(n);
        return build_dof_map(family_from_string(family), mesh).global_count;
      },
      py::arg("family"), py::arg("n"));

  m.def(
      "run_convergence",
      [](const std::string& family, const std::string& benchmark,
         const std::vector<int>& levels, double tol) {
        SolveOptions opts;
        opts.tol = tol;
        return run_convergence(family_from_string(family),
                               make_case(bench_from_string(benchmark)), levels,
                               opts);
      },
      py::arg("family"), py::arg("benchmark"),
      py::arg("levels") = std::vector<int>{2, 4, 6, 8, 10},
      py::arg("tol") = 1e-12, py::call_guard<py::gil_scoped_release>());

  m.def(
      "interpolation_errors",
      [](const std::string& family, const std::string& benchmark,
         const std::vector<int>& levels) {
        return interpolation_error(family_from_string(family),
                                   make_case(bench_from_string(benchmark)),
                                   levels);
      },
      py::arg("family"), py::arg("benchmark"),
      py::arg("levels") = std::vector<int>{2, 4, 6, 8, 10},
      py::call_guard<py::gil_scoped_release>());

  m.def(
      "estimate_rate",
      [](const std::vector<ConvergenceRecord>& records,
         const std::string& norm) -> py::object {
        const RateEstimate rate = estimate_rate(records, norm_from_string(norm));
        if (rate.exact) return py::none();
        return py::float_(rate.rate);
      },
      py::arg("records"), py::arg("norm") = "l2",
      "Least-squares convergence rate; None when the error sits at roundoff");

  m.def(
      "write_csv",
      [](const std::vector<ConvergenceRecord>& records, const std::string& path) {
        write_csv(records, path);
      },
      py::arg("records"), py::arg("path"));

  m.def(
      "verify_identities",
      [](std::uint64_t seed, int count) {
        py::list out;
        for (const auto& rep : verify_identities(seed, count)) {
          py::dict d;
          d["name"] = rep.name;
          d["checked"] = rep.checked;
          d["pass"] = rep.pass;
          d["detail"] = rep.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("seed") = 0, py::arg("count") = 50);

  m.def(
      "eval_exact",
      [](const std::string& benchmark, const std::array<double, 3>& point) {
        const BenchmarkCase bc = make_case(bench_from_string(benchmark));
        return to_py(bc.exact.eval(Vector3(point[0], point[1], point[2])));
      },
      py::arg("benchmark"), py::arg("point"));

  m.def(
      "eval_moment",
      [](const std::string& benchmark, const std::array<double, 3>& point) {
        const BenchmarkCase bc = make_case(bench_from_string(benchmark));
        return to_py(bc.moment.eval(Vector3(point[0], point[1], point[2])));
      },
      py::arg("benchmark"), py::arg("point"));
}
