#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polarcalc/job.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact local polar invariants of one-parameter polynomial germs";

  py::class_<polarcalc::JobOverrides>(m, "JobOverrides")
      .def(py::init<>())
      .def_readwrite("order", &polarcalc::JobOverrides::order)
      .def_readwrite("max_pairs", &polarcalc::JobOverrides::max_pairs)
      .def_readwrite("max_degree", &polarcalc::JobOverrides::max_degree)
      .def_readwrite("radical_bound", &polarcalc::JobOverrides::radical_bound);

  py::class_<polarcalc::JobOutcome>(m, "JobOutcome")
      .def_readonly("report_json", &polarcalc::JobOutcome::report_json)
      .def_readonly("exit_code", &polarcalc::JobOutcome::exit_code);

  m.def("run_job_text", &polarcalc::run_job_text, py::arg("job_json"),
        py::arg("overrides") = polarcalc::JobOverrides{},
        "Run a JSON job document and return the serialized report plus exit code.");

  m.attr("__version__") = "0.1.0";
}
