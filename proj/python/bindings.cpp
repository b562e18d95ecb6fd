#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "knotvol/bounds.hpp"
#include "knotvol/errors.hpp"
#include "knotvol/generate.hpp"
#include "knotvol/pipeline.hpp"
#include "knotvol/seifert.hpp"

namespace py = pybind11;
using namespace knotvol;

namespace {

PipelineOptions make_options(bool improve, const std::string& target, bool keep_zero_loops) {
  if (target != "K" && target != "K'") throw py::value_error("target must be \"K\" or \"K'\"");
  PipelineOptions o;
  o.improve = improve;
  o.target = target == "K" ? Target::K : Target::KPrime;
  o.keep_zero_loops = keep_zero_loops;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Seifert surfaces, augmented links and volume bounds for knot diagrams";

  auto diagram_error = py::register_exception<DiagramError>(m, "DiagramError", PyExc_ValueError);
  py::register_exception<LabelError>(m, "LabelError", diagram_error.ptr());
  py::register_exception<MultiComponentError>(m, "MultiComponentError", diagram_error.ptr());
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

  py::class_<Diagram>(m, "Diagram")
      .def_property_readonly("name", &Diagram::name)
      .def_property_readonly("num_crossings", &Diagram::num_crossings)
      .def_property_readonly("num_components", &Diagram::num_components)
      .def("pd", &Diagram::to_pd)
      .def("__repr__", [](const Diagram& d) { return "Diagram(" + d.to_line() + ")"; });

  m.def("parse_pd", [](const std::string& text) { return parse_pd(text); }, py::arg("text"));
  m.def("parse_pd_lines", [](const std::string& text) { return parse_pd_lines(text); }, py::arg("text"));
  m.def("canonical", &canonical);
  m.def("mirror", &mirror);
  m.def("writhe", &writhe);
  m.def("is_alternating", &is_alternating);
  m.def("canonical_genus", &canonical_genus);
  m.def("alternate", &alternate);
  m.def("seifert_dot", [](const Diagram& d, const std::string& name) { return to_dot(seifert_graph(d), name); },
        py::arg("diagram"), py::arg("name") = "seifert");
  m.def("pretzel", &pretzel, py::arg("twists"));
  m.def("closed_braid", &closed_braid, py::arg("strands"), py::arg("word"));
  m.def(
      "random_knot_diagram",
      [](std::uint64_t seed, int max_crossings) {
        std::mt19937_64 rng(seed);
        return random_knot_diagram(rng, max_crossings);
      },
      py::arg("seed"), py::arg("max_crossings") = 16);

  m.def("analysis_json", &analysis_json);
  m.def(
      "pipeline_json",
      [](const Diagram& d, bool improve, const std::string& target, bool keep_zero_loops) {
        auto opts = make_options(improve, target, keep_zero_loops);
        PipelineResult r;
        {
          py::gil_scoped_release release;
          r = run_pipeline(d, opts);
        }
        return pipeline_json(r, opts);
      },
      py::arg("diagram"), py::arg("improve") = true, py::arg("target") = "K'", py::arg("keep_zero_loops") = true);
  m.def(
      "annotated_link",
      [](const Diagram& d, bool improve) {
        auto r = run_pipeline(d, make_options(improve, "K'", true));
        if (r.degenerate()) return std::optional<std::string>();
        return std::optional<std::string>(r.final_link().annotated_pd());
      },
      py::arg("diagram"), py::arg("improve") = true);

  m.def("clausen2", &clausen2, py::arg("theta"));
  m.attr("V0") = kV0;
}
