#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hopfwit/api.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_hopfwit, m) {
    m.doc() = "exact witnesses for separability, Maschke and Frobenius criteria";
    using namespace hopfwit;

    // translators run newest-first: register the base before the derived type
    py::register_exception<Error>(m, "HopfwitError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "HopfwitParseError", PyExc_ValueError);

    m.def("check", &api::check, py::arg("level"), py::arg("input_json"),
          "Run the axiom checks of a structure level; returns the report as JSON.");
    m.def(
        "solve",
        [](const std::string& kind, const std::string& input) -> py::object {
            auto w = api::solve(kind, input);
            if (!w) return py::none();
            return py::str(*w);
        },
        py::arg("kind"), py::arg("input_json"),
        "Solve for a canonical witness; returns witness JSON or None (NoWitness).");
    m.def("verify", &api::verify, py::arg("kind"), py::arg("input_json"), py::arg("witness_json"),
          "Re-check an emitted witness against its input; returns the report as JSON.");
    m.def("transport", &api::transport, py::arg("direction"), py::arg("input_json"),
          py::arg("witness_json"), "Map a witness to another witness kind.");
    m.def("deform_theta", &api::deform_theta, py::arg("theta_witness_json"), py::arg("map_json"));
    m.def("deform_fieldext", &api::deform_fieldext, py::arg("fieldext_json"), py::arg("map_json"));
    m.def("catalog", &api::catalog, py::arg("filter") = "", py::arg("seed") = 0xC0FFEEull,
          "Run the built-in consistency catalog; returns the report as JSON.");
    m.def("catalog_entries", &api::catalog_entries);
    m.def("group_algebra", &api::group_algebra_json, py::arg("table"), py::arg("field_json"));
    m.def("sweedler_h4", &api::sweedler_h4_json, py::arg("field_json"));
    m.def("dual_of", &api::dual_of_json, py::arg("presentation_json"));
    m.def("yetter_drinfeld_entwining", &api::yetter_drinfeld_entwining_json, py::arg("hopf_json"));
    m.def("relative_hopf_entwining", &api::relative_hopf_entwining_json,
          py::arg("relhopf_input_json"));
}
