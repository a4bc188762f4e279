#include "koenigs/approx.hpp"
#include "koenigs/report.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace koenigs;

namespace {

std::string dump(nlohmann::json j) {
    j["schema"] = kSchema;
    return j.dump();
}

DefiningFunction load(const std::string& text) { return DefiningFunction::from_json_text(text); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Native core; results cross the boundary as JSON text";
    // translators run newest first, so the base class goes in first
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<WindowTooSmall>(m, "WindowTooSmall", PyExc_RuntimeError);

    m.def("contains", [](const std::string& spec, cplx z) { return koenigs::contains(load(spec), z); });
    m.def("classify", [](const std::string& spec) { return dump(to_json(classify(load(spec)))); });
    m.def("analyze", [](const std::string& spec) { return dump(to_json(analyze(load(spec)))); });
    m.def("decide", [](const std::string& spec, double p) { return dump(to_json(decide(load(spec), p))); },
          py::arg("spec"), py::arg("p") = 2.0);
    m.def(
        "decide_topological",
        [](const std::string& spec, int resolution) {
            return dump(to_json(decide_topological(load(spec), std::nullopt, resolution)));
        },
        py::arg("spec"), py::arg("resolution") = 512);
    m.def("lambda_infinity", [](const std::string& spec) { return dump(to_json(lambda_infty(load(spec)))); });
    m.def(
        "hardy_membership",
        [](cplx lambda, const std::string& domain, double p) {
            return dump(to_json(hardy_membership(lambda, CanonicalDomain::parse(domain), p)));
        },
        py::arg("lam"), py::arg("domain"), py::arg("p"));
    m.def("alpha_map", &alpha_map);
    m.def("phi_beta", &phi_beta);
    m.def("phi_beta_R", &phi_beta_R);
    m.def(
        "approx_demo", [](const std::string& name, int budget, int n) { return dump(to_json(approx_demo(name, budget, n))); },
        py::arg("name"), py::arg("budget") = 64, py::arg("n") = 256);
}
