#include "hv/classify.hpp"
#include "hv/suite.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using nlohmann::json;

namespace {

using Terms = std::vector<std::pair<hv::Label, std::string>>;

hv::Vector to_vector(const Terms& terms) {
  hv::Vector v;
  for (const auto& [label, c] : terms)
    v.add(label, hv::rational_from_string(c));
  return v;
}

Terms from_vector(const hv::Vector& v) {
  Terms out;
  for (const auto& [label, c] : v)
    out.emplace_back(label, hv::to_string(c));
  return out;
}

json parse(const std::string& text) { return json::parse(text); }

} // namespace

PYBIND11_MODULE(_hvpy, m) {
  m.doc() = "Exact twisted Heisenberg-Virasoro engine";

  py::register_exception<hv::ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<hv::RewriteBudgetExceeded>(m, "RewriteBudgetExceeded", PyExc_RuntimeError);

  m.attr("version") = hv::kToolVersion;
  m.def("check_catalog", &hv::check_catalog);

  m.def("bracket", [](const std::string& x, const std::string& y) {
    return hv::to_string(hv::bracket(hv::parse_element(x), hv::parse_element(y)));
  }, py::arg("x"), py::arg("y"), "Bracket of two algebra elements given as text, e.g. 'L(2)' and '3 I(-2)'.");

  m.def("run_suite_json", [](const std::string& suite, bool text) {
    hv::ReportDocument doc;
    {
      py::gil_scoped_release release;
      doc = hv::run_suite(hv::load_spec_text(suite));
    }
    return py::make_tuple(hv::emit_report(doc, text ? hv::ReportFormat::Text : hv::ReportFormat::Json),
                          hv::exit_code(doc));
  }, py::arg("suite"), py::arg("text") = false);

  m.def("classify_json", [](const std::string& spec) { return hv::classify(parse(spec), "$").dump(); });

  py::class_<hv::Module, std::shared_ptr<hv::Module>>(m, "Module")
      .def_static("from_json", [](const std::string& spec) {
        return std::const_pointer_cast<hv::Module>(hv::build_module(parse(spec), "$"));
      })
      .def_property_readonly("name", &hv::Module::name)
      .def("format_label", &hv::Module::format_label)
      .def("act", [](const hv::Module& mod, const std::string& x, const Terms& v) {
        return from_vector(mod.act(hv::parse_element(x), to_vector(v)));
      }, py::arg("element"), py::arg("vector"))
      .def("defect", [](const hv::Module& mod, const std::string& x, const std::string& y, const Terms& v) {
        return from_vector(hv::commutator_defect(mod, hv::parse_element(x), hv::parse_element(y), to_vector(v)));
      }, py::arg("x"), py::arg("y"), py::arg("vector"));
}
