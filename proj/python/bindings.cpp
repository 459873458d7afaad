#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gaquot/catalog.hpp"
#include "gaquot/job.hpp"
#include "gaquot/parse.hpp"

namespace py = pybind11;
using namespace gaquot;

namespace {

RepSpec spec_from(const std::string& representation_json) {
    return representation_from_json(nlohmann::json::parse(representation_json));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact classification of G_a quotients";

    auto base = py::register_exception<Error>(m, "GaquotError");
    py::register_exception<ParseError>(m, "ParseError", base);

    m.attr("REPORT_SCHEMA") = kReportSchema;

    m.def("fixture_names", &fixture_names);

    // Job text in, (exit code, report text) out; the Python side decodes JSON.
    m.def("run_job", [](const std::string& job_text) {
        RunOutcome out = run(job_from_text(job_text));
        return py::make_tuple(out.exit_code, out.report.dump());
    });

    m.def("fixture_job", [](const std::string& name, const std::string& command) {
        return job_to_json(fixture_job(name, command)).dump();
    }, py::arg("name"), py::arg("command") = "classify");

    m.def("canonical", [](const std::string& text, const std::vector<std::string>& vars) {
        return parse(text, VarTable(vars)).str();
    }, py::arg("text"), py::arg("variables"));

    m.def("parse_error_position", [](const std::string& text, const std::vector<std::string>& vars) -> py::object {
        try {
            parse(text, VarTable(vars));
            return py::none();
        } catch (const ParseError& e) {
            return py::int_(e.position());
        }
    });

    m.def("kernel_generators", [](const std::string& representation_json, unsigned maxdeg) {
        std::vector<std::string> out;
        for (const auto& p : graded_kernel_generators(build_derivation(spec_from(representation_json)), maxdeg))
            out.push_back(p.str());
        return out;
    });

    m.def("verify_winkelmann_relation", &verify_winkelmann_relation);
}
