#ifndef GAQUOT_JOB_HPP
#define GAQUOT_JOB_HPP

// Batch jobs: JSON job files in, deterministic reports out.
//
// Job file keys:
//   command         classify | invariants | transfer | slice | family-compare | selftest
//   fixture         catalog name; fills representation/polynomial/graph
//   representation  {"blocks": [{"sym": k} | {"vblock": n}, ...],
//                    "normalization": "section5" | "unit",
//                    "names": [...] | "firstIndex": n}
//   polynomial      expression text, or
//   equations       list of expression texts (subvariety with a graph)
//   graph           {"w0": "1 + z2*z5 - z3*z4", "w1": "z1", ...}
//   family          [{"phi": "t", "delta": 2}, ...]
//   bounds          {"kmax": 3, "sliceDeg": 3, "invariantDeg": 2}
//   output          text | structured

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gaquot/classify.hpp"

namespace gaquot {

inline constexpr const char* kReportSchema = "gaquot.report/1";

namespace exit_code {
inline constexpr int affine_or_pass = 0;
inline constexpr int input_error = 1;
inline constexpr int internal_error = 2;
inline constexpr int strictly_quasi_affine = 10;
inline constexpr int not_everywhere_stable = 20;
inline constexpr int unknown = 30;
}  // namespace exit_code

int exit_code_for(Verdict v);

struct FamilyJobMember {
    std::string phi;
    std::size_t delta = 0;
};

struct Job {
    std::string command = "classify";
    std::optional<std::string> name;  // fixture name, echoed into the report
    std::vector<std::string> citations;
    std::optional<RepSpec> representation;
    std::optional<std::string> polynomial;
    std::vector<std::string> equations;
    std::optional<std::map<std::string, std::string>> graph;
    std::vector<FamilyJobMember> family;
    Bounds bounds;
    std::string output = "text";
};

class JobError : public Error {
public:
    using Error::Error;
};

Job job_from_json(const nlohmann::json& j);
Job job_from_text(const std::string& text);
nlohmann::ordered_json job_to_json(const Job& job);

// Self-contained job reproducing a catalog fixture.
Job fixture_job(const std::string& name, const std::string& command = "classify");

nlohmann::ordered_json representation_to_json(const RepSpec& spec);
RepSpec representation_from_json(const nlohmann::json& j);

// z-variables are the identifiers of the image expressions, in natural
// order (z2 before z10).
Graph graph_from_strings(const std::map<std::string, std::string>& images);

struct RunOutcome {
    int exit_code;
    nlohmann::ordered_json report;
};

// Never throws for bad input: errors become reports with exit code 1 (input)
// or 2 (internal inconsistency).
RunOutcome run(const Job& job);

std::string render_text(const nlohmann::ordered_json& report);
std::string render(const RunOutcome& outcome, const std::string& format);

}  // namespace gaquot

#endif
