// Command-line front end: runs one job and prints its report.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gaquot/job.hpp"

int main(int argc, char** argv) {
    using namespace gaquot;

    CLI::App app{"Classify quotients of G_a-invariant hypersurfaces"};
    std::string job_file, fixture_name, format, command;
    std::optional<unsigned> kmax, slice_deg, inv_deg;
    bool export_job = false;

    app.add_option("--job", job_file, "job file (JSON)")->check(CLI::ExistingFile);
    app.add_option("--fixture", fixture_name, "catalog fixture, e.g. winkelmann or family-phi(t^2-2)");
    app.add_option("--command", command, "classify | invariants | transfer | slice | family-compare | selftest");
    app.add_option("--kmax", kmax, "largest power tried in Im(D) searches");
    app.add_option("--slice-deg", slice_deg, "degree bound for the slice search");
    app.add_option("--inv-deg", inv_deg, "degree bound for kernel generators");
    app.add_option("--format", format, "text | structured")->check(CLI::IsMember({"text", "structured"}));
    app.add_flag("--export-job", export_job, "print the job as JSON instead of running it");
    app.footer("Exit status: 0 affine/pass, 10 strictly quasi-affine, 20 not everywhere stable,\n"
               "30 unknown, 1 input error, 2 internal inconsistency or failed selftest.");
    CLI11_PARSE(app, argc, argv);

    Job job;
    try {
        if (!job_file.empty() && !fixture_name.empty()) throw JobError("--job and --fixture are exclusive");
        if (!job_file.empty()) {
            std::ifstream in(job_file);
            std::stringstream ss;
            ss << in.rdbuf();
            job = job_from_text(ss.str());
        } else if (!fixture_name.empty()) {
            job = fixture_job(fixture_name, command.empty() ? "classify" : command);
        } else if (command == "selftest") {
            job.command = "selftest";
        } else {
            throw JobError("nothing to do: give --job, --fixture or --command selftest");
        }
        if (!command.empty()) job.command = command;
        if (kmax) job.bounds.kmax = *kmax;
        if (slice_deg) job.bounds.slice_degree = *slice_deg;
        if (inv_deg) job.bounds.invariant_degree = *inv_deg;
        if (!format.empty()) job.output = format;
    } catch (const Error& e) {
        std::cerr << "gaquot: " << e.what() << "\n";
        return exit_code::input_error;
    }

    if (export_job) {
        std::cout << job_to_json(job).dump(2) << "\n";
        return 0;
    }
    RunOutcome out = run(job);
    std::cout << render(out, job.output);
    if (out.report.contains("error")) std::cerr << "gaquot: " << out.report["error"]["message"].get<std::string>() << "\n";
    return out.exit_code;
}
