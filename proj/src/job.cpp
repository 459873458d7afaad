#include "gaquot/job.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gaquot/catalog.hpp"
#include "gaquot/parse.hpp"
#include "gaquot/univariate.hpp"

namespace gaquot {

using ojson = nlohmann::ordered_json;

int exit_code_for(Verdict v) {
    switch (v) {
        case Verdict::Affine: return exit_code::affine_or_pass;
        case Verdict::StrictlyQuasiAffine: return exit_code::strictly_quasi_affine;
        case Verdict::NotEverywhereStable: return exit_code::not_everywhere_stable;
        case Verdict::Unknown: return exit_code::unknown;
    }
    return exit_code::internal_error;
}

namespace {

const std::set<std::string> kCommands{"classify", "invariants", "transfer", "slice", "family-compare", "selftest"};

std::string verdict_phrase(Verdict v) {
    switch (v) {
        case Verdict::Affine: return "affine quotient";
        case Verdict::StrictlyQuasiAffine: return "strictly quasi-affine quotient";
        case Verdict::NotEverywhereStable: return "not everywhere stable";
        case Verdict::Unknown: return "undecided within the given bounds";
    }
    return "?";
}

// Splits "z12" into ("z", 12) for natural ordering.
std::pair<std::string, long> natural_key(const std::string& s) {
    std::size_t i = s.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
    if (i == s.size() || s.size() - i > 9) return {s, -1};
    return {s.substr(0, i), std::stol(s.substr(i))};
}

ojson str_list(const std::vector<Poly>& ps) {
    ojson a = ojson::array();
    for (const auto& p : ps) a.push_back(p.str());
    return a;
}

ojson point_json(const std::map<std::string, Rational>& pt, const VarTable& order) {
    ojson o = ojson::object();
    for (const auto& n : order.names()) {
        auto it = pt.find(n);
        if (it != pt.end()) o[n] = render_rational(it->second);
    }
    return o;
}

ojson bounds_json(const Bounds& b) {
    return ojson{{"kmax", b.kmax}, {"sliceDeg", b.slice_degree}, {"invariantDeg", b.invariant_degree}};
}

// Parses an expression field; parse errors name the field.
Poly parse_field(const std::string& field, const std::string& text, const VarTable& vars) {
    try {
        return parse(text, vars);
    } catch (const ParseError& e) {
        throw ParseError(e.position(), field + ": " + e.message());
    }
}

struct Inputs {
    RepSpec spec;
    std::vector<Poly> equations;
    std::optional<Graph> graph;
};

Inputs load_inputs(const Job& job, bool need_polynomial) {
    if (!job.representation) throw JobError("job has no representation");
    Inputs in{*job.representation, {}, {}};
    if (job.polynomial && !job.equations.empty()) throw JobError("give either 'polynomial' or 'equations', not both");
    if (job.polynomial) in.equations.push_back(parse_field("polynomial", *job.polynomial, in.spec.coords()));
    for (std::size_t i = 0; i < job.equations.size(); ++i)
        in.equations.push_back(
            parse_field("equations[" + std::to_string(i) + "]", job.equations[i], in.spec.coords()));
    if (need_polynomial && in.equations.empty()) throw JobError("job has no polynomial");
    if (job.graph) in.graph = graph_from_strings(*job.graph);
    return in;
}

ojson certificate_json(const StabilityCertificate& c) {
    ojson o;
    o["nonstable"] = c.nonstable;
    o["restrictions"] = str_list(c.restrictions);
    o["certified"] = c.certified;
    return o;
}

ojson slice_json(const std::optional<SliceOutcome>& s) {
    if (!s) return nullptr;
    ojson o;
    o["bound"] = s->bound;
    o["found"] = s->slice.has_value();
    if (s->slice) {
        o["slice"] = s->slice->s.str();
        o["degree"] = s->slice->degree;
    }
    return o;
}

ojson transfer_json(const TransferResult& t) {
    ojson o;
    o["F00"] = t.F00.str();
    o["boundary"] = to_string(t.boundary);
    o["g"] = t.g.str();
    o["F"] = t.F.str();
    return o;
}

std::string smoothness_kind(SmoothnessKind k) {
    switch (k) {
        case SmoothnessKind::Proved: return "proved";
        case SmoothnessKind::OnSamples: return "on-samples";
        case SmoothnessKind::SingularWitness: return "singular-witness";
    }
    return "?";
}

void classify_command(const Job& job, ojson& rep, int& code) {
    Inputs in = load_inputs(job, true);
    ClassificationReport r;
    if (in.equations.size() == 1) {
        r = classify(in.spec, in.equations.front(), in.graph, job.bounds);
    } else {
        if (!in.graph) throw JobError("several equations need a graph");
        r = classify_subvariety(in.spec, in.equations, *in.graph, job.bounds);
    }
    const VarTable& w = in.spec.coords();
    rep["certificate"] = certificate_json(r.certificate);
    rep["transfer"] = r.transfer ? transfer_json(*r.transfer) : ojson(nullptr);
    rep["slice"] = slice_json(r.slice);
    if (r.witness) {
        ojson wj;
        wj["subspace"] = r.witness->subspace;
        if (r.witness->subspace_dimension >= 0) wj["dimension"] = r.witness->subspace_dimension;
        wj["point"] = point_json(r.witness->point, w);
        rep["witness"] = wj;
    } else {
        rep["witness"] = nullptr;
    }
    if (r.localized)
        rep["localized"] = ojson{{"k", r.localized->k}, {"preimage", r.localized->preimage.str()}};
    else if (r.transfer && r.certificate.certified)
        rep["localized"] = ojson{{"noneUpTo", job.bounds.kmax}};
    else
        rep["localized"] = nullptr;
    if (r.boundary_smoothness) {
        ojson s;
        s["kind"] = smoothness_kind(r.boundary_smoothness->kind);
        if (r.boundary_smoothness->kind == SmoothnessKind::OnSamples) s["samples"] = r.boundary_smoothness->samples;
        if (r.boundary_smoothness->kind == SmoothnessKind::SingularWitness)
            s["point"] = point_json(r.boundary_smoothness->point, w);
        rep["boundarySmoothness"] = s;
    } else {
        rep["boundarySmoothness"] = nullptr;
    }
    rep["invariants"] = str_list(r.invariants);
    ojson cc = ojson::array();
    for (const auto& c : r.crosschecks) cc.push_back(ojson{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    rep["crosschecks"] = cc;
    rep["notes"] = r.notes;
    rep["verdict"] = to_string(r.verdict);
    rep["summary"] = verdict_phrase(r.verdict);
    code = exit_code_for(r.verdict);
}

void invariants_command(const Job& job, ojson& rep, int& code) {
    Inputs in = load_inputs(job, false);
    Derivation d = build_derivation(in.spec);
    rep["invariantDeg"] = job.bounds.invariant_degree;
    rep["invariants"] = str_list(graded_kernel_generators(d, job.bounds.invariant_degree));
    code = exit_code::affine_or_pass;
}

void transfer_command(const Job& job, ojson& rep, int& code) {
    Inputs in = load_inputs(job, true);
    if (in.equations.size() != 1) throw JobError("transfer needs a single polynomial");
    const Poly& f = in.equations.front();
    TransferResult t = [&] {
        try {
            return extend(in.spec, f);
        } catch (const NotInvariant& e) {
            throw NonInvariantInput(e.what());
        }
    }();
    rep["transfer"] = transfer_json(t);
    rep["alternateSectionAgrees"] = extend_via_alternate_section(in.spec, f) == t.F;
    rep["sl2Invariant"] = verify_invariance(in.spec, t.F);
    rep["restrictsToF"] = restrict_to_identity_coset(in.spec, t.F) == f;
    bool ok = rep["alternateSectionAgrees"].get<bool>() && rep["sl2Invariant"].get<bool>() &&
              rep["restrictsToF"].get<bool>();
    if (!ok) throw InternalInconsistency("transfer consistency checks failed");
    code = exit_code::affine_or_pass;
}

void slice_command(const Job& job, ojson& rep, int& code) {
    Inputs in = load_inputs(job, false);
    Derivation d = build_derivation(in.spec);
    if (in.graph) {
        for (const auto& e : in.equations) {
            Poly r = e.substitute(in.graph->images);
            if (!r.is_zero()) throw JobError("graph does not lie on X: " + e.str() + " pulls back to " + r.str());
        }
        d = restrict_to_graph(d, *in.graph);
        ojson dx = ojson::object();
        for (std::size_t j = 0; j < d.vars().size(); ++j) dx[d.vars().name(j)] = d.image(j).str();
        rep["restrictedDerivation"] = dx;
    }
    rep["slice"] = slice_json(SliceOutcome{job.bounds.slice_degree, slice_search(d, job.bounds.slice_degree)});
    code = exit_code::affine_or_pass;
}

void family_command(const Job& job, ojson& rep, int& code) {
    if (!job.representation) throw JobError("job has no representation");
    if (job.family.size() != 2) throw JobError("family-compare needs exactly two members");
    std::vector<FamilyMember> members;
    ojson mj = ojson::array();
    for (std::size_t i = 0; i < 2; ++i) {
        const auto& m = job.family[i];
        Poly phi = [&] {
            try {
                return parse(m.phi);
            } catch (const ParseError& e) {
                throw ParseError(e.position(), "family[" + std::to_string(i) + "].phi: " + e.message());
            }
        }();
        if (phi.vars().size() > 1) throw JobError("phi must be univariate: " + m.phi);
        members.push_back({phi, *job.representation, m.delta});
        ojson o{{"phi", phi.str()}};
        try {
            auto fam = build_family_member(members.back());
            o["delta"] = fam.delta.str();
            o["f"] = fam.f.str();
        } catch (const Error& e) {
            o["builder"] = e.what();
        }
        mj.push_back(o);
    }
    FamilyComparison c = compare_family(members[0], members[1]);
    mj[0]["boundaryComponents"] = c.count1;
    mj[1]["boundaryComponents"] = c.count2;
    rep["members"] = mj;
    rep["result"] = c.non_isomorphic ? "NonIsomorphicBoundaryCounts" : "Inconclusive";
    code = exit_code::affine_or_pass;
}

void selftest_command(const Job& job, ojson& rep, int& code) {
    ojson fx = ojson::array();
    bool all = true;
    for (const auto& name : fixture_names()) {
        FixtureCheck c = check_fixture(name, job.bounds);
        ojson o{{"name", name}, {"pass", c.pass}};
        if (c.report) o["verdict"] = to_string(c.report->verdict);
        if (!c.failures.empty()) o["failures"] = c.failures;
        fx.push_back(o);
        all = all && c.pass;
    }
    rep["fixtures"] = fx;
    bool rel = verify_winkelmann_relation();
    bool control = !winkelmann_relation_residue("x1*x4 - x2*x3 - x5*(x5 + 2)").is_zero();
    rep["winkelmannRelation"] = rel;
    rep["perturbedRelationRejected"] = control;
    all = all && rel && control;
    rep["result"] = all ? "pass" : "fail";
    code = all ? exit_code::affine_or_pass : exit_code::internal_error;
}

ojson error_json(const std::string& kind, const std::string& message, std::optional<std::size_t> position = {}) {
    ojson o{{"kind", kind}, {"message", message}};
    if (position) o["position"] = *position;
    return o;
}

void render_value(std::ostringstream& os, const std::string& indent, const std::string& key, const ojson& v) {
    const bool item = key == "-";
    const std::string lead = indent + (item ? "- " : key + ": ");
    if (v.is_object() || (v.is_array() && !v.empty())) {
        os << indent << (item ? "-" : key + ":") << "\n";
        if (v.is_object())
            for (const auto& [k, x] : v.items()) render_value(os, indent + "  ", k, x);
        else
            for (const auto& x : v) render_value(os, indent + "  ", "-", x);
    } else if (v.is_array()) {
        os << lead << "(none)\n";
    } else if (v.is_null()) {
        os << lead << "n/a\n";
    } else if (v.is_string()) {
        os << lead << v.get<std::string>() << "\n";
    } else {
        os << lead << v.dump() << "\n";
    }
}

}  // namespace

RepSpec representation_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw JobError("representation must be an object");
    if (!j.contains("blocks") || !j["blocks"].is_array() || j["blocks"].empty())
        throw JobError("representation.blocks must be a non-empty list");
    std::vector<Block> blocks;
    for (const auto& b : j["blocks"]) {
        if (!b.is_object() || b.size() != 1) throw JobError("each block is {\"sym\": k} or {\"vblock\": n}");
        auto it = b.begin();
        if (!it.value().is_number_unsigned()) throw JobError("block size must be a non-negative integer");
        unsigned n = it.value().get<unsigned>();
        if (it.key() == "sym") blocks.push_back(Block::sym(n));
        else if (it.key() == "vblock") blocks.push_back(Block::vblock(n));
        else throw JobError("unknown block kind '" + it.key() + "'");
    }
    Normalization norm = Normalization::Section5;
    if (j.contains("normalization")) {
        std::string s = j["normalization"].get<std::string>();
        if (s == "section5") norm = Normalization::Section5;
        else if (s == "unit") norm = Normalization::Unit;
        else throw JobError("normalization must be 'section5' or 'unit'");
    }
    if (j.contains("names")) return RepSpec(blocks, norm, j["names"].get<std::vector<std::string>>());
    unsigned first = j.contains("firstIndex") ? j["firstIndex"].get<unsigned>() : 0;
    return RepSpec(blocks, norm, first);
}

nlohmann::ordered_json representation_to_json(const RepSpec& spec) {
    ojson blocks = ojson::array();
    for (const auto& b : spec.blocks())
        blocks.push_back(ojson{{b.kind == Block::Kind::Sym ? "sym" : "vblock", b.value}});
    ojson o;
    o["blocks"] = blocks;
    o["normalization"] = spec.normalization() == Normalization::Section5 ? "section5" : "unit";
    if (spec.coords() != RepSpec(spec.blocks(), spec.normalization()).coords()) o["names"] = spec.coords().names();
    return o;
}

Graph graph_from_strings(const std::map<std::string, std::string>& images) {
    std::set<std::string> found;
    for (const auto& [w, text] : images) {
        try {
            Poly p = parse(text);
            for (const auto& n : p.vars().names()) found.insert(n);
        } catch (const ParseError& e) {
            throw ParseError(e.position(), "graph." + w + ": " + e.message());
        }
    }
    std::vector<std::string> z(found.begin(), found.end());
    std::sort(z.begin(), z.end(), [](const std::string& a, const std::string& b) {
        return natural_key(a) < natural_key(b);
    });
    Graph g{VarTable(z), {}};
    for (const auto& [w, text] : images) g.images.emplace(w, parse(text, g.z));
    return g;
}

Job job_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw JobError("job must be a JSON object");
    static const std::set<std::string> known{"command", "fixture",  "name",   "citations", "representation",
                                             "polynomial", "equations", "graph", "family",   "bounds",
                                             "output"};
    for (const auto& [k, v] : j.items())
        if (!known.count(k)) throw JobError("unknown job key '" + k + "'");
    try {
        std::string command = j.value("command", "classify");
        if (!kCommands.count(command)) throw JobError("unknown command '" + command + "'");
        Job job;
        if (j.contains("fixture")) {
            job = fixture_job(j["fixture"].get<std::string>(), command);
            for (const char* k : {"representation", "polynomial", "equations", "graph"})
                if (j.contains(k)) throw JobError(std::string("'fixture' cannot be combined with '") + k + "'");
        }
        job.command = command;
        if (j.contains("name")) job.name = j["name"].get<std::string>();
        if (j.contains("citations")) job.citations = j["citations"].get<std::vector<std::string>>();
        if (j.contains("representation")) job.representation = representation_from_json(j["representation"]);
        if (j.contains("polynomial")) job.polynomial = j["polynomial"].get<std::string>();
        if (j.contains("equations")) job.equations = j["equations"].get<std::vector<std::string>>();
        if (j.contains("graph")) job.graph = j["graph"].get<std::map<std::string, std::string>>();
        if (j.contains("family")) {
            for (const auto& m : j["family"]) {
                if (!m.contains("phi")) throw JobError("family member needs 'phi'");
                job.family.push_back({m["phi"].get<std::string>(), m.value("delta", std::size_t{0})});
            }
        }
        if (j.contains("bounds")) {
            const auto& b = j["bounds"];
            for (const auto& [k, v] : b.items())
                if (k != "kmax" && k != "sliceDeg" && k != "invariantDeg") throw JobError("unknown bound '" + k + "'");
            job.bounds.kmax = b.value("kmax", job.bounds.kmax);
            job.bounds.slice_degree = b.value("sliceDeg", job.bounds.slice_degree);
            job.bounds.invariant_degree = b.value("invariantDeg", job.bounds.invariant_degree);
        }
        job.output = j.value("output", job.output);
        if (job.output != "text" && job.output != "structured") throw JobError("output must be 'text' or 'structured'");
        return job;
    } catch (const nlohmann::json::exception& e) {
        throw JobError(std::string("malformed job: ") + e.what());
    }
}

Job job_from_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw JobError(std::string("job file is not valid JSON: ") + e.what());
    }
    return job_from_json(j);
}

nlohmann::ordered_json job_to_json(const Job& job) {
    ojson o;
    o["command"] = job.command;
    if (job.name) o["name"] = *job.name;
    if (!job.citations.empty()) o["citations"] = job.citations;
    if (job.representation) o["representation"] = representation_to_json(*job.representation);
    if (job.polynomial) o["polynomial"] = *job.polynomial;
    if (!job.equations.empty()) o["equations"] = job.equations;
    if (job.graph) {
        ojson g = ojson::object();
        for (const auto& [w, t] : *job.graph) g[w] = t;
        o["graph"] = g;
    }
    if (!job.family.empty()) {
        ojson f = ojson::array();
        for (const auto& m : job.family) f.push_back(ojson{{"phi", m.phi}, {"delta", m.delta}});
        o["family"] = f;
    }
    o["bounds"] = bounds_json(job.bounds);
    o["output"] = job.output;
    return o;
}

Job fixture_job(const std::string& name, const std::string& command) {
    Fixture fx = fixture(name);
    Job job;
    job.command = command;
    job.name = fx.name;
    job.citations = fx.citations;
    job.representation = fx.spec;
    if (fx.hypersurface()) job.polynomial = fx.equations.front().str();
    else
        for (const auto& e : fx.equations) job.equations.push_back(e.str());
    if (fx.graph) {
        std::map<std::string, std::string> g;
        for (const auto& [w, h] : fx.graph->images) g[w] = h.str();
        job.graph = g;
    }
    return job;
}

RunOutcome run(const Job& job) {
    ojson rep;
    rep["schema"] = kReportSchema;
    rep["command"] = job.command;
    if (job.name) rep["name"] = *job.name;
    if (!job.citations.empty()) rep["citations"] = job.citations;
    rep["bounds"] = bounds_json(job.bounds);
    if (job.representation) {
        rep["representation"] = representation_to_json(*job.representation);
        rep["coordinates"] = job.representation->coords().names();
    }
    if (job.polynomial) rep["polynomial"] = *job.polynomial;
    if (!job.equations.empty()) rep["equations"] = job.equations;
    if (job.graph) {
        ojson g = ojson::object();
        for (const auto& [w, t] : *job.graph) g[w] = t;
        rep["graph"] = g;
    }

    int code = exit_code::input_error;
    try {
        if (job.command == "classify") classify_command(job, rep, code);
        else if (job.command == "invariants") invariants_command(job, rep, code);
        else if (job.command == "transfer") transfer_command(job, rep, code);
        else if (job.command == "slice") slice_command(job, rep, code);
        else if (job.command == "family-compare") family_command(job, rep, code);
        else if (job.command == "selftest") selftest_command(job, rep, code);
        else throw JobError("unknown command '" + job.command + "'");
    } catch (const ParseError& e) {
        rep["error"] = error_json("parse", e.message(), e.position());
        code = exit_code::input_error;
    } catch (const NonInvariantInput& e) {
        rep["error"] = error_json("precondition", e.what());
        code = exit_code::input_error;
    } catch (const InconsistentGraph& e) {
        rep["error"] = error_json("precondition", e.what());
        code = exit_code::input_error;
    } catch (const InternalInconsistency& e) {
        rep["error"] = error_json("internal-inconsistency", e.what());
        code = exit_code::internal_error;
    } catch (const Error& e) {
        rep["error"] = error_json("input", e.what());
        code = exit_code::input_error;
    }
    rep["exit"] = code;
    return {code, rep};
}

std::string render_text(const nlohmann::ordered_json& report) {
    std::ostringstream os;
    for (const auto& [k, v] : report.items()) render_value(os, "", k, v);
    return os.str();
}

std::string render(const RunOutcome& outcome, const std::string& format) {
    if (format == "structured") return outcome.report.dump(2) + "\n";
    return render_text(outcome.report);
}

}  // namespace gaquot
