#include "gaquot/catalog.hpp"

#include <algorithm>

#include "gaquot/parse.hpp"

namespace gaquot {

namespace {

const RepSpec& winkelmann_spec() {
    static const RepSpec spec({Block::sym(1), Block::vblock(2)}, Normalization::Section5);
    return spec;
}

constexpr std::size_t kWinkelmannDelta = 2;  // minor of the two V summands

Graph graph_from(const std::vector<std::string>& z, const std::map<std::string, std::string>& images) {
    Graph g{VarTable(z), {}};
    for (const auto& [w, text] : images) g.images.emplace(w, parse(text, g.z));
    return g;
}

Fixture winkelmann() {
    const RepSpec& spec = winkelmann_spec();
    Fixture fx{"winkelmann", spec, {parse("1 + (w2*w5 - w3*w4) - w0", spec.coords())}};
    fx.graph = graph_from({"z1", "z2", "z3", "z4", "z5"}, {{"w0", "1 + z2*z5 - z3*z4"},
                                                         {"w1", "z1"},
                                                         {"w2", "z2"},
                                                         {"w3", "z3"},
                                                         {"w4", "z4"},
                                                         {"w5", "z5"}});
    fx.expected = Verdict::StrictlyQuasiAffine;
    fx.citations = {"Winkelmann's free G_a-action on A^5 with strictly quasi-affine quotient",
                    "graph embedding w0 = 1 + Delta into Sym^1 + V + V"};
    return fx;
}

Fixture sl2_in_v2() {
    RepSpec spec({Block::vblock(2)}, Normalization::Section5);
    Fixture fx{"sl2-in-v2", spec, {parse("1 - w0*w3 + w1*w2", spec.coords())}};
    fx.expected = Verdict::StrictlyQuasiAffine;
    fx.expected_low_invariants = {parse("w0", spec.coords()), parse("w2", spec.coords())};
    fx.citations = {"SL_2 inside V + V, quotient A^2 minus the origin"};
    return fx;
}

Fixture affine_slice() {
    RepSpec spec({Block::sym(1)}, Normalization::Section5);
    Fixture fx{"affine-slice", spec, {parse("1 - w0", spec.coords())}};
    fx.graph = graph_from({"z1"}, {{"w0", "1"}, {"w1", "z1"}});
    fx.expected = Verdict::Affine;
    fx.expected_slice_degree = 1;
    fx.citations = {"hyperplane w0 = 1 in Sym^1, where w1 is a slice"};
    return fx;
}

Fixture deveney_finston() {
    std::vector<std::string> names;
    for (int i = 1; i <= 8; ++i) names.push_back("w" + std::to_string(i));
    RepSpec spec({Block::vblock(2), Block::sym(3)}, Normalization::Unit, names);
    const VarTable& w = spec.coords();
    Fixture fx{"deveney-finston", spec,
               {parse("w5 - 2*w1*w3^2", w), parse("w6 - 2*w1*w3*w4", w), parse("w7 - 1 - w1*w4^2", w)}};
    fx.graph = graph_from({"z1", "z2", "z3", "z4", "z8"}, {{"w1", "z1"},
                                                         {"w2", "z2"},
                                                         {"w3", "z3"},
                                                         {"w4", "z4"},
                                                         {"w5", "2*z1*z3^2"},
                                                         {"w6", "2*z1*z3*z4"},
                                                         {"w7", "1 + z1*z4^2"},
                                                         {"w8", "z8"}});
    fx.expected = Verdict::NotEverywhereStable;
    fx.expected_witness_subspace = {"w1", "w3"};
    fx.citations = {"Deveney-Finston G_a-action on A^5 recovered inside V + V + Sym^3",
                    "unit normalization on the Sym^3 block"};
    return fx;
}

Fixture quadric_relation() {
    Fixture fx = winkelmann();
    fx.name = "quadric-relation";
    fx.relation = "x1*x4 - x2*x3 - x5*(x5 + 1)";
    fx.citations = {"quadric relation among the invariants of Winkelmann's example",
                    "x1..x5 = w2, w4, w0*w3 - w1*w2, w0*w5 - w1*w4, w2*w5 - w3*w4"};
    return fx;
}

Fixture family_phi(const std::string& phi_text) {
    Poly phi = parse(phi_text);
    if (phi.vars().size() > 1) throw UnknownFixture("family-phi needs a univariate phi, got '" + phi_text + "'");
    if (phi.is_constant()) throw UnknownFixture("family-phi needs a non-constant phi");
    FamilyMember member{phi, winkelmann_spec(), kWinkelmannDelta};
    auto fam = build_family_member(member);
    Fixture fx{"family-phi(" + phi_text + ")", member.spec, {fam.f}};
    fx.graph = fam.graph;
    fx.family = member;
    fx.expected = Verdict::StrictlyQuasiAffine;
    fx.citations = {"family h_phi = 1 + phi(Delta) over Sym^1 + V + V"};
    return fx;
}

}  // namespace

Fixture fixture(const std::string& name) {
    if (name == "winkelmann") return winkelmann();
    if (name == "sl2-in-v2") return sl2_in_v2();
    if (name == "affine-slice") return affine_slice();
    if (name == "deveney-finston") return deveney_finston();
    if (name == "quadric-relation") return quadric_relation();
    const std::string prefix = "family-phi(";
    if (name.size() > prefix.size() + 1 && name.compare(0, prefix.size(), prefix) == 0 && name.back() == ')')
        return family_phi(name.substr(prefix.size(), name.size() - prefix.size() - 1));
    throw UnknownFixture("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
    return {"winkelmann",   "sl2-in-v2",       "affine-slice",   "deveney-finston",
            "quadric-relation", "family-phi(t)", "family-phi(t^2 - 2)"};
}

ClassificationReport classify_fixture(const Fixture& fx, const Bounds& bounds) {
    if (fx.hypersurface()) return classify(fx.spec, fx.equations.front(), fx.graph, bounds);
    if (!fx.graph) throw Error("fixture " + fx.name + " has several equations but no graph");
    return classify_subvariety(fx.spec, fx.equations, *fx.graph, bounds);
}

Poly winkelmann_relation_residue(const std::string& relation, bool impose_hypersurface) {
    const VarTable& w = winkelmann_spec().coords();
    VarTable x{"x1", "x2", "x3", "x4", "x5"};
    Poly rel = parse(relation, x);
    std::map<std::string, Poly> inv{{"x1", parse("w2", w)},
                                    {"x2", parse("w4", w)},
                                    {"x3", parse("w0*w3 - w1*w2", w)},
                                    {"x4", parse("w0*w5 - w1*w4", w)},
                                    {"x5", parse("w2*w5 - w3*w4", w)}};
    Poly r = rel.substitute(inv);
    if (!impose_hypersurface) return r;
    // w0 = 1 + x5 is solved for w0, so reduction is substitution.
    std::map<std::string, Poly> on_x;
    for (const auto& name : w.names()) on_x.emplace(name, Poly::variable(w, name));
    on_x["w0"] = parse("1 + w2*w5 - w3*w4", w);
    return r.substitute(on_x);
}

bool verify_winkelmann_relation() {
    return winkelmann_relation_residue("x1*x4 - x2*x3 - x5*(x5 + 1)").is_zero();
}

FixtureCheck check_fixture(const std::string& name, const Bounds& bounds) {
    FixtureCheck out;
    out.name = name;
    auto fail = [&](std::string why) { out.failures.push_back(std::move(why)); };
    try {
        Fixture fx = fixture(name);
        out.report = classify_fixture(fx, bounds);
        const auto& rep = *out.report;
        if (rep.verdict != fx.expected)
            fail("verdict " + to_string(rep.verdict) + ", expected " + to_string(fx.expected));
        if (!rep.crosschecks_pass()) fail("crosscheck failed");
        if (fx.expected == Verdict::Affine && fx.graph && !(rep.slice && rep.slice->slice))
            fail("no slice for an affine fixture");
        if (fx.expected == Verdict::StrictlyQuasiAffine && rep.slice && rep.slice->slice)
            fail("slice found for a strictly quasi-affine fixture");
        if (fx.expected_slice_degree &&
            !(rep.slice && rep.slice->slice && rep.slice->slice->degree == *fx.expected_slice_degree))
            fail("slice not found at degree " + std::to_string(*fx.expected_slice_degree));
        if (!fx.expected_witness_subspace.empty() &&
            !(rep.witness && rep.witness->subspace == fx.expected_witness_subspace))
            fail("witness subspace differs");
        if (!fx.expected_low_invariants.empty()) {
            std::vector<Poly> deg1;
            for (const auto& p : rep.invariants)
                if (p.total_degree() == 1) deg1.push_back(p);
            if (deg1 != fx.expected_low_invariants) fail("degree-1 invariants differ");
        }
        if (fx.family) {
            auto fam = build_family_member(*fx.family);
            Rational phi0 = fx.family->phi.constant_term();
            auto cert = certify_everywhere_stable(fx.spec, fam.f);
            if (!cert.certified || cert.restrictions.front() != Poly::constant(fx.spec.coords(), 1 + phi0))
                fail("family certificate is not 1 + phi(0)");
        }
        if (fx.relation) {
            if (!winkelmann_relation_residue(*fx.relation).is_zero()) fail("relation does not hold on X");
            if (winkelmann_relation_residue(*fx.relation, false).is_zero())
                fail("relation holds without the hypersurface equation");
        }
    } catch (const std::exception& e) {
        fail(e.what());
    }
    out.pass = out.failures.empty();
    return out;
}

}  // namespace gaquot
