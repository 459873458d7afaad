#include "gaquot/classify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "gaquot/linalg.hpp"
#include "gaquot/univariate.hpp"

namespace gaquot {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Affine: return "Affine";
        case Verdict::StrictlyQuasiAffine: return "StrictlyQuasiAffine";
        case Verdict::NotEverywhereStable: return "NotEverywhereStable";
        case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

std::optional<Verdict> verdict_from_string(const std::string& s) {
    for (auto v : {Verdict::Affine, Verdict::StrictlyQuasiAffine, Verdict::NotEverywhereStable, Verdict::Unknown})
        if (to_string(v) == s) return v;
    return std::nullopt;
}

bool ClassificationReport::crosschecks_pass() const {
    return std::all_of(crosschecks.begin(), crosschecks.end(), [](const Crosscheck& c) { return c.pass; });
}

namespace {

std::map<std::string, Rational> zeros_for(const std::vector<std::string>& names) {
    std::map<std::string, Rational> m;
    for (const auto& n : names) m.emplace(n, 0);
    return m;
}

// 0, 1, -1, 2, -2, ...
long box_value(unsigned i) { return (i % 2 == 1) ? long(i / 2 + 1) : -long(i / 2); }

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(rn, rd);
}

// Some rational root of a dense univariate polynomial, trying the closed
// forms for degree <= 2 and small integers otherwise.
std::optional<Rational> univariate_root(const DenseUPoly& c, unsigned box) {
    if (c.empty()) return Rational(0);
    if (c.size() == 1) return std::nullopt;
    if (c.size() == 2) return Rational(-c[0] / c[1]);
    if (c.size() == 3) {
        Rational disc = c[1] * c[1] - 4 * c[2] * c[0];
        if (auto s = rational_sqrt(disc)) return Rational((-c[1] + *s) / (2 * c[2]));
        return std::nullopt;
    }
    for (unsigned i = 0; i < 2 * box + 1; ++i) {
        Rational x = box_value(i), acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        if (acc == 0) return x;
    }
    return std::nullopt;
}

// A rational zero of p: one variable is solved for, the others range over
// the integer box. Returns values for the variables of p that occur.
std::optional<std::map<std::string, Rational>> find_zero(const Poly& p, unsigned box, unsigned budget) {
    const VarTable& vars = p.vars();
    std::map<std::string, Rational> point;
    if (p.is_zero()) return point;
    auto support = p.support();
    if (support.empty()) return std::nullopt;

    std::size_t pivot = *std::min_element(support.begin(), support.end(), [&](std::size_t a, std::size_t b) {
        return p.degree_in(a) < p.degree_in(b);
    });
    std::vector<std::size_t> rest;
    for (auto i : support)
        if (i != pivot) rest.push_back(i);

    std::vector<unsigned> odo(rest.size(), 0);
    const unsigned side = 2 * box + 1;
    for (unsigned tried = 0; tried < budget; ++tried) {
        std::map<std::string, Rational> vals;
        for (std::size_t j = 0; j < rest.size(); ++j) vals[vars.name(rest[j])] = box_value(odo[j]);
        Poly q = p.specialize(vals);
        if (auto x = univariate_root(to_dense(q), box)) {
            vals[vars.name(pivot)] = *x;
            return vals;
        }
        std::size_t j = 0;
        while (j < odo.size() && ++odo[j] == side) odo[j++] = 0;
        if (j == odo.size()) break;
    }
    return std::nullopt;
}

void check_invariant(const Derivation& d, const Poly& f) {
    Poly df = d.apply(f);
    if (!df.is_zero()) throw NonInvariantInput("input is not G_a-invariant: D(f) = " + df.str());
}

Poly pull_back(const Poly& p, const Graph& graph) {
    return p.substitute(graph.images);
}

// Checks that the graph parametrizes the zero set of every equation.
void check_graph_on(const std::vector<Poly>& equations, const Graph& graph) {
    for (const auto& e : equations) {
        Poly r = pull_back(e, graph);
        if (!r.is_zero()) throw Error("graph does not lie on X: " + e.str() + " pulls back to " + r.str());
    }
}

// Unstable points of X through its graph: the free z-variables paired with
// non-stable coordinates are set to 0, and the remaining non-stable images
// must vanish, identically (a linear subspace) or at a searched point.
std::optional<UnstableWitness> graph_witness(const RepSpec& spec, const Graph& graph, const Bounds& bounds) {
    auto nonstable = nonstable_coordinates(spec);
    std::set<std::string> ns(nonstable.begin(), nonstable.end());
    std::map<std::string, Rational> zvals;
    std::vector<std::string> subspace;
    for (const auto& [z, w] : graph.free_coordinates()) {
        if (ns.count(w)) {
            zvals[z] = 0;
            subspace.push_back(w);
        }
    }
    std::sort(subspace.begin(), subspace.end(), [&](const std::string& a, const std::string& b) {
        return spec.coords().index(a) < spec.coords().index(b);
    });

    std::vector<Poly> residual;
    for (const auto& w : nonstable) {
        Poly r = graph.images.at(w).specialize(zvals);
        if (!r.is_zero()) residual.push_back(std::move(r));
    }

    UnstableWitness wit;
    if (residual.empty()) {
        wit.subspace = subspace;
        wit.subspace_dimension = int(graph.z.size() - zvals.size());
    } else {
        // Common zero of the residual images, one equation at a time over
        // the integer box.
        auto z = find_zero(residual.front(), bounds.witness_box, bounds.sample_budget);
        if (!z) return std::nullopt;
        for (auto& [k, v] : *z) zvals[k] = v;
        for (const auto& r : residual)
            if (!r.specialize(zvals).is_zero()) return std::nullopt;
    }
    for (std::size_t j = 0; j < graph.z.size(); ++j) zvals.try_emplace(graph.z.name(j), 0);
    for (const auto& [w, h] : graph.images) wit.point[w] = h.specialize(zvals).constant_term();
    return wit;
}

std::optional<UnstableWitness> restriction_witness(const RepSpec& spec, const Poly& restriction,
                                                   const Bounds& bounds) {
    auto z = find_zero(restriction, bounds.witness_box, bounds.sample_budget);
    if (!z) return std::nullopt;
    UnstableWitness wit;
    for (const auto& name : spec.coords().names()) wit.point[name] = 0;
    for (auto& [k, v] : *z) wit.point[k] = v;
    return wit;
}

}  // namespace

StabilityCertificate certify_everywhere_stable(const RepSpec& spec, const std::vector<Poly>& equations) {
    StabilityCertificate cert;
    cert.nonstable = nonstable_coordinates(spec);
    auto zero = zeros_for(cert.nonstable);
    for (const auto& e : equations) {
        Poly r = e.specialize(zero);
        if (r.is_constant() && !r.is_zero()) cert.certified = true;
        cert.restrictions.push_back(std::move(r));
    }
    return cert;
}

StabilityCertificate certify_everywhere_stable(const RepSpec& spec, const Poly& f) {
    return certify_everywhere_stable(spec, std::vector<Poly>{f});
}

Crosscheck crosscheck_geomchar2(const RepSpec& spec, const Poly& f, Verdict verdict) {
    Poly fp = f - Poly::constant(f.vars(), f.constant_term());
    Poly F00 = extend(spec, fp).F00;
    bool contains = F00.is_zero();
    bool pass = contains == (verdict == Verdict::Affine);
    return {"geomchar2", pass, "F00(f - c(f)) = " + F00.str()};
}

LocalizedQuotient localized_quotient_affine(const RepSpec& spec, const Poly& h, unsigned kmax) {
    Derivation d = build_derivation(spec);
    check_invariant(d, h);
    return {power_in_image(d, h, kmax), kmax};
}

SmoothnessResult jacobian_boundary_smoothness(const Poly& F00, unsigned sample_budget, unsigned box) {
    if (F00.is_constant()) throw Error("smoothness check needs a non-constant F00");
    const VarTable& vars = F00.vars();
    const std::size_t n = vars.size();
    std::vector<Poly> grad;
    for (std::size_t i = 0; i < n; ++i) grad.push_back(F00.derivative(i));

    auto point_map = [&](const std::vector<Rational>& x) {
        std::map<std::string, Rational> m;
        for (std::size_t i = 0; i < n; ++i) m[vars.name(i)] = x[i];
        return m;
    };

    bool linear = std::all_of(grad.begin(), grad.end(), [](const Poly& g) { return g.total_degree() <= 1; });
    if (linear) {
        // grad F00 = 0 is A x = b. F00 is constant on its solution set, so
        // one solution decides.
        Matrix a(n, n);
        Vector b(n);
        for (std::size_t r = 0; r < n; ++r) {
            for (const auto& [m, c] : grad[r].terms()) {
                auto it = std::find(m.begin(), m.end(), 1u);
                if (it == m.end()) b[r] = -c;
                else a(r, std::size_t(it - m.begin())) = c;
            }
        }
        auto x = solve(a, b);
        if (!x || F00.evaluate(*x) != 0) return {SmoothnessKind::Proved, {}, 0};
        return {SmoothnessKind::SingularWitness, point_map(*x), 0};
    }

    auto singular_at = [&](const std::vector<Rational>& x) {
        if (F00.evaluate(x) != 0) return false;
        return std::all_of(grad.begin(), grad.end(), [&](const Poly& g) { return g.evaluate(x) == 0; });
    };

    std::mt19937 rng(20240611u);
    std::uniform_int_distribution<long> dist(-long(box), long(box));
    std::vector<Rational> x(n, Rational(0));
    unsigned samples = 0;
    for (; samples < sample_budget; ++samples) {
        if (samples > 0)
            for (auto& xi : x) xi = dist(rng);
        if (singular_at(x)) return {SmoothnessKind::SingularWitness, point_map(x), samples + 1};
    }
    return {SmoothnessKind::OnSamples, {}, samples};
}

ClassificationReport classify(const RepSpec& spec, const Poly& f, const std::optional<Graph>& graph,
                              const Bounds& bounds) {
    if (f.vars() != spec.coords()) throw VarTableMismatch("polynomial is not over the representation's coordinates");
    Derivation d = build_derivation(spec);
    check_invariant(d, f);
    if (f.is_constant()) throw Error("f is constant, so f = 0 is not a hypersurface");

    ClassificationReport rep;
    rep.bounds = bounds;
    rep.invariants = graded_kernel_generators(d, bounds.invariant_degree);

    std::optional<Derivation> dx;
    if (graph) {
        check_graph_on({f}, *graph);
        dx = restrict_to_graph(d, *graph);
        rep.slice = SliceOutcome{bounds.slice_degree, slice_search(*dx, bounds.slice_degree)};
    }

    rep.certificate = certify_everywhere_stable(spec, f);
    rep.transfer = extend(spec, f);
    const Boundary boundary = rep.transfer->boundary;

    if (!rep.certificate.certified) {
        rep.witness = graph ? graph_witness(spec, *graph, bounds)
                            : restriction_witness(spec, rep.certificate.restrictions.front(), bounds);
        if (rep.witness) {
            rep.verdict = Verdict::NotEverywhereStable;
            rep.notes.push_back("X meets the subspace where all positive-weight coordinates vanish");
        } else {
            rep.verdict = Verdict::Unknown;
            rep.notes.push_back("stability not certified and no unstable point found within the search box");
        }
        return rep;
    }

    if (boundary == Boundary::Contains)
        throw InternalInconsistency("certified everywhere stable but F00 = 0: the origin would lie on X");
    rep.verdict = boundary == Boundary::Misses ? Verdict::Affine : Verdict::StrictlyQuasiAffine;
    const bool affine = rep.verdict == Verdict::Affine;

    // Transfer sanity: both sections agree, F is SL_2-invariant, and F
    // restricts back to f.
    {
        const Poly& F = rep.transfer->F;
        bool ok = extend_via_alternate_section(spec, f) == F && verify_invariance(spec, F) &&
                  restrict_to_identity_coset(spec, F) == f;
        rep.crosschecks.push_back({"transfer", ok, "F00 = " + rep.transfer->F00.str()});
        if (!ok) throw InternalInconsistency("transfer of " + f.str() + " failed its consistency checks");
    }

    Poly g00 = extend(spec, rep.transfer->g).F00;
    rep.crosschecks.push_back({"decomposition", g00.is_zero(), "F00(f - F00) = " + g00.str()});
    if (!g00.is_zero()) throw InternalInconsistency("F00(f - F00) = " + g00.str() + " is not zero");

    auto gc2 = crosscheck_geomchar2(spec, f, rep.verdict);
    rep.crosschecks.push_back(gc2);
    if (!gc2.pass) throw InternalInconsistency("f - c(f) route disagrees: " + gc2.detail);

    Poly fp = f - Poly::constant(f.vars(), f.constant_term());
    rep.localized = power_in_image(d, fp, bounds.kmax);
    {
        bool found = rep.localized.has_value();
        std::string detail = found ? "(f - c(f))^" + std::to_string(rep.localized->k) + " in Im(D)"
                                   : "no power <= " + std::to_string(bounds.kmax) + " of f - c(f) in Im(D)";
        rep.crosschecks.push_back({"localized-quotient", found == affine, detail});
        if (found && !affine) throw InternalInconsistency("a power of f - c(f) lies in Im(D) but F00 is not constant");
    }

    if (rep.slice) {
        bool found = rep.slice->slice.has_value();
        std::string detail = found ? "slice " + rep.slice->slice->s.str()
                                   : "no slice up to degree " + std::to_string(rep.slice->bound);
        rep.crosschecks.push_back({"slice", found == affine, detail});
        if (found && !affine) throw InternalInconsistency("slice found but the quotient is not affine");
    }

    if (!affine) {
        rep.boundary_smoothness =
            jacobian_boundary_smoothness(rep.transfer->F00, bounds.sample_budget, bounds.witness_box);
        if (rep.boundary_smoothness->kind == SmoothnessKind::OnSamples)
            rep.notes.push_back("boundary smoothness holds on samples only");
    }
    return rep;
}

ClassificationReport classify_subvariety(const RepSpec& spec, const std::vector<Poly>& equations, const Graph& graph,
                                         const Bounds& bounds) {
    if (equations.empty()) throw Error("no equations given");
    for (const auto& e : equations)
        if (e.vars() != spec.coords())
            throw VarTableMismatch("equation is not over the representation's coordinates");
    Derivation d = build_derivation(spec);
    check_graph_on(equations, graph);
    Derivation dx;
    try {
        dx = restrict_to_graph(d, graph);
    } catch (const InconsistentGraph& e) {
        throw NonInvariantInput(std::string("X is not G_a-stable: ") + e.what());
    }

    ClassificationReport rep;
    rep.bounds = bounds;
    rep.invariants = graded_kernel_generators(d, bounds.invariant_degree);
    rep.slice = SliceOutcome{bounds.slice_degree, slice_search(dx, bounds.slice_degree)};
    rep.certificate = certify_everywhere_stable(spec, equations);

    if (!rep.certificate.certified) {
        rep.witness = graph_witness(spec, graph, bounds);
        rep.verdict = rep.witness ? Verdict::NotEverywhereStable : Verdict::Unknown;
        if (rep.witness)
            rep.notes.push_back("X meets the subspace where all positive-weight coordinates vanish");
        return rep;
    }
    if (rep.slice->slice) {
        rep.verdict = Verdict::Affine;
        rep.notes.push_back("slice on X: the quotient is affine and the bundle is trivial");
    } else {
        rep.verdict = Verdict::Unknown;
        rep.notes.push_back("the boundary test needs a hypersurface; no slice found within the bound");
    }
    return rep;
}

FamilyHypersurface build_family_member(const FamilyMember& m) {
    const RepSpec& spec = m.spec;
    if (spec.summands().empty() || spec.summands().front() == 0)
        throw Error("the first summand must be Sym^q with q >= 1");
    DenseUPoly phi = to_dense(m.phi);
    Rational phi0 = phi.empty() ? Rational(0) : phi[0];
    if (phi0 == -1) throw Error("phi(0) = -1 puts the origin on X");

    auto catalog = catalog_invariants(spec);
    if (m.delta >= catalog.size()) throw Error("delta index out of range");
    const CatalogInvariant& ci = catalog[m.delta];
    const std::string& w0 = spec.coords().name(0);
    if (!ci.stable) throw Error("delta " + ci.origin + " is not a stable invariant");
    if (ci.poly.involves(0)) throw Error("delta " + ci.origin + " involves " + w0);

    const VarTable& w = spec.coords();
    Poly delta = ci.poly;
    Poly h = Poly::constant(w, 0);
    for (auto it = phi.rbegin(); it != phi.rend(); ++it) h = h * delta + Poly::constant(w, *it);
    h += Poly::constant(w, 1);
    Poly f = h - Poly::variable(w, 0);

    std::vector<std::string> znames;
    for (std::size_t i = 1; i < w.size(); ++i) {
        const std::string& n = w.name(i);
        bool indexed = n.size() > 1 && n[0] == 'w' &&
                       std::all_of(n.begin() + 1, n.end(), [](char c) { return c >= '0' && c <= '9'; });
        znames.push_back(indexed ? "z" + n.substr(1) : "z_" + n);
    }
    Graph graph{VarTable(znames), {}};
    std::map<std::string, Poly> to_z;
    for (std::size_t i = 1; i < w.size(); ++i) {
        Poly zi = Poly::variable(graph.z, i - 1);
        to_z.emplace(w.name(i), zi);
        graph.images.emplace(w.name(i), zi);
    }
    to_z.emplace(w0, Poly(graph.z));
    graph.images.emplace(w0, h.substitute(to_z));
    return {std::move(f), std::move(graph), std::move(delta)};
}

FamilyComparison compare_family(const FamilyMember& m1, const FamilyMember& m2) {
    auto count = [](const FamilyMember& m) {
        RootCount rc = squarefree_distinct_root_count(m.phi);
        if (!rc.squarefree) throw Error("phi = " + m.phi.str() + " has repeated roots");
        return rc.distinct_roots;
    };
    unsigned c1 = count(m1), c2 = count(m2);
    return {c1 != c2, c1, c2};
}

}  // namespace gaquot
