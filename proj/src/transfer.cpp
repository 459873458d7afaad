#include "gaquot/transfer.hpp"

#include <map>

namespace gaquot {

std::string to_string(Boundary b) {
    switch (b) {
        case Boundary::Misses: return "misses";
        case Boundary::Intersects: return "intersects";
        case Boundary::Contains: return "contains";
    }
    return "?";
}

Boundary classify_boundary(const Poly& F00) {
    if (F00.is_zero()) return Boundary::Contains;
    if (F00.is_constant()) return Boundary::Misses;
    return Boundary::Intersects;
}

namespace {

VarTable uv_table() { return VarTable{kU, kV}; }

void check_names(const RepSpec& spec) {
    if (spec.coords().contains(kU) || spec.coords().contains(kV))
        throw Error("coordinates of W may not be named 'u' or 'v'");
}

Poly transfer_with(const RepSpec& spec, const Poly& f, const SL2Element& inverse_section) {
    check_names(spec);
    if (f.vars() != spec.coords()) throw VarTableMismatch("polynomial is not over the representation's coordinates");
    if (!build_derivation(spec).apply(f).is_zero())
        throw NotInvariant("polynomial is not G_a-invariant: D(f) = " + build_derivation(spec).apply(f).str());
    auto sub = group_substitution(spec, inverse_section);
    auto F = sub.apply(f);
    if (!F) throw NotInvariant("denominators did not cancel in the transfer of " + f.str());
    return *F;
}

// Rewrites a polynomial free of u, v over the coordinates of W.
Poly drop_uv(const RepSpec& spec, const Poly& p) {
    std::map<std::string, Poly> m;
    for (const auto& name : p.vars().names()) {
        if (name == kU || name == kV) m.emplace(name, Poly(spec.coords()));
        else m.emplace(name, Poly::variable(spec.coords(), name));
    }
    return p.substitute(m);
}

}  // namespace

TransferResult extend(const RepSpec& spec, const Poly& f) {
    VarTable uv = uv_table();
    Poly u = Poly::variable(uv, 0), v = Poly::variable(uv, 1);
    // g_{u,v}^{-1} = [[v, -u], [0, 1/v]] = [[v^2, -u v], [0, 1]] / v
    SL2Element inv{v * v, -(u * v), Poly(uv), Poly::constant(uv, 1), kV, 1};
    Poly F = transfer_with(spec, f, inv);

    Poly F00 = drop_uv(spec, F.specialize({{kU, 0}, {kV, 0}}));
    Poly g = f - F00;
    return {std::move(F), F00, std::move(g), classify_boundary(F00)};
}

Poly extend_via_alternate_section(const RepSpec& spec, const Poly& f) {
    VarTable uv = uv_table();
    Poly u = Poly::variable(uv, 0), v = Poly::variable(uv, 1);
    // section [[0, u], [-1/u, v]], inverse [[v, -u], [1/u, 0]] = [[u v, -u^2], [1, 0]] / u
    SL2Element inv{u * v, -(u * u), Poly::constant(uv, 1), Poly(uv), kU, 1};
    return transfer_with(spec, f, inv);
}

Poly restrict_to_identity_coset(const RepSpec& spec, const Poly& F) {
    return drop_uv(spec, F.specialize({{kU, 0}, {kV, 1}}));
}

bool verify_invariance(const RepSpec& spec, const Poly& F) {
    check_names(spec);
    RepSpec ext = spec.with_standard_prepended(kU, kV);
    Poly G = F.embed(ext.coords());
    return sl2_triple(ext).annihilates(G);
}

}  // namespace gaquot
