#include "gaquot/sl2rep.hpp"

#include <map>

#include "gaquot/linalg.hpp"

namespace gaquot {

namespace {

std::vector<unsigned> expand(const std::vector<Block>& blocks) {
    std::vector<unsigned> out;
    for (const auto& b : blocks) {
        if (b.kind == Block::Kind::Sym) {
            out.push_back(b.value);
        } else {
            if (b.value == 0) throw Error("V-block needs at least one copy");
            out.insert(out.end(), b.value, 1u);
        }
    }
    if (out.empty()) throw Error("representation has no summands");
    return out;
}

mpz_class binomial(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// w_i corresponds to basis_scale(i) * a^{k-i} b^i in the binary-form model
// where D acts as a d/db.
Rational basis_scale(Normalization norm, unsigned k, unsigned i) {
    if (norm == Normalization::Section5) return Rational(binomial(k, i));
    return Rational(mpz_class(1), factorial(i));
}

}  // namespace

RepSpec::RepSpec(std::vector<Block> blocks, Normalization norm, unsigned first_index, std::string prefix)
    : blocks_(std::move(blocks)), norm_(norm) {
    summands_ = expand(blocks_);
    std::size_t n = 0;
    for (auto k : summands_) n += k + 1;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(first_index + i));
    init(std::move(names));
}

RepSpec::RepSpec(std::vector<Block> blocks, Normalization norm, std::vector<std::string> names)
    : blocks_(std::move(blocks)), norm_(norm) {
    summands_ = expand(blocks_);
    init(std::move(names));
}

void RepSpec::init(std::vector<std::string> names) {
    std::size_t n = 0;
    for (auto k : summands_) n += k + 1;
    if (names.size() != n)
        throw Error("representation needs " + std::to_string(n) + " coordinate names, got " +
                    std::to_string(names.size()));
    coords_ = VarTable(std::move(names));
    std::size_t offset = 0;
    for (std::size_t j = 0; j < summands_.size(); ++j) {
        unsigned k = summands_[j];
        offsets_.push_back(offset);
        for (unsigned i = 0; i <= k; ++i) {
            weights_.push_back(static_cast<int>(k) - 2 * static_cast<int>(i));
            summand_of_.push_back(j);
            inner_.push_back(i);
        }
        offset += k + 1;
    }
}

RepSpec RepSpec::with_standard_prepended(const std::string& u, const std::string& v) const {
    std::vector<Block> blocks{Block::sym(1)};
    blocks.insert(blocks.end(), blocks_.begin(), blocks_.end());
    std::vector<std::string> names{u, v};
    names.insert(names.end(), coords_.names().begin(), coords_.names().end());
    return RepSpec(std::move(blocks), norm_, std::move(names));
}

Derivation build_derivation(const RepSpec& spec) {
    const VarTable& vars = spec.coords();
    std::vector<Poly> images(vars.size(), Poly(vars));
    for (std::size_t j = 0; j < spec.summands().size(); ++j) {
        unsigned k = spec.summands()[j];
        std::size_t b = spec.summand_offset(j);
        for (unsigned i = 0; i < k; ++i) {
            Rational c = spec.normalization() == Normalization::Section5 ? Rational(k - i) : Rational(1);
            images[b + i + 1] = Poly::variable(vars, b + i) * c;
        }
    }
    return Derivation(vars, std::move(images)).with_weights(spec.weights());
}

SL2Element SL2Element::identity(const VarTable& params) {
    return {Poly::constant(params, 1), Poly(params), Poly(params), Poly::constant(params, 1), "", 0};
}

GroupSubstitution group_substitution(const RepSpec& spec, const SL2Element& m) {
    const VarTable& params = m.params();
    for (const Poly* e : {&m.b, &m.c, &m.d})
        if (e->vars() != params) throw VarTableMismatch("group element entries over different tables");
    Poly det = m.a * m.d - m.b * m.c;
    Poly expected = Poly::constant(params, 1);
    if (m.power > 0) expected = Poly::variable(params, m.denom_var).pow(2 * m.power);
    if (det != expected) throw NotUnimodular("group element does not have determinant 1: det = " + det.str());

    GroupSubstitution out;
    out.vars = params.concat(spec.coords());
    out.denom_var = m.denom_var;
    const VarTable& vars = out.vars;
    Poly A = m.a.embed(vars), B = m.b.embed(vars), C = m.c.embed(vars), D = m.d.embed(vars);
    out.numerators.assign(spec.dim(), Poly(vars));
    out.denominator_powers.assign(spec.dim(), 0);

    for (std::size_t j = 0; j < spec.summands().size(); ++j) {
        unsigned k = spec.summands()[j];
        std::size_t off = spec.summand_offset(j);
        std::vector<Poly> apow{Poly::constant(vars, 1)}, bpow = apow, cpow = apow, dpow = apow;
        for (unsigned e = 1; e <= k; ++e) {
            apow.push_back(apow.back() * A);
            bpow.push_back(bpow.back() * B);
            cpow.push_back(cpow.back() * C);
            dpow.push_back(dpow.back() * D);
        }
        for (unsigned i = 0; i <= k; ++i) {
            // (A x + B y)^{k-i} (C x + D y)^i, coefficient of x^{k-j} y^j
            std::vector<Poly> coef(k + 1, Poly(vars));
            for (unsigned r = 0; r <= k - i; ++r) {
                Poly p1 = apow[k - i - r] * bpow[r] * Rational(binomial(k - i, r));
                for (unsigned s = 0; s <= i; ++s) {
                    Poly p2 = cpow[i - s] * dpow[s] * Rational(binomial(i, s));
                    coef[r + s] += p1 * p2;
                }
            }
            Poly img(vars);
            Rational ci = basis_scale(spec.normalization(), k, i);
            for (unsigned jj = 0; jj <= k; ++jj) {
                if (coef[jj].is_zero()) continue;
                Rational scale = ci / basis_scale(spec.normalization(), k, jj);
                img += coef[jj] * Poly::variable(vars, params.size() + off + jj) * scale;
            }
            out.numerators[off + i] = std::move(img);
            out.denominator_powers[off + i] = k * m.power;
        }
    }
    return out;
}

std::optional<Poly> GroupSubstitution::apply(const Poly& p) const {
    if (p.vars().size() != numerators.size())
        throw VarTableMismatch("group substitution applied to a polynomial over another table");
    unsigned top = 0;
    for (const auto& [m, c] : p.terms()) {
        unsigned e = 0;
        for (std::size_t i = 0; i < m.size(); ++i) e += m[i] * denominator_powers[i];
        top = std::max(top, e);
    }
    std::vector<std::vector<Poly>> cache(numerators.size());
    auto power = [&](std::size_t i, unsigned e) -> const Poly& {
        auto& c = cache[i];
        if (c.empty()) c.push_back(Poly::constant(vars, 1));
        while (c.size() <= e) c.push_back(c.back() * numerators[i]);
        return c[e];
    };
    std::vector<Poly> dpow{Poly::constant(vars, 1)};
    Poly dv = top > 0 ? Poly::variable(vars, denom_var) : Poly::constant(vars, 1);
    while (dpow.size() <= top) dpow.push_back(dpow.back() * dv);

    Poly num(vars);
    for (const auto& [m, c] : p.terms()) {
        Poly t = Poly::constant(vars, c);
        unsigned e = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            t *= power(i, m[i]);
            e += m[i] * denominator_powers[i];
        }
        num += t * dpow[top - e];
    }
    if (top == 0) return num;
    return exact_divide(num, dpow[top]);
}

namespace {

Derivation scaled(const Derivation& d, const Rational& s) {
    std::vector<Poly> imgs;
    for (const auto& p : d.images()) imgs.push_back(p * s);
    return Derivation(d.vars(), std::move(imgs));
}

// t-derivative at t = 0 of the substitution for [[1, 0], [t, 1]] must be D.
void check_one_parameter_subgroup(const RepSpec& spec, const Derivation& d) {
    VarTable params{"t__"};
    Poly one = Poly::constant(params, 1), t = Poly::variable(params, 0);
    auto sub = group_substitution(spec, SL2Element{one, Poly(params), t, one, "", 0});
    for (std::size_t i = 0; i < spec.dim(); ++i) {
        Poly dt = sub.numerators[i].derivative(0).specialize({{"t__", 0}});
        Poly expected = d.image(i).embed(sub.vars);
        if (dt != expected)
            throw Error("one-parameter subgroup does not differentiate to D on '" + spec.coords().name(i) + "'");
    }
}

}  // namespace

bool Sl2Triple::annihilates(const Poly& p) const {
    return e.apply(p).is_zero() && f.apply(p).is_zero() && h.apply(p).is_zero();
}

bool Sl2Triple::brackets_hold() const {
    return h.commutator(e) == scaled(e, 2) && h.commutator(f) == scaled(f, -2) && e.commutator(f) == h;
}

Sl2Triple sl2_triple(const RepSpec& spec) {
    const VarTable& vars = spec.coords();
    const std::size_t n = vars.size();
    Derivation e = build_derivation(spec);
    check_one_parameter_subgroup(spec, e);

    std::vector<Poly> himg;
    for (std::size_t i = 0; i < n; ++i) himg.push_back(Poly::variable(vars, i) * Rational(spec.weight(i)));
    Derivation h(vars, std::move(himg));

    // f(w_j) = sum a_{jl} w_l over weight(l) = weight(j) - 2
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> unknown;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l)
            if (spec.weight(l) == spec.weight(j) - 2) unknown.emplace(std::make_pair(j, l), unknown.size());

    // e linear: e(w_i) = sum_m E[i][m] w_m
    std::vector<std::vector<Rational>> E(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [m, c] : e.image(i).terms())
            for (std::size_t v = 0; v < n; ++v)
                if (m[v] == 1) E[i][v] = c;

    // [e, f](w_i) = e(f(w_i)) - f(e(w_i)) = h(w_i), compared coefficientwise on w_r
    Matrix a(n * n, unknown.size());
    Vector rhs(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [key, idx] : unknown) {
            auto [j, l] = key;
            if (j == i)  // a_{il} e(w_l)
                for (std::size_t r = 0; r < n; ++r) a(i * n + r, idx) += E[l][r];
            if (E[i][j] != 0)  // - E[i][j] a_{jl} w_l
                a(i * n + l, idx) -= E[i][j];
        }
        rhs[i * n + i] = spec.weight(i);
    }
    auto sol = solve(a, rhs);
    if (!sol) throw Error("sl2 triple: no partner for D satisfies [e, f] = h");
    std::vector<Poly> fimg(n, Poly(vars));
    for (const auto& [key, idx] : unknown) {
        auto [j, l] = key;
        if ((*sol)[idx] != 0) fimg[j] += Poly::variable(vars, l) * (*sol)[idx];
    }
    Sl2Triple triple{e, Derivation(vars, std::move(fimg)), h};
    if (!triple.brackets_hold()) throw Error("sl2 triple: solved operator violates a bracket relation");
    return triple;
}

std::vector<std::string> nonstable_coordinates(const RepSpec& spec) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < spec.dim(); ++i)
        if (spec.weight(i) > 0) out.push_back(spec.coords().name(i));
    return out;
}

namespace {

// Discriminant (up to a non-zero scalar) of the binary form attached to a
// Sym^k summand, as the resultant of its two partial derivatives.
Poly binary_discriminant(const RepSpec& spec, std::size_t summand) {
    const VarTable& vars = spec.coords();
    unsigned k = spec.summands()[summand];
    std::size_t off = spec.summand_offset(summand);
    // Q(X, Y) = sum_i a_i X^i Y^{k-i}
    std::vector<Poly> a;
    for (unsigned i = 0; i <= k; ++i) {
        Rational s = Rational(binomial(k, i)) / basis_scale(spec.normalization(), k, i);
        if (i % 2 == 1) s = -s;
        a.push_back(Poly::variable(vars, off + i) * s);
    }
    const unsigned n = k - 1;
    std::vector<Poly> qx(n + 1, Poly(vars)), qy(n + 1, Poly(vars));  // index = power of X
    for (unsigned r = 0; r <= n; ++r) {
        qx[r] = a[r + 1] * Rational(r + 1);
        qy[r] = a[r] * Rational(k - r);
    }
    std::vector<std::vector<Poly>> syl(2 * n, std::vector<Poly>(2 * n, Poly(vars)));
    for (unsigned row = 0; row < n; ++row) {
        for (unsigned r = 0; r <= n; ++r) {
            syl[row][row + (n - r)] = qx[r];
            syl[n + row][row + (n - r)] = qy[r];
        }
    }
    return determinant(std::move(syl), vars).primitive();
}

}  // namespace

std::vector<CatalogInvariant> catalog_invariants(const RepSpec& spec) {
    const VarTable& vars = spec.coords();
    std::vector<CatalogInvariant> out;
    std::vector<std::size_t> linear;
    for (std::size_t j = 0; j < spec.summands().size(); ++j)
        if (spec.summands()[j] == 1) linear.push_back(j);
    for (std::size_t p = 0; p < linear.size(); ++p) {
        for (std::size_t q = p + 1; q < linear.size(); ++q) {
            std::size_t i0 = spec.summand_offset(linear[p]), j0 = spec.summand_offset(linear[q]);
            Poly minor = Poly::variable(vars, i0) * Poly::variable(vars, j0 + 1) -
                         Poly::variable(vars, i0 + 1) * Poly::variable(vars, j0);
            out.push_back({std::move(minor), true,
                           "minor(" + std::to_string(linear[p]) + "," + std::to_string(linear[q]) + ")"});
        }
    }
    for (std::size_t j = 0; j < spec.summands().size(); ++j) {
        unsigned k = spec.summands()[j];
        if (k == 3 || k == 5)
            out.push_back({binary_discriminant(spec, j), true,
                           "disc(Sym^" + std::to_string(k) + " #" + std::to_string(j) + ")"});
    }
    if (out.empty())
        throw UnsupportedBlock("no catalog invariants: need two Sym^1 summands or a Sym^3 / Sym^5 summand");
    Sl2Triple triple = sl2_triple(spec);
    for (const auto& inv : out)
        if (!triple.annihilates(inv.poly))
            throw Error("catalog invariant " + inv.origin + " is not sl2-invariant");
    return out;
}

}  // namespace gaquot
