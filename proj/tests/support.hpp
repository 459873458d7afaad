#pragma once

// Random generators and independent oracles shared by the test suites.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gaquot/derivation.hpp"
#include "gaquot/linalg.hpp"
#include "gaquot/poly.hpp"
#include "gaquot/sl2rep.hpp"

namespace testsupport {

using namespace gaquot;

inline Rational small_rational(std::mt19937& rng, int range = 5) {
    std::uniform_int_distribution<int> num(-range, range), den(1, 3);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline Poly random_poly(std::mt19937& rng, const VarTable& vars, unsigned max_degree, unsigned terms) {
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> pick(0, vars.size() ? vars.size() - 1 : 0);
    Poly p(vars);
    for (unsigned t = 0; t < terms; ++t) {
        Monomial m(vars.size(), 0);
        unsigned d = vars.size() ? deg(rng) : 0;
        for (unsigned k = 0; k < d; ++k) ++m[pick(rng)];
        p += Poly::monomial(vars, m, small_rational(rng));
    }
    return p;
}

inline VarTable table(std::size_t n, const std::string& prefix = "x") {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    return VarTable(names);
}

// Random representation of dimension <= max_dim.
inline RepSpec random_spec(std::mt19937& rng, std::size_t max_dim = 8) {
    std::uniform_int_distribution<int> kind(0, 2), k(0, 5), n(1, 3);
    std::vector<Block> blocks;
    std::size_t dim = 0;
    for (int tries = 0; tries < 6; ++tries) {
        Block b = kind(rng) == 0 ? Block::vblock(unsigned(n(rng))) : Block::sym(unsigned(k(rng)));
        std::size_t add = b.kind == Block::Kind::VBlock ? 2 * b.value : b.value + 1;
        if (dim + add > max_dim) continue;
        blocks.push_back(b);
        dim += add;
    }
    if (blocks.empty()) blocks.push_back(Block::sym(1));
    std::uniform_int_distribution<int> norm(0, 1);
    return RepSpec(blocks, norm(rng) ? Normalization::Unit : Normalization::Section5);
}

// Invariants built from catalog invariants and graded kernel elements by
// sums and products, total degree <= max_degree.
inline std::vector<Poly> invariant_pool(const RepSpec& spec, unsigned max_degree = 4) {
    Derivation d = build_derivation(spec);
    std::vector<Poly> pool;
    for (unsigned deg = 1; deg <= std::min(max_degree, 3u); ++deg)
        for (auto& p : graded_kernel_basis(d, deg)) pool.push_back(p);
    try {
        for (auto& ci : catalog_invariants(spec))
            if (ci.poly.total_degree() <= int(max_degree)) pool.push_back(ci.poly);
    } catch (const UnsupportedBlock&) {
    }
    return pool;
}

inline Poly random_invariant(std::mt19937& rng, const RepSpec& spec, const std::vector<Poly>& pool,
                             unsigned max_degree = 4) {
    const VarTable& w = spec.coords();
    Poly acc = Poly::constant(w, small_rational(rng));
    if (pool.empty()) return acc;
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> nterms(1, 3), nfactors(1, 2);
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        Poly prod = Poly::constant(w, small_rational(rng));
        int factors = nfactors(rng);
        for (int f = 0; f < factors; ++f) {
            const Poly& q = pool[pick(rng)];
            if (prod.total_degree() + q.total_degree() > int(max_degree)) break;
            prod = prod * q;
        }
        acc += prod;
    }
    return acc;
}

// dim ker(D) on degree-deg polynomials, from the weight multiset alone: for
// an sl_2-module the kernel of the raising operator has one vector per
// irreducible summand, i.e. sum over m >= 0 of N_m - N_{m+2}.
inline std::size_t kernel_dimension_by_characters(const RepSpec& spec, unsigned deg) {
    std::map<int, std::size_t> count;
    std::vector<std::size_t> all(spec.dim());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    for (const auto& m : monomials_of_degree(spec.dim(), all, deg)) {
        int wt = 0;
        for (std::size_t i = 0; i < m.size(); ++i) wt += int(m[i]) * spec.weight(i);
        ++count[wt];
    }
    std::size_t dim = 0;
    for (const auto& [wt, n] : count) {
        if (wt < 0) continue;
        auto it = count.find(wt + 2);
        dim += n - (it == count.end() ? 0 : it->second);
    }
    return dim;
}

// p in Im(D) by a rank comparison over the full monomial basis of each
// degree (no weight or block splitting). D must be degree-preserving.
inline bool in_image_by_rank(const Derivation& d, const Poly& p) {
    const std::size_t n = d.vars().size();
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    for (int deg = 0; deg <= p.total_degree(); ++deg) {
        Poly piece = p.homogeneous_part(unsigned(deg));
        if (piece.is_zero()) continue;
        auto basis = monomials_of_degree(n, all, unsigned(deg));
        std::map<Monomial, std::size_t, GrlexGreater> row;
        for (std::size_t i = 0; i < basis.size(); ++i) row[basis[i]] = i;
        Matrix a(basis.size(), basis.size()), ab(basis.size(), basis.size() + 1);
        for (std::size_t c = 0; c < basis.size(); ++c) {
            Poly img = d.apply(Poly::monomial(d.vars(), basis[c]));
            for (const auto& [m, coef] : img.terms()) {
                a(row.at(m), c) = coef;
                ab(row.at(m), c) = coef;
            }
        }
        for (const auto& [m, coef] : piece.terms()) ab(row.at(m), basis.size()) = coef;
        if (rank(a) != rank(ab)) return false;
    }
    return true;
}

// Exact 2x2 integer matrices of determinant 1, as products of elementary
// matrices.
inline std::array<long, 4> random_sl2z(std::mt19937& rng) {
    std::uniform_int_distribution<int> e(-2, 2), steps(1, 4);
    std::array<long, 4> m{1, 0, 0, 1};
    int s = steps(rng);
    for (int i = 0; i < s; ++i) {
        long t = e(rng);
        if (i % 2 == 0) m = {m[0] + t * m[2], m[1] + t * m[3], m[2], m[3]};
        else m = {m[0], m[1], m[2] + t * m[0], m[3] + t * m[1]};
    }
    return m;
}

struct Malformed {
    const char* text;
    std::size_t position;
};

inline VarTable corpus_table() { return VarTable{"w0", "w1", "w2", "w3"}; }

// Rejected inputs over corpus_table(), with the offset the error points at.
inline std::vector<Malformed> malformed_corpus() {
    return {{"w0 +", 4},     {"", 0},      {"(w0 + w1", 8}, {"w0 + w1)", 7}, {"w0 ** w1", 4}, {"w0^-1", 3},
            {"w0^w1", 3},    {"1/0", 2},   {"w0 $ w1", 3},  {"w0 w1", 3},    {"w7", 0},       {"2.5*w0", 1},
            {"w0^", 3},      {"w0^1234567", 3}, {"*w0", 0}, {"()", 1}};
}

}  // namespace testsupport
