#include "gaquot/derivation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "gaquot/linalg.hpp"

namespace gaquot {

Derivation::Derivation(VarTable vars, std::vector<Poly> images)
    : vars_(std::move(vars)), images_(std::move(images)) {
    if (images_.size() != vars_.size()) throw Error("derivation: image count does not match variable table");
    for (auto& img : images_) {
        if (img.vars() != vars_) {
            if (img.is_zero()) img = Poly(vars_);
            else throw VarTableMismatch("derivation: image over a different variable table");
        }
        for (const auto& [m, c] : img.terms())
            if (total_degree(m) != 1) graded_linear_ = false;
    }

    std::vector<std::size_t> parent(vars_.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t i) {
        return parent[i] == i ? i : parent[i] = root(parent[i]);
    };
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (auto j : images_[i].support()) parent[root(i)] = root(j);
    block_.assign(vars_.size(), 0);
    std::map<std::size_t, std::size_t> ids;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto [it, inserted] = ids.try_emplace(root(i), ids.size());
        block_[i] = it->second;
    }
    block_count_ = ids.size();
}

Derivation Derivation::from_map(const VarTable& vars, const std::map<std::string, Poly>& images) {
    std::vector<Poly> imgs(vars.size(), Poly(vars));
    for (const auto& [name, p] : images) imgs[vars.index(name)] = p;
    return Derivation(vars, std::move(imgs));
}

namespace {

int monomial_weight(const Monomial& m, const std::vector<int>& w) {
    int s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) s += static_cast<int>(m[i]) * w[i];
    return s;
}

}  // namespace

Derivation Derivation::with_weights(std::vector<int> weights) const {
    if (weights.size() != vars_.size()) throw Error("derivation: weight vector has wrong length");
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (const auto& [m, c] : images_[i].terms())
            if (monomial_weight(m, weights) != weights[i] + 2)
                throw Error("derivation: image of '" + vars_.name(i) + "' does not raise weight by 2");
    Derivation d = *this;
    d.weights_ = std::move(weights);
    return d;
}

Poly Derivation::apply(const Poly& p) const {
    if (p.vars() != vars_) throw VarTableMismatch("derivation applied to a polynomial over another table");
    Poly r(vars_);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (images_[i].is_zero() || !p.involves(i)) continue;
        r += p.derivative(i) * images_[i];
    }
    return r;
}

Derivation Derivation::commutator(const Derivation& other) const {
    if (other.vars_ != vars_) throw VarTableMismatch("commutator of derivations over different tables");
    std::vector<Poly> imgs;
    imgs.reserve(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i)
        imgs.push_back(apply(other.images_[i]) - other.apply(images_[i]));
    return Derivation(vars_, std::move(imgs));
}

bool Derivation::operator==(const Derivation& other) const {
    return vars_ == other.vars_ && images_ == other.images_;
}

Poly exp_action(const Derivation& d, const Poly& p, const std::string& t, unsigned iteration_bound) {
    if (p.vars().contains(t)) throw Error("exp_action: parameter '" + t + "' already in the table");
    VarTable ext = p.vars().with_appended(t);
    Poly tv = Poly::variable(ext, t);
    Poly result(ext);
    Poly term = p;  // D^m(p) / m!
    Poly tpow = Poly::constant(ext, 1);
    for (unsigned m = 0; !term.is_zero(); ++m) {
        if (m > iteration_bound)
            throw NotNilpotent("exp_action: D^m(p) non-zero past the iteration bound");
        result += term.embed(ext) * tpow;
        term = d.apply(term) * Rational(1, m + 1);
        tpow *= tv;
    }
    return result;
}

std::vector<Monomial> monomials_of_degree(std::size_t n, const std::vector<std::size_t>& vars,
                                          unsigned deg) {
    std::vector<Monomial> out;
    Monomial m(n, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t k, unsigned left) {
        if (k + 1 == vars.size()) {
            m[vars[k]] = left;
            out.push_back(m);
            m[vars[k]] = 0;
            return;
        }
        for (unsigned e = left + 1; e-- > 0;) {
            m[vars[k]] = e;
            rec(k + 1, left - e);
        }
        m[vars[k]] = 0;
    };
    if (vars.empty()) {
        if (deg == 0) out.push_back(m);
        return out;
    }
    rec(0, deg);
    return out;
}

namespace {

// Multidegree over the derivation's blocks plus (when known) torus weight.
struct GradeKey {
    std::vector<unsigned> multideg;
    int weight = 0;
    auto operator<=>(const GradeKey&) const = default;
};

GradeKey grade_of(const Derivation& d, const Monomial& m) {
    GradeKey k;
    k.multideg.assign(d.block_count(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) k.multideg[d.blocks()[i]] += m[i];
    if (d.weights()) k.weight = monomial_weight(m, *d.weights());
    return k;
}

std::vector<std::vector<std::size_t>> block_variables(const Derivation& d) {
    std::vector<std::vector<std::size_t>> out(d.block_count());
    for (std::size_t i = 0; i < d.vars().size(); ++i) out[d.blocks()[i]].push_back(i);
    return out;
}

// All monomials with the given block multidegree.
std::vector<Monomial> monomials_of_multidegree(const Derivation& d, const std::vector<unsigned>& md) {
    auto bv = block_variables(d);
    std::vector<Monomial> acc{Monomial(d.vars().size(), 0)};
    for (std::size_t b = 0; b < md.size(); ++b) {
        auto part = monomials_of_degree(d.vars().size(), bv[b], md[b]);
        std::vector<Monomial> next;
        next.reserve(acc.size() * part.size());
        for (const auto& a : acc) {
            for (const auto& p : part) {
                Monomial m = a;
                for (std::size_t i = 0; i < m.size(); ++i) m[i] += p[i];
                next.push_back(std::move(m));
            }
        }
        acc = std::move(next);
    }
    return acc;
}

// Solves D(x) = target over span(domain); returns x or nullopt.
std::optional<Poly> solve_preimage(const Derivation& d, const std::vector<Monomial>& domain,
                                   const Poly& target) {
    const VarTable& vars = d.vars();
    std::vector<Poly> images;
    images.reserve(domain.size());
    std::map<Monomial, std::size_t, GrlexGreater> rows;
    for (const auto& m : domain) {
        images.push_back(d.apply(Poly::monomial(vars, m)));
        for (const auto& [tm, c] : images.back().terms()) rows.try_emplace(tm, 0);
    }
    for (const auto& [tm, c] : target.terms()) rows.try_emplace(tm, 0);
    std::size_t r = 0;
    for (auto& [tm, idx] : rows) idx = r++;

    Matrix a(rows.size(), domain.size());
    for (std::size_t j = 0; j < domain.size(); ++j)
        for (const auto& [tm, c] : images[j].terms()) a(rows.at(tm), j) = c;
    Vector b(rows.size());
    for (const auto& [tm, c] : target.terms()) b[rows.at(tm)] = c;

    auto x = solve(a, b);
    if (!x) return std::nullopt;
    Poly::TermMap terms;
    for (std::size_t j = 0; j < domain.size(); ++j)
        if ((*x)[j] != 0) terms.emplace(domain[j], (*x)[j]);
    return Poly(vars, std::move(terms));
}

std::map<GradeKey, Poly> split_by_grade(const Derivation& d, const Poly& p) {
    std::map<GradeKey, Poly> pieces;
    for (const auto& [m, c] : p.terms()) {
        auto [it, inserted] = pieces.try_emplace(grade_of(d, m), Poly(p.vars()));
        it->second += Poly::monomial(p.vars(), m, c);
    }
    return pieces;
}

}  // namespace

std::optional<Poly> graded_image_membership(const Derivation& d, const Poly& p) {
    if (!d.graded_linear()) throw Error("graded_image_membership needs a graded-linear derivation");
    if (p.vars() != d.vars()) throw VarTableMismatch("graded_image_membership: variable tables differ");
    Poly preimage(d.vars());
    for (const auto& [key, piece] : split_by_grade(d, p)) {
        if (std::all_of(key.multideg.begin(), key.multideg.end(), [](unsigned e) { return e == 0; }))
            return std::nullopt;  // non-zero constant
        auto domain = monomials_of_multidegree(d, key.multideg);
        if (d.weights()) {
            std::erase_if(domain, [&](const Monomial& m) {
                return monomial_weight(m, *d.weights()) != key.weight - 2;
            });
        }
        auto x = solve_preimage(d, domain, piece);
        if (!x) return std::nullopt;
        preimage += *x;
    }
    return preimage;
}

std::optional<PowerInImage> power_in_image(const Derivation& d, const Poly& h, unsigned kmax) {
    Poly hk = Poly::constant(h.vars(), 1);
    for (unsigned k = 1; k <= kmax; ++k) {
        hk *= h;
        if (hk.is_zero()) return PowerInImage{k, Poly(h.vars())};
        if (auto pre = graded_image_membership(d, hk)) return PowerInImage{k, std::move(*pre)};
    }
    return std::nullopt;
}

std::vector<Poly> graded_kernel_basis(const Derivation& d, unsigned deg) {
    if (!d.graded_linear()) throw Error("graded_kernel_basis needs a graded-linear derivation");
    const VarTable& vars = d.vars();
    std::vector<Poly> basis;
    // every multidegree with total `deg` over the blocks
    std::vector<unsigned> md(d.block_count(), 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t b, unsigned left) {
        if (b + 1 >= md.size()) {
            if (!md.empty()) md.back() = left;
            auto mons = monomials_of_multidegree(d, md);
            std::map<int, std::vector<Monomial>> by_weight;
            for (auto& m : mons) by_weight[grade_of(d, m).weight].push_back(m);
            // by_weight is ordered by weight; emit highest weight first
            for (auto it = by_weight.rbegin(); it != by_weight.rend(); ++it) {
                const auto& domain = it->second;
                std::vector<Poly> images;
                std::map<Monomial, std::size_t, GrlexGreater> rows;
                for (const auto& m : domain) {
                    images.push_back(d.apply(Poly::monomial(vars, m)));
                    for (const auto& [tm, c] : images.back().terms()) rows.try_emplace(tm, 0);
                }
                std::size_t r = 0;
                for (auto& [tm, idx] : rows) idx = r++;
                Matrix a(rows.size(), domain.size());
                for (std::size_t j = 0; j < domain.size(); ++j)
                    for (const auto& [tm, c] : images[j].terms()) a(rows.at(tm), j) = c;
                for (const auto& v : nullspace(a)) {
                    Poly::TermMap terms;
                    for (std::size_t j = 0; j < domain.size(); ++j)
                        if (v[j] != 0) terms.emplace(domain[j], v[j]);
                    basis.push_back(Poly(vars, std::move(terms)).primitive());
                }
            }
            return;
        }
        for (unsigned e = left + 1; e-- > 0;) {
            md[b] = e;
            rec(b + 1, left - e);
        }
    };
    if (md.empty()) return basis;
    rec(0, deg);
    return basis;
}

namespace {

// Span of polynomials kept with distinct, unit leading monomials.
class Span {
public:
    // Adds p; returns false when p already lies in the span.
    bool add(Poly p) {
        p = reduce(std::move(p));
        if (p.is_zero()) return false;
        Rational lc = p.leading_coefficient();
        p *= 1 / lc;
        Monomial lm = p.leading_monomial();
        basis_.emplace(std::move(lm), std::move(p));
        return true;
    }

private:
    Poly reduce(Poly p) const {
        for (const auto& [lm, b] : basis_) {
            Rational c = p.coefficient(lm);
            if (c != 0) p -= b * c;
        }
        return p;
    }

    std::map<Monomial, Poly, GrlexGreater> basis_;
};

}  // namespace

std::vector<Poly> graded_kernel_generators(const Derivation& d, unsigned maxdeg) {
    std::vector<Poly> gens;
    for (unsigned deg = 1; deg <= maxdeg; ++deg) {
        Span span;
        // products of earlier generators landing in this degree
        std::vector<Poly> earlier = gens;
        std::function<void(std::size_t, unsigned, const Poly&)> rec =
            [&](std::size_t start, unsigned left, const Poly& acc) {
                if (left == 0) {
                    span.add(acc);
                    return;
                }
                for (std::size_t i = start; i < earlier.size(); ++i) {
                    unsigned gd = static_cast<unsigned>(earlier[i].total_degree());
                    if (gd <= left) rec(i, left - gd, acc * earlier[i]);
                }
            };
        rec(0, deg, Poly::constant(d.vars(), 1));
        for (auto& k : graded_kernel_basis(d, deg))
            if (span.add(k)) gens.push_back(std::move(k));
    }
    std::stable_sort(gens.begin(), gens.end(), [](const Poly& a, const Poly& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        return GrlexGreater{}(a.leading_monomial(), b.leading_monomial());
    });
    return gens;
}

std::map<std::string, std::string> Graph::free_coordinates() const {
    std::map<std::string, std::string> out;  // z -> w
    for (const auto& [w, h] : images) {
        if (h.term_count() != 1 || h.leading_coefficient() != 1 || total_degree(h.leading_monomial()) != 1)
            continue;
        std::size_t zi = h.support().front();
        out.try_emplace(z.name(zi), w);
    }
    return out;
}

Derivation restrict_to_graph(const Derivation& d, const Graph& graph) {
    const VarTable& w = d.vars();
    std::vector<Poly> images(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto it = graph.images.find(w.name(i));
        if (it == graph.images.end())
            throw InconsistentGraph("graph gives no image for coordinate '" + w.name(i) + "'");
        if (it->second.vars() != graph.z) throw VarTableMismatch("graph image not over the z table");
        images[i] = it->second;
    }
    for (const auto& [name, h] : graph.images)
        if (!w.contains(name)) throw InconsistentGraph("graph names unknown coordinate '" + name + "'");

    auto pull = [&](const Poly& p) { return p.substitute(std::span<const Poly>(images)); };

    auto free = graph.free_coordinates();
    std::vector<Poly> dz(graph.z.size(), Poly(graph.z));
    for (std::size_t j = 0; j < graph.z.size(); ++j) {
        auto it = free.find(graph.z.name(j));
        if (it == free.end())
            throw InconsistentGraph("z-variable '" + graph.z.name(j) + "' is not identified with a coordinate");
        dz[j] = pull(d.image(it->second));
    }
    Derivation dx(graph.z, std::move(dz));
    for (std::size_t i = 0; i < w.size(); ++i) {
        Poly lhs = pull(d.image(i));
        Poly rhs = dx.apply(images[i]);
        if (lhs != rhs)
            throw InconsistentGraph("graph is not invariant: chain rule fails for '" + w.name(i) + "' (" +
                                    lhs.str() + " != " + rhs.str() + ")");
    }
    return dx;
}

std::optional<Slice> slice_search(const Derivation& d, unsigned degree_bound) {
    const VarTable& vars = d.vars();
    std::vector<std::size_t> all(vars.size());
    std::iota(all.begin(), all.end(), 0);
    Poly one = Poly::constant(vars, 1);
    std::vector<Monomial> domain;
    for (unsigned deg = 1; deg <= degree_bound; ++deg) {
        for (auto& m : monomials_of_degree(vars.size(), all, deg)) domain.push_back(std::move(m));
        if (auto s = solve_preimage(d, domain, one)) return Slice{std::move(*s), deg};
    }
    return std::nullopt;
}

}  // namespace gaquot
