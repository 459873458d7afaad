#include "gaquot/univariate.hpp"

namespace gaquot {

namespace {

void trim(DenseUPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// a mod b, b non-zero
DenseUPoly remainder(DenseUPoly a, const DenseUPoly& b) {
    while (a.size() >= b.size()) {
        Rational factor = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        trim(a);
    }
    return a;
}

}  // namespace

DenseUPoly to_dense(const Poly& p) {
    auto vars = p.support();
    if (vars.size() > 1) throw Error("expected a univariate polynomial, got '" + p.str() + "'");
    DenseUPoly out;
    for (const auto& [m, c] : p.terms()) {
        unsigned e = vars.empty() ? 0 : m[vars[0]];
        if (out.size() <= e) out.resize(e + 1);
        out[e] = c;
    }
    trim(out);
    return out;
}

DenseUPoly upoly_gcd(DenseUPoly a, DenseUPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        DenseUPoly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

RootCount squarefree_distinct_root_count(const Poly& phi) {
    DenseUPoly f = to_dense(phi);
    if (f.size() < 2) throw Error("distinct root count needs a non-constant polynomial");
    DenseUPoly df(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) df[i - 1] = f[i] * static_cast<unsigned long>(i);
    DenseUPoly g = upoly_gcd(f, df);
    unsigned gdeg = static_cast<unsigned>(g.size() - 1);
    unsigned deg = static_cast<unsigned>(f.size() - 1);
    return {deg - gdeg, gdeg == 0};
}

}  // namespace gaquot
