#ifndef GAQUOT_UNIVARIATE_HPP
#define GAQUOT_UNIVARIATE_HPP

#include <vector>

#include "gaquot/poly.hpp"

namespace gaquot {

// Dense coefficients, index = power. Trailing zeros are stripped.
using DenseUPoly = std::vector<Rational>;

// Coefficients of a polynomial in at most one variable. Throws if more
// than one variable occurs.
DenseUPoly to_dense(const Poly& p);

DenseUPoly upoly_gcd(DenseUPoly a, DenseUPoly b);  // monic, or empty for gcd(0,0)

struct RootCount {
    unsigned distinct_roots;  // over the algebraic closure
    bool squarefree;
};

// Number of distinct roots of a non-constant univariate polynomial:
// deg(phi) - deg(gcd(phi, phi')).
RootCount squarefree_distinct_root_count(const Poly& phi);

}  // namespace gaquot

#endif
